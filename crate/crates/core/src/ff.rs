//! Finite fields F_{p^k} with exact table-backed arithmetic.
//!
//! Elements are handled as integer encodings `enc(e) = sum coeffs[i] * p^i`
//! of their coefficient vector with respect to the power basis of a fixed
//! monic irreducible modulus. The encoding is the single I/O representation
//! of field elements everywhere in this crate.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest field size this crate will allocate tables for.
pub const MAX_FIELD_SIZE: u64 = 1 << 20;

// ---------------------------------------------------------------------------
// integers
// ---------------------------------------------------------------------------

/// Deterministic primality test by trial division (desk-scale inputs).
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn pow_mod(mut base: u64, mut exp: u64, modulus: u64) -> u64 {
    let mut acc = 1u64;
    base %= modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % modulus;
        }
        base = base * base % modulus;
        exp >>= 1;
    }
    acc
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Binomial coefficient mod a prime, via the digit-wise product of
/// base-p digits. Returns 0 when `i > n`.
pub fn binom_mod_p(n: u64, i: u64, p: u64) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if i > n {
        return Ok(0);
    }
    let mut n = n;
    let mut i = i;
    let mut acc = 1u64;
    while i > 0 || n > 0 {
        let nd = n % p;
        let id = i % p;
        if id > nd {
            return Ok(0);
        }
        acc = acc * small_binom_mod(nd, id, p) % p;
        n /= p;
        i /= p;
    }
    Ok(acc)
}

/// binom(a, b) mod p for 0 <= b <= a < p.
fn small_binom_mod(a: u64, b: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    for j in 1..=b {
        acc = acc * ((a - b + j) % p) % p;
        acc = acc * pow_mod(j, p - 2, p) % p;
    }
    acc
}

// ---------------------------------------------------------------------------
// polynomials over F_p (dense, low degree first)
// ---------------------------------------------------------------------------

/// Drop trailing zero coefficients.
pub fn fp_trim(f: &mut Vec<u64>) {
    while f.len() > 1 && *f.last().unwrap() == 0 {
        f.pop();
    }
}

pub fn fp_degree(f: &[u64]) -> usize {
    let mut d = f.len();
    while d > 1 && f[d - 1] == 0 {
        d -= 1;
    }
    d - 1
}

pub fn fp_is_monic(f: &[u64]) -> bool {
    !f.is_empty() && f[fp_degree(f)] == 1 && fp_degree(f) >= 1
}

pub fn fp_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + ai * bj) % p;
        }
    }
    fp_trim(&mut out);
    out
}

/// Remainder of `a` divided by monic `m`, over F_p.
pub fn fp_rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let dm = fp_degree(m);
    let mut r: Vec<u64> = a.to_vec();
    fp_trim(&mut r);
    while fp_degree(&r) >= dm && !(r.len() == 1 && r[0] == 0) {
        let dr = fp_degree(&r);
        let lead = r[dr];
        if lead != 0 {
            let shift = dr - dm;
            for i in 0..=dm {
                let sub = lead * m[i] % p;
                r[shift + i] = (r[shift + i] + p * p - sub) % p;
            }
        }
        fp_trim(&mut r);
        if dr == 0 {
            break;
        }
    }
    r
}

/// Exact irreducibility test over F_p by trial division with every
/// monic polynomial of degree up to deg(f)/2.
pub fn is_irreducible(p: u64, f: &[u64]) -> Result<bool> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if !fp_is_monic(f) {
        return Err(Error::NotMonic);
    }
    let d = fp_degree(f);
    if d == 1 {
        return Ok(true);
    }
    for dd in 1..=d / 2 {
        // all monic divisor candidates of degree dd
        let count = p.pow(dd as u32);
        for enc in 0..count {
            let mut g = enc_to_digits(enc, p, dd);
            g.push(1);
            let r = fp_rem(f, &g, p);
            if r.len() == 1 && r[0] == 0 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The monic irreducible polynomial of degree k over F_p whose
/// non-leading coefficient vector has the smallest integer encoding.
pub fn find_irreducible(p: u64, k: usize) -> Result<Vec<u64>> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if k == 0 {
        return Err(Error::InvalidParameter("degree must be >= 1".into()));
    }
    let count = p.pow(k as u32);
    for enc in 0..count {
        let mut f = enc_to_digits(enc, p, k);
        f.push(1);
        if is_irreducible(p, &f)? {
            return Ok(f);
        }
    }
    Err(Error::Internal(format!(
        "no irreducible polynomial of degree {k} over F_{p}"
    )))
}

/// Smallest-encoding monic irreducible of degree k over F_p whose class
/// of x generates the multiplicative group of F_{p^k}.
pub fn find_primitive_modulus(p: u64, k: usize) -> Result<Vec<u64>> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let count = p.pow(k as u32);
    for enc in 0..count {
        let mut f = enc_to_digits(enc, p, k);
        f.push(1);
        if !is_irreducible(p, &f)? {
            continue;
        }
        let field = Fq::with_modulus(p, k, f.clone())?;
        // class of x; for k = 1 this is -f[0]
        let x = if k == 1 { (p - f[0] % p) % p } else { p };
        if x != 0 && field.order(x)? == field.size() - 1 {
            return Ok(f);
        }
    }
    Err(Error::Internal(format!(
        "no primitive polynomial of degree {k} over F_{p}"
    )))
}

pub fn enc_to_digits(mut enc: u64, base: u64, len: usize) -> Vec<u64> {
    let mut out = vec![0u64; len];
    for slot in out.iter_mut() {
        *slot = enc % base;
        enc /= base;
    }
    out
}

pub fn digits_to_enc(digits: &[u64], base: u64) -> u64 {
    let mut enc = 0u64;
    for &d in digits.iter().rev() {
        enc = enc * base + d;
    }
    enc
}

// ---------------------------------------------------------------------------
// the field F_{p^k}
// ---------------------------------------------------------------------------

/// Description of the field F_{p^k}: prime, degree, modulus, and the
/// discrete-log tables built at construction time.
pub struct Fq {
    p: u64,
    k: usize,
    modulus: Vec<u64>,
    size: u64,
    /// exp[i] = enc(g^i) for 0 <= i < 2(size-1); doubled so a log-sum
    /// lookup needs no reduction.
    exp: Vec<u64>,
    /// log[enc] for enc >= 1; log[exp[i]] = i for i < size-1.
    log: Vec<u64>,
    primitive: u64,
}

impl fmt::Debug for Fq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Fq(p={}, k={}, modulus={:?})",
            self.p, self.k, self.modulus
        )
    }
}

impl PartialEq for Fq {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.k == other.k && self.modulus == other.modulus
    }
}
impl Eq for Fq {}

impl Fq {
    /// The field with the canonical (smallest-encoding) irreducible modulus.
    pub fn canonical(p: u64, k: usize) -> Result<Arc<Fq>> {
        let modulus = find_irreducible(p, k)?;
        Fq::with_modulus(p, k, modulus)
    }

    /// The field with an explicitly chosen monic irreducible modulus
    /// (low degree first, length k+1).
    pub fn with_modulus(p: u64, k: usize, modulus: Vec<u64>) -> Result<Arc<Fq>> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if k == 0 {
            return Err(Error::InvalidParameter(
                "extension degree must be >= 1".into(),
            ));
        }
        if modulus.len() != k + 1 || modulus.iter().any(|&c| c >= p) {
            return Err(Error::InvalidParameter(
                "modulus must have k+1 coefficients in [0, p)".into(),
            ));
        }
        if modulus[k] != 1 || fp_degree(&modulus) != k {
            return Err(Error::NotMonic);
        }
        if !is_irreducible(p, &modulus)? {
            return Err(Error::Reducible);
        }
        let size = p
            .checked_pow(k as u32)
            .filter(|&s| s <= MAX_FIELD_SIZE)
            .ok_or(Error::InvalidParameter(format!(
                "field size p^k exceeds {MAX_FIELD_SIZE}"
            )))?;

        let mut field = Fq {
            p,
            k,
            modulus,
            size,
            exp: Vec::new(),
            log: Vec::new(),
            primitive: 0,
        };
        field.build_tables()?;
        Ok(Arc::new(field))
    }

    fn build_tables(&mut self) -> Result<()> {
        let n = self.size - 1;
        // find the smallest-encoding primitive element by order scan
        let mut primitive = 0;
        for cand in 1..self.size {
            if self.order_direct(cand) == n {
                primitive = cand;
                break;
            }
        }
        if primitive == 0 {
            return Err(Error::Internal("no primitive element found".into()));
        }
        self.primitive = primitive;

        let mut exp = vec![0u64; (2 * n) as usize];
        let mut log = vec![u64::MAX; self.size as usize];
        let mut acc = 1u64;
        for i in 0..n {
            exp[i as usize] = acc;
            exp[(i + n) as usize] = acc;
            log[acc as usize] = i;
            acc = self.mul_direct(acc, primitive);
        }
        if acc != 1 {
            return Err(Error::Internal("primitive element order mismatch".into()));
        }
        self.exp = exp;
        self.log = log;
        Ok(())
    }

    pub fn p(&self) -> u64 {
        self.p
    }
    pub fn k(&self) -> usize {
        self.k
    }
    /// Number of field elements, p^k.
    pub fn size(&self) -> u64 {
        self.size
    }
    /// Modulus polynomial, low degree first, length k+1.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }
    /// Smallest-encoding element of multiplicative order p^k - 1.
    pub fn primitive(&self) -> u64 {
        self.primitive
    }

    pub fn same_field(&self, other: &Fq) -> bool {
        self == other
    }

    fn check(&self, enc: u64) -> Result<()> {
        if enc < self.size {
            Ok(())
        } else {
            Err(Error::OutOfRange {
                what: "field element encoding",
                value: enc as i64,
                limit: self.size as i64 - 1,
            })
        }
    }

    pub fn coeffs(&self, enc: u64) -> Vec<u64> {
        enc_to_digits(enc, self.p, self.k)
    }

    pub fn from_coeffs(&self, coeffs: &[u64]) -> Result<u64> {
        if coeffs.len() != self.k || coeffs.iter().any(|&c| c >= self.p) {
            return Err(Error::InvalidParameter(
                "coefficient vector must have k entries in [0, p)".into(),
            ));
        }
        Ok(digits_to_enc(coeffs, self.p))
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        if self.p == 2 {
            return a ^ b;
        }
        let mut out = 0u64;
        let mut pw = 1u64;
        let (mut a, mut b) = (a, b);
        for _ in 0..self.k {
            out += (a % self.p + b % self.p) % self.p * pw;
            a /= self.p;
            b /= self.p;
            pw *= self.p;
        }
        out
    }

    pub fn neg(&self, a: u64) -> u64 {
        if self.p == 2 {
            return a;
        }
        let mut out = 0u64;
        let mut pw = 1u64;
        let mut a = a;
        for _ in 0..self.k {
            out += (self.p - a % self.p) % self.p * pw;
            a /= self.p;
            pw *= self.p;
        }
        out
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        self.add(a, self.neg(b))
    }

    /// Product via the log/antilog tables.
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        if a == 0 || b == 0 {
            return 0;
        }
        self.exp[(self.log[a as usize] + self.log[b as usize]) as usize]
    }

    /// Definitional product: polynomial multiplication reduced mod the
    /// modulus. Used to build the tables and as an independent route in
    /// tests.
    pub fn mul_direct(&self, a: u64, b: u64) -> u64 {
        let pa = self.coeffs(a);
        let pb = self.coeffs(b);
        let prod = fp_mul(&pa, &pb, self.p);
        let mut red = fp_rem(&prod, &self.modulus, self.p);
        red.resize(self.k, 0);
        digits_to_enc(&red, self.p)
    }

    pub fn inv(&self, a: u64) -> Result<u64> {
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        let n = self.size - 1;
        // exp has doubled length, so n - log(a) is always in range
        Ok(self.exp[(n - self.log[a as usize]) as usize])
    }

    pub fn div(&self, a: u64, b: u64) -> Result<u64> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: u64, e: u64) -> u64 {
        if a == 0 {
            return if e == 0 { 1 } else { 0 };
        }
        let n = self.size - 1;
        let l = self.log[a as usize];
        // exponent of the primitive element, reduced mod the group order
        let le = (l as u128 * e as u128 % n as u128) as u64;
        self.exp[le as usize]
    }

    /// Least t >= 1 with a^t = 1.
    pub fn order(&self, a: u64) -> Result<u64> {
        self.check(a)?;
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        let mut ord = self.size - 1;
        for l in prime_factors(self.size - 1) {
            while ord % l == 0 && self.pow(a, ord / l) == 1 {
                ord /= l;
            }
        }
        Ok(ord)
    }

    /// Order computed without tables (used during construction).
    fn order_direct(&self, a: u64) -> u64 {
        let n = self.size - 1;
        let mut ord = n;
        for l in prime_factors(n) {
            while ord % l == 0 && self.pow_direct(a, ord / l) == 1 {
                ord /= l;
            }
        }
        ord
    }

    fn pow_direct(&self, a: u64, mut e: u64) -> u64 {
        let mut base = a;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_direct(acc, base);
            }
            base = self.mul_direct(base, base);
            e >>= 1;
        }
        acc
    }
}

// ---------------------------------------------------------------------------
// element wrapper
// ---------------------------------------------------------------------------

/// A field element bound to its field, with mismatch-checked operations.
#[derive(Clone, Debug)]
pub struct FieldElem {
    field: Arc<Fq>,
    enc: u64,
}

impl PartialEq for FieldElem {
    fn eq(&self, other: &Self) -> bool {
        self.field.same_field(&other.field) && self.enc == other.enc
    }
}
impl Eq for FieldElem {}

impl FieldElem {
    pub fn new(field: &Arc<Fq>, enc: u64) -> Result<Self> {
        field.check(enc)?;
        Ok(FieldElem {
            field: Arc::clone(field),
            enc,
        })
    }

    pub fn from_coeffs(field: &Arc<Fq>, coeffs: &[u64]) -> Result<Self> {
        let enc = field.from_coeffs(coeffs)?;
        Ok(FieldElem {
            field: Arc::clone(field),
            enc,
        })
    }

    pub fn enc(&self) -> u64 {
        self.enc
    }
    pub fn coeffs(&self) -> Vec<u64> {
        self.field.coeffs(self.enc)
    }
    pub fn field(&self) -> &Arc<Fq> {
        &self.field
    }
    pub fn is_zero(&self) -> bool {
        self.enc == 0
    }

    fn same(&self, rhs: &Self) -> Result<()> {
        if self.field.same_field(&rhs.field) {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.same(rhs)?;
        Ok(FieldElem {
            field: Arc::clone(&self.field),
            enc: self.field.add(self.enc, rhs.enc),
        })
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.same(rhs)?;
        Ok(FieldElem {
            field: Arc::clone(&self.field),
            enc: self.field.sub(self.enc, rhs.enc),
        })
    }

    pub fn neg(&self) -> Self {
        FieldElem {
            field: Arc::clone(&self.field),
            enc: self.field.neg(self.enc),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        self.same(rhs)?;
        Ok(FieldElem {
            field: Arc::clone(&self.field),
            enc: self.field.mul(self.enc, rhs.enc),
        })
    }

    pub fn inv(&self) -> Result<Self> {
        Ok(FieldElem {
            field: Arc::clone(&self.field),
            enc: self.field.inv(self.enc)?,
        })
    }

    pub fn pow(&self, e: u64) -> Self {
        FieldElem {
            field: Arc::clone(&self.field),
            enc: self.field.pow(self.enc, e),
        }
    }

    pub fn order(&self) -> Result<u64> {
        self.field.order(self.enc)
    }
}

/// Smallest-encoding element of multiplicative order p^k - 1.
pub fn find_primitive(field: &Arc<Fq>) -> FieldElem {
    FieldElem {
        field: Arc::clone(field),
        enc: field.primitive(),
    }
}

// ---------------------------------------------------------------------------
// subfield embeddings
// ---------------------------------------------------------------------------

/// Tabulated injective homomorphism F_{p^a} -> F_{p^b} for a | b, sending
/// the class of x in the subfield to its smallest-encoding root in the
/// superfield.
#[derive(Debug)]
pub struct Embedding {
    sub: Arc<Fq>,
    sup: Arc<Fq>,
    image: Vec<u64>,
    preimage: Vec<u64>, // u64::MAX marks "not in the subfield"
}

impl Embedding {
    pub fn new(sub: &Arc<Fq>, sup: &Arc<Fq>) -> Result<Embedding> {
        if sub.p() != sup.p() || sup.k() % sub.k() != 0 {
            return Err(Error::NoEmbedding {
                sub: sub.size(),
                sup: sup.size(),
            });
        }
        // smallest-encoding root of the subfield modulus in the superfield
        let mut root = None;
        for cand in 0..sup.size() {
            let mut acc = 0u64;
            for &c in sub.modulus().iter().rev() {
                acc = sup.add(sup.mul(acc, cand), c);
            }
            if acc == 0 {
                root = Some(cand);
                break;
            }
        }
        let root = root.ok_or_else(|| {
            Error::Internal("subfield modulus has no root in the superfield".into())
        })?;

        let mut image = vec![0u64; sub.size() as usize];
        let mut preimage = vec![u64::MAX; sup.size() as usize];
        for e in 0..sub.size() {
            let digits = sub.coeffs(e);
            let mut acc = 0u64;
            for &d in digits.iter().rev() {
                acc = sup.add(sup.mul(acc, root), d);
            }
            image[e as usize] = acc;
            if preimage[acc as usize] != u64::MAX {
                return Err(Error::Internal("embedding is not injective".into()));
            }
            preimage[acc as usize] = e;
        }
        Ok(Embedding {
            sub: Arc::clone(sub),
            sup: Arc::clone(sup),
            image,
            preimage,
        })
    }

    pub fn sub(&self) -> &Arc<Fq> {
        &self.sub
    }
    pub fn sup(&self) -> &Arc<Fq> {
        &self.sup
    }

    pub fn embed(&self, enc: u64) -> Result<u64> {
        self.sub.check(enc)?;
        Ok(self.image[enc as usize])
    }

    /// Partial inverse; errors when `enc` is not in the embedded copy of
    /// the subfield. Membership is equivalent to enc^{p^a} = enc.
    pub fn project(&self, enc: u64) -> Result<u64> {
        self.sup.check(enc)?;
        let pre = self.preimage[enc as usize];
        if pre == u64::MAX {
            Err(Error::NotInSubfield(enc))
        } else {
            Ok(pre)
        }
    }
}
