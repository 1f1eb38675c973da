//! Galois rings `GR(p^r, m) = Z_{p^r}[X]/(h(X))` for a monic basic
//! irreducible h obtained by Hensel lifting, together with the additive
//! group indexing scheme and the coordinate orderings used by the code
//! constructions.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ff::{self, Fq};

// ---------------------------------------------------------------------------
// polynomials over Z_M (dense, low degree first)
// ---------------------------------------------------------------------------

fn zq_trim(f: &mut Vec<u64>) {
    while f.len() > 1 && *f.last().unwrap() == 0 {
        f.pop();
    }
}

fn zq_degree(f: &[u64]) -> usize {
    let mut d = f.len();
    while d > 1 && f[d - 1] == 0 {
        d -= 1;
    }
    d - 1
}

fn zq_mul(a: &[u64], b: &[u64], m: u64) -> Vec<u64> {
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + ai * bj) % m;
        }
    }
    zq_trim(&mut out);
    out
}

fn zq_add(a: &[u64], b: &[u64], m: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    let mut out = vec![0u64; n];
    for (i, slot) in out.iter_mut().enumerate() {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        *slot = (x + y) % m;
    }
    zq_trim(&mut out);
    out
}

fn zq_sub(a: &[u64], b: &[u64], m: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    let mut out = vec![0u64; n];
    for (i, slot) in out.iter_mut().enumerate() {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        *slot = (x + m - y) % m;
    }
    zq_trim(&mut out);
    out
}

/// Division with remainder by a monic divisor, over Z_m.
fn zq_divrem_monic(a: &[u64], b: &[u64], m: u64) -> (Vec<u64>, Vec<u64>) {
    let db = zq_degree(b);
    debug_assert_eq!(b[db], 1, "divisor must be monic");
    let mut r: Vec<u64> = a.to_vec();
    zq_trim(&mut r);
    if zq_degree(&r) < db {
        return (vec![0], r);
    }
    let mut q = vec![0u64; zq_degree(&r) - db + 1];
    for shift in (0..q.len()).rev() {
        let lead = r.get(shift + db).copied().unwrap_or(0);
        if lead == 0 {
            continue;
        }
        q[shift] = lead;
        for i in 0..=db {
            let sub = lead * b[i] % m;
            r[shift + i] = (r[shift + i] + m - sub) % m;
        }
    }
    zq_trim(&mut q);
    zq_trim(&mut r);
    (q, r)
}

/// X^n - 1 over Z_m.
fn xn_minus_one(n: usize, m: u64) -> Vec<u64> {
    let mut f = vec![0u64; n + 1];
    f[0] = m - 1;
    f[n] = 1;
    f
}

// extended gcd over F_p[X]: returns (g, s, t) with s a + t b = g
fn fp_ext_gcd(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>, Vec<u64>) {
    let mut r0 = a.to_vec();
    let mut r1 = b.to_vec();
    zq_trim(&mut r0);
    zq_trim(&mut r1);
    let mut s0 = vec![1u64];
    let mut s1 = vec![0u64];
    let mut t0 = vec![0u64];
    let mut t1 = vec![1u64];
    while !(r1.len() == 1 && r1[0] == 0) {
        let (q, rem) = fp_divrem(&r0, &r1, p);
        let new_s = zq_sub(&s0, &zq_mul(&q, &s1, p), p);
        let new_t = zq_sub(&t0, &zq_mul(&q, &t1, p), p);
        r0 = std::mem::replace(&mut r1, rem);
        s0 = std::mem::replace(&mut s1, new_s);
        t0 = std::mem::replace(&mut t1, new_t);
    }
    (r0, s0, t0)
}

// division with remainder over F_p[X] for an arbitrary nonzero divisor
fn fp_divrem(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    let db = zq_degree(b);
    let lead_inv = mod_inverse(b[db], p);
    let mut r: Vec<u64> = a.to_vec();
    zq_trim(&mut r);
    if zq_degree(&r) < db {
        return (vec![0], r);
    }
    let mut q = vec![0u64; zq_degree(&r) - db + 1];
    for shift in (0..q.len()).rev() {
        let lead = r.get(shift + db).copied().unwrap_or(0);
        if lead == 0 {
            continue;
        }
        let factor = lead * lead_inv % p;
        q[shift] = factor;
        for i in 0..=db {
            let sub = factor * b[i] % p;
            r[shift + i] = (r[shift + i] + p - sub) % p;
        }
    }
    zq_trim(&mut q);
    zq_trim(&mut r);
    (q, r)
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // Fermat; p prime, a != 0 mod p
    let mut acc = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc
}

// ---------------------------------------------------------------------------
// Hensel lifting
// ---------------------------------------------------------------------------

/// Lift a monic irreducible polynomial over F_p with nonzero constant
/// term to the unique monic h over Z_{p^r} with h = fbar (mod p) and
/// h | X^{p^m - 1} - 1 over Z_{p^r}.
///
/// Quadratic lifting of the coprime factorization
/// X^n - 1 = fbar * g (mod p), maintaining Bezout cofactors and
/// doubling the precision until it reaches p^r.
pub fn hensel_lift(p: u64, r: u32, fbar: &[u64]) -> Result<Vec<u64>> {
    if !ff::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if !ff::fp_is_monic(fbar) || fbar.iter().any(|&c| c >= p) {
        return Err(Error::NotMonic);
    }
    if fbar[0] == 0 {
        return Err(Error::InvalidParameter(
            "constant term of the polynomial to lift must be nonzero".into(),
        ));
    }
    if !ff::is_irreducible(p, fbar)? {
        return Err(Error::Reducible);
    }
    let deg = ff::fp_degree(fbar);
    if r == 1 {
        return Ok(fbar.to_vec());
    }
    let nbar = p
        .checked_pow(deg as u32)
        .and_then(|v| v.checked_sub(1))
        .filter(|&v| v <= (1 << 20))
        .ok_or_else(|| Error::InvalidParameter("p^m - 1 too large for lifting".into()))?
        as usize;
    let target = p
        .checked_pow(r)
        .filter(|&t| t <= (1 << 20))
        .ok_or_else(|| Error::InvalidParameter("p^r too large for lifting".into()))?;

    // initial factorization X^n - 1 = g * h (mod p), h = fbar
    let mut h: Vec<u64> = fbar.to_vec();
    let (mut g, rem) = fp_divrem(&xn_minus_one(nbar, p), &h, p);
    if !(rem.len() == 1 && rem[0] == 0) {
        return Err(Error::Internal(
            "irreducible polynomial with nonzero constant term must divide X^n - 1 mod p".into(),
        ));
    }
    // Bezout cofactors s g + t h = 1 over F_p
    let (d, s_raw, t_raw) = fp_ext_gcd(&g, &h, p);
    if zq_degree(&d) != 0 || d[0] == 0 {
        return Err(Error::Internal(
            "factors of X^n - 1 mod p are not coprime".into(),
        ));
    }
    let d_inv = mod_inverse(d[0], p);
    let mut s: Vec<u64> = s_raw.iter().map(|&c| c * d_inv % p).collect();
    let mut t: Vec<u64> = t_raw.iter().map(|&c| c * d_inv % p).collect();
    // normalize deg s < deg h, adjusting t to keep the identity exact
    let (_, s_red) = fp_divrem(&s, &h, p);
    if s_red != s {
        s = s_red;
        let num = zq_sub(&[1], &zq_mul(&s, &g, p), p);
        let (tq, trem) = fp_divrem(&num, &h, p);
        if !(trem.len() == 1 && trem[0] == 0) {
            return Err(Error::Internal("Bezout normalization failed".into()));
        }
        t = tq;
    }

    let mut prec: u64 = p;
    while prec < target {
        // target is bounded, so the square cannot overflow
        let next = (prec * prec).min(target);
        let m = next;
        let f = xn_minus_one(nbar, m);
        // lift the factorization
        let delta = zq_sub(&f, &zq_mul(&g, &h, m), m);
        let (qq, rr) = zq_divrem_monic(&zq_mul(&s, &delta, m), &h, m);
        g = zq_add(
            &g,
            &zq_add(&zq_mul(&t, &delta, m), &zq_mul(&qq, &g, m), m),
            m,
        );
        h = zq_add(&h, &rr, m);
        // lift the Bezout identity
        let b = zq_sub(&zq_add(&zq_mul(&s, &g, m), &zq_mul(&t, &h, m), m), &[1], m);
        let (cc, dd) = zq_divrem_monic(&zq_mul(&s, &b, m), &h, m);
        s = zq_sub(&s, &dd, m);
        t = zq_sub(&t, &zq_add(&zq_mul(&t, &b, m), &zq_mul(&cc, &g, m), m), m);
        prec = next;
    }

    let mut h: Vec<u64> = h.iter().map(|&c| c % target).collect();
    zq_trim(&mut h);
    if zq_degree(&h) != deg || h[deg] != 1 {
        return Err(Error::Internal(
            "lifted polynomial lost its degree or leading term".into(),
        ));
    }
    if h.iter().zip(fbar).any(|(&a, &b)| a % p != b) {
        return Err(Error::Internal(
            "lifted polynomial does not reduce to its seed".into(),
        ));
    }
    let (_, check) = zq_divrem_monic(&xn_minus_one(nbar, target), &h, target);
    if !(check.len() == 1 && check[0] == 0) {
        return Err(Error::Internal(
            "lifted polynomial does not divide X^n - 1".into(),
        ));
    }
    h.resize(deg + 1, 0);
    Ok(h)
}

// ---------------------------------------------------------------------------
// the ring GR(p^r, m)
// ---------------------------------------------------------------------------

/// Description of `GR(p^r, m) = Z_{p^r}[X]/(h(X))`.
///
/// For m = 1 the ring is Z_{p^r} with h = X and no lifting. Elements
/// are coefficient vectors of length m over Z_{p^r} in the basis
/// 1, alpha, ..., alpha^{m-1} with alpha the class of X; the group
/// index of an element is its base-q digit string.
pub struct GaloisRing {
    p: u64,
    r: u32,
    m: usize,
    q: u64,
    h: Vec<u64>,
    size: u64,
    add_table: Option<Vec<u32>>,
}

impl std::fmt::Debug for GaloisRing {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "GaloisRing(p={}, r={}, m={}, h={:?})",
            self.p, self.r, self.m, self.h
        )
    }
}

impl PartialEq for GaloisRing {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.r == other.r && self.m == other.m && self.h == other.h
    }
}
impl Eq for GaloisRing {}

const ADD_TABLE_LIMIT: u64 = 1024;

impl GaloisRing {
    /// Construct GR(p^r, m) with the canonical (or supplied) mod-p seed
    /// polynomial; for m >= 2 the modulus h is its Hensel lift.
    pub fn new(p: u64, r: u32, m: usize, fbar: Option<Vec<u64>>) -> Result<Arc<GaloisRing>> {
        if !ff::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if r < 1 || m < 1 {
            return Err(Error::InvalidParameter("require r >= 1 and m >= 1".into()));
        }
        if m == 1 {
            if let Some(f) = &fbar {
                if f.as_slice() != [0, 1] {
                    return Err(Error::InvalidParameter(
                        "for m = 1 the modulus is fixed to X".into(),
                    ));
                }
            }
            return Self::from_h(p, r, 1, vec![0, 1]);
        }
        let fbar = match fbar {
            Some(f) => {
                if ff::fp_degree(&f) != m || f.iter().any(|&c| c >= p) {
                    return Err(Error::InvalidParameter(
                        "seed polynomial must be monic of degree m over F_p".into(),
                    ));
                }
                f
            }
            None => ff::find_irreducible(p, m)?,
        };
        let h = hensel_lift(p, r, &fbar)?;
        Self::from_h(p, r, m, h)
    }

    /// Construct directly from a modulus h over Z_{p^r}, validating the
    /// defining invariants.
    pub fn from_h(p: u64, r: u32, m: usize, h: Vec<u64>) -> Result<Arc<GaloisRing>> {
        let ring = Self::from_h_unchecked(p, r, m, h)?;
        ring.check_invariants()?;
        Ok(ring)
    }

    /// Construct without validating the modulus invariants. Intended
    /// for negative-control testing of the verification suites.
    pub fn from_h_unchecked(p: u64, r: u32, m: usize, h: Vec<u64>) -> Result<Arc<GaloisRing>> {
        if !ff::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if r < 1 || m < 1 {
            return Err(Error::InvalidParameter("require r >= 1 and m >= 1".into()));
        }
        let q = p
            .checked_pow(r)
            .ok_or_else(|| Error::InvalidParameter("p^r overflows".into()))?;
        let size = q
            .checked_pow(m as u32)
            .filter(|&s| s <= (1 << 20))
            .ok_or_else(|| Error::InvalidParameter("group order q^m too large".into()))?;
        if h.len() != m + 1 || h.iter().any(|&c| c >= q) {
            return Err(Error::InvalidParameter(
                "modulus must have m+1 coefficients in [0, p^r)".into(),
            ));
        }
        if h[m] != 1 {
            return Err(Error::NotMonic);
        }
        let add_table = if size <= ADD_TABLE_LIMIT {
            let s = size as usize;
            let mut table = vec![0u32; s * s];
            for i in 0..s {
                for j in 0..s {
                    table[i * s + j] = digit_add(i as u64, j as u64, q, m) as u32;
                }
            }
            Some(table)
        } else {
            None
        };
        Ok(Arc::new(GaloisRing {
            p,
            r,
            m,
            q,
            h,
            size,
            add_table,
        }))
    }

    /// The defining invariants of the modulus: h mod p is irreducible
    /// over F_p, and (for m >= 2) h divides X^{p^m - 1} - 1 exactly
    /// over Z_{p^r}. For m = 1 the modulus must be X.
    pub fn check_invariants(&self) -> Result<()> {
        if self.m == 1 {
            if self.h != [0, 1] {
                return Err(Error::InvalidParameter(
                    "for m = 1 the modulus must be X".into(),
                ));
            }
            return Ok(());
        }
        let hbar: Vec<u64> = self.h.iter().map(|&c| c % self.p).collect();
        if ff::fp_degree(&hbar) != self.m {
            return Err(Error::NotMonic);
        }
        if !ff::is_irreducible(self.p, &hbar)? {
            return Err(Error::Reducible);
        }
        let nbar = self.p.pow(self.m as u32) as usize - 1;
        let modulus = self.q;
        let (_, rem) = zq_divrem_monic(&xn_minus_one(nbar, modulus), &self.h, modulus);
        if !(rem.len() == 1 && rem[0] == 0) {
            return Err(Error::InvalidParameter(
                "modulus does not divide X^{p^m - 1} - 1 over Z_{p^r}".into(),
            ));
        }
        Ok(())
    }

    pub fn p(&self) -> u64 {
        self.p
    }
    pub fn r(&self) -> u32 {
        self.r
    }
    pub fn m(&self) -> usize {
        self.m
    }
    /// q = p^r, the characteristic.
    pub fn q(&self) -> u64 {
        self.q
    }
    /// The modulus h, low degree first, coefficients mod p^r.
    pub fn h(&self) -> &[u64] {
        &self.h
    }
    /// Number of ring elements, q^m.
    pub fn size(&self) -> u64 {
        self.size
    }

    pub fn zero(self: &Arc<Self>) -> RingElem {
        RingElem {
            ring: Arc::clone(self),
            coeffs: vec![0; self.m],
        }
    }

    pub fn one(self: &Arc<Self>) -> RingElem {
        let mut coeffs = vec![0; self.m];
        coeffs[0] = 1;
        RingElem {
            ring: Arc::clone(self),
            coeffs,
        }
    }

    /// The class of X. For m = 1 this is 0 (the ring is Z_{p^r}).
    pub fn alpha(self: &Arc<Self>) -> RingElem {
        let mut coeffs = vec![0; self.m];
        if self.m > 1 {
            coeffs[1] = 1;
        }
        RingElem {
            ring: Arc::clone(self),
            coeffs,
        }
    }

    pub fn elem(self: &Arc<Self>, coeffs: Vec<u64>) -> Result<RingElem> {
        if coeffs.len() != self.m || coeffs.iter().any(|&c| c >= self.q) {
            return Err(Error::InvalidParameter(
                "coefficient vector must have m entries in [0, p^r)".into(),
            ));
        }
        Ok(RingElem {
            ring: Arc::clone(self),
            coeffs,
        })
    }

    /// Mutually inverse bijections between [0, q^m) and ring elements
    /// via base-q digits.
    pub fn index_to_element(self: &Arc<Self>, index: usize) -> Result<RingElem> {
        if index as u64 >= self.size {
            return Err(Error::OutOfRange {
                what: "group index",
                value: index as i64,
                limit: self.size as i64 - 1,
            });
        }
        Ok(RingElem {
            ring: Arc::clone(self),
            coeffs: ff::enc_to_digits(index as u64, self.q, self.m),
        })
    }

    /// Additive group law on indices: digit-wise addition mod q.
    pub fn idx_add(&self, i: usize, j: usize) -> usize {
        if let Some(t) = &self.add_table {
            return t[i * self.size as usize + j] as usize;
        }
        digit_add(i as u64, j as u64, self.q, self.m) as usize
    }

    pub fn idx_neg(&self, i: usize) -> usize {
        let mut i = i as u64;
        let mut out = 0u64;
        let mut pw = 1u64;
        for _ in 0..self.m {
            out += (self.q - i % self.q) % self.q * pw;
            i /= self.q;
            pw *= self.q;
        }
        out as usize
    }

    pub fn idx_sub(&self, i: usize, j: usize) -> usize {
        self.idx_add(i, self.idx_neg(j))
    }

    /// The residue field F_{p^m} with modulus h mod p.
    pub fn residue_field(&self) -> Result<Arc<Fq>> {
        let hbar: Vec<u64> = self.h.iter().map(|&c| c % self.p).collect();
        Fq::with_modulus(self.p, self.m, hbar)
    }

    /// Image of an element under the reduction-mod-p homomorphism onto
    /// the residue field, as a field encoding.
    pub fn residue_of(&self, v: &RingElem) -> u64 {
        let digits: Vec<u64> = v.coeffs.iter().map(|&c| c % self.p).collect();
        ff::digits_to_enc(&digits, self.p)
    }
}

fn digit_add(i: u64, j: u64, q: u64, m: usize) -> u64 {
    let (mut i, mut j) = (i, j);
    let mut out = 0u64;
    let mut pw = 1u64;
    for _ in 0..m {
        out += (i % q + j % q) % q * pw;
        i /= q;
        j /= q;
        pw *= q;
    }
    out
}

/// An element of GR(p^r, m): m coordinates mod p^r in the power basis.
#[derive(Clone, Debug)]
pub struct RingElem {
    ring: Arc<GaloisRing>,
    coeffs: Vec<u64>,
}

impl PartialEq for RingElem {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.coeffs == other.coeffs
    }
}
impl Eq for RingElem {}

impl RingElem {
    pub fn ring(&self) -> &Arc<GaloisRing> {
        &self.ring
    }
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Group index: base-q digit string of the coordinates.
    pub fn index(&self) -> usize {
        ff::digits_to_enc(&self.coeffs, self.ring.q) as usize
    }

    fn same(&self, rhs: &Self) -> Result<()> {
        if self.ring == rhs.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn add(&self, rhs: &Self) -> Result<RingElem> {
        self.same(rhs)?;
        let q = self.ring.q;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(&a, &b)| (a + b) % q)
            .collect();
        Ok(RingElem {
            ring: Arc::clone(&self.ring),
            coeffs,
        })
    }

    pub fn neg(&self) -> RingElem {
        let q = self.ring.q;
        RingElem {
            ring: Arc::clone(&self.ring),
            coeffs: self.coeffs.iter().map(|&a| (q - a) % q).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Result<RingElem> {
        self.add(&rhs.neg())
    }

    /// Polynomial product reduced mod h, coefficients mod p^r.
    pub fn mul(&self, rhs: &Self) -> Result<RingElem> {
        self.same(rhs)?;
        let q = self.ring.q;
        let prod = zq_mul(&self.coeffs, &rhs.coeffs, q);
        let (_, mut rem) = zq_divrem_monic(&prod, &self.ring.h, q);
        rem.resize(self.ring.m, 0);
        Ok(RingElem {
            ring: Arc::clone(&self.ring),
            coeffs: rem,
        })
    }

    pub fn pow(&self, mut e: u64) -> RingElem {
        let mut acc = self.ring.one();
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).expect("same ring");
            }
            base = base.mul(&base).expect("same ring");
            e >>= 1;
        }
        acc
    }

    /// Write v = p^t u with u a canonical unit: t is the minimum p-adic
    /// valuation of the coordinates (valuation of 0 is r) and u divides
    /// out p^t coordinate-wise. u is unique only modulo p^{r-t}; the
    /// canonical representative keeps each divided coordinate in
    /// [0, p^{r-t}). For v = 0 the result is (r, 1) by convention.
    pub fn unit_decompose(&self) -> (u32, RingElem) {
        let p = self.ring.p;
        let r = self.ring.r;
        if self.is_zero() {
            return (r, self.ring.one());
        }
        let mut t = r;
        for &c in &self.coeffs {
            let mut v = 0u32;
            let mut c = c;
            if c == 0 {
                v = r;
            } else {
                while c % p == 0 {
                    c /= p;
                    v += 1;
                }
            }
            t = t.min(v);
        }
        let divisor = p.pow(t);
        let coeffs = self.coeffs.iter().map(|&c| c / divisor).collect();
        (
            t,
            RingElem {
                ring: Arc::clone(&self.ring),
                coeffs,
            },
        )
    }

    /// Units are exactly the elements with nonzero residue mod p.
    pub fn is_unit(&self) -> bool {
        self.unit_decompose().0 == 0
    }
}

// ---------------------------------------------------------------------------
// coordinate orderings of G \ {0}
// ---------------------------------------------------------------------------

/// Total order 0 < g_0 < ... < g_{q^m - 2} on the additive group,
/// supplied as an explicit sequence because the code constructions are
/// only defined relative to one fixed order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupOrdering {
    /// g_i is the element with index i + 1.
    Integer,
    /// g_i = gamma^i for a primitive element gamma, computed inside
    /// GR(p, m) = F_{p^m}. Only valid when r = 1.
    GammaPowers {
        /// Group index of gamma.
        gamma_index: usize,
    },
}

impl GroupOrdering {
    pub fn name(&self) -> &'static str {
        match self {
            GroupOrdering::Integer => "integer",
            GroupOrdering::GammaPowers { .. } => "gamma",
        }
    }
}

/// The sequence (idx(g_0), ..., idx(g_{q^m - 2})), a bijection onto
/// [1, q^m - 1].
pub fn group_order_map(ring: &Arc<GaloisRing>, ordering: &GroupOrdering) -> Result<Vec<usize>> {
    let size = ring.size() as usize;
    match ordering {
        GroupOrdering::Integer => Ok((1..size).collect()),
        GroupOrdering::GammaPowers { gamma_index } => {
            if ring.r() != 1 {
                return Err(Error::Unsupported(
                    "gamma-power ordering requires r = 1".into(),
                ));
            }
            let gamma = ring.index_to_element(*gamma_index)?;
            if gamma.is_zero() {
                return Err(Error::InvalidParameter("gamma must be nonzero".into()));
            }
            let mut map = Vec::with_capacity(size - 1);
            let mut seen = vec![false; size];
            let mut acc = ring.one();
            for _ in 0..size - 1 {
                let idx = acc.index();
                if seen[idx] {
                    return Err(Error::InvalidParameter(
                        "gamma is not primitive: powers repeat before covering G \\ {0}".into(),
                    ));
                }
                seen[idx] = true;
                map.push(idx);
                acc = acc.mul(&gamma)?;
            }
            Ok(map)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hensel_fixed_points() {
        // (x-1)(x^2+x+1) = x^3 - 1 over the integers, hence over Z_4
        assert_eq!(hensel_lift(2, 2, &[1, 1, 1]).unwrap(), vec![1, 1, 1]);
        // x^2+1 divides x^4-1 divides x^8-1 over Z_9
        assert_eq!(hensel_lift(3, 2, &[1, 0, 1]).unwrap(), vec![1, 0, 1]);
    }

    #[test]
    fn hensel_cubic_over_z4_matches_exhaustive_search() {
        let lifted = hensel_lift(2, 2, &[1, 1, 0, 1]).unwrap();
        // oracle: scan all monic cubics over Z_4 congruent to the seed
        // mod 2 and keep those dividing x^7 - 1
        let mut found = Vec::new();
        for c0 in [1u64, 3] {
            for c1 in [1u64, 3] {
                for c2 in [0u64, 2] {
                    let cand = vec![c0, c1, c2, 1];
                    let (_, rem) = zq_divrem_monic(&xn_minus_one(7, 4), &cand, 4);
                    if rem.len() == 1 && rem[0] == 0 {
                        found.push(cand);
                    }
                }
            }
        }
        assert_eq!(found.len(), 1);
        assert_eq!(found[0], lifted);
        assert_eq!(lifted, vec![3, 1, 2, 1]); // x^3 + 2x^2 + x + 3
    }

    #[test]
    fn hensel_deep_lift_divides() {
        for (p, r, fbar) in [
            (2u64, 3u32, vec![1u64, 1, 1]),
            (2, 4, vec![1, 1, 1]),
            (3, 2, vec![2, 1, 1]),
            (2, 2, vec![1, 1, 0, 0, 1]),
        ] {
            let h = hensel_lift(p, r, &fbar).unwrap();
            let target = p.pow(r);
            let nbar = p.pow(ff::fp_degree(&fbar) as u32) as usize - 1;
            let (_, rem) = zq_divrem_monic(&xn_minus_one(nbar, target), &h, target);
            assert_eq!(rem, vec![0], "p={p} r={r}");
            assert!(h.iter().zip(&fbar).all(|(&a, &b)| a % p == b));
        }
    }

    #[test]
    fn hensel_rejects_bad_seeds() {
        // zero constant term
        assert!(matches!(
            hensel_lift(2, 2, &[0, 1, 1]),
            Err(Error::InvalidParameter(_))
        ));
        // reducible seed
        assert_eq!(hensel_lift(2, 2, &[1, 0, 1]), Err(Error::Reducible));
    }

    fn gr422() -> Arc<GaloisRing> {
        GaloisRing::new(2, 2, 2, None).unwrap()
    }

    #[test]
    fn gr4_multiplication() {
        let ring = gr422();
        assert_eq!(ring.h(), &[1, 1, 1]);
        let alpha = ring.alpha();
        // alpha^2 = -alpha - 1 = (3,3)
        assert_eq!(alpha.mul(&alpha).unwrap().coeffs(), &[3, 3]);
        // 2 * 2 = 0 in characteristic 4
        let two = ring.elem(vec![2, 0]).unwrap();
        assert!(two.mul(&two).unwrap().is_zero());
        // alpha^3 = 1
        let a2 = ring.elem(vec![3, 3]).unwrap();
        assert_eq!(alpha.mul(&a2).unwrap(), ring.one());
    }

    #[test]
    fn unit_decomposition() {
        let ring = gr422();
        let v = ring.elem(vec![0, 2]).unwrap(); // 2*alpha
        let (t, u) = v.unit_decompose();
        assert_eq!(t, 1);
        assert_eq!(u, ring.alpha());
        let v = ring.elem(vec![3, 0]).unwrap();
        let (t, u) = v.unit_decompose();
        assert_eq!((t, u.coeffs()), (0, &[3u64, 0][..]));
        let (t, u) = ring.zero().unit_decompose();
        assert_eq!((t, u), (2, ring.one()));
    }

    #[test]
    fn unit_iff_valuation_zero_iff_nonzero_residue() {
        let ring = gr422();
        for i in 0..ring.size() as usize {
            let v = ring.index_to_element(i).unwrap();
            let unit = v.is_unit();
            assert_eq!(unit, v.unit_decompose().0 == 0);
            assert_eq!(unit, ring.residue_of(&v) != 0);
        }
    }

    #[test]
    fn ideal_chain_sizes() {
        // |{v : t(v) >= s}| = p^{m(r-s)}
        let ring = gr422();
        for s in 0..=2u32 {
            let count = (0..ring.size() as usize)
                .filter(|&i| ring.index_to_element(i).unwrap().unit_decompose().0 >= s)
                .count() as u64;
            assert_eq!(count, 2u64.pow(2 * (2 - s)), "s={s}");
        }
    }

    #[test]
    fn index_round_trip() {
        let ring = gr422();
        assert_eq!(ring.index_to_element(0).unwrap(), ring.zero());
        let e = ring.index_to_element(7).unwrap();
        assert_eq!(e.coeffs(), &[3, 1]); // 3 + alpha
        assert_eq!(e.index(), 7);
        for i in 0..16 {
            assert_eq!(ring.index_to_element(i).unwrap().index(), i);
        }
        assert!(ring.index_to_element(16).is_err());
    }

    #[test]
    fn index_addition_is_digitwise() {
        let ring = gr422();
        assert_eq!(ring.idx_add(7, 5), 8); // (3,1)+(1,1) = (0,2)
        for i in 0..16 {
            for j in 0..16 {
                let a = ring.index_to_element(i).unwrap();
                let b = ring.index_to_element(j).unwrap();
                assert_eq!(a.add(&b).unwrap().index(), ring.idx_add(i, j));
            }
        }
    }

    #[test]
    fn characteristic() {
        let ring = gr422();
        let one = ring.one();
        let mut acc = ring.zero();
        for _ in 0..4 {
            acc = acc.add(&one).unwrap();
        }
        assert!(acc.is_zero());
        let two = one.add(&one).unwrap();
        assert!(!two.is_zero());
    }

    #[test]
    fn residue_map_is_homomorphism() {
        let ring = gr422();
        let field = ring.residue_field().unwrap();
        for i in 0..16 {
            for j in 0..16 {
                let a = ring.index_to_element(i).unwrap();
                let b = ring.index_to_element(j).unwrap();
                let ra = ring.residue_of(&a);
                let rb = ring.residue_of(&b);
                assert_eq!(ring.residue_of(&a.add(&b).unwrap()), field.add(ra, rb));
                assert_eq!(ring.residue_of(&a.mul(&b).unwrap()), field.mul(ra, rb));
            }
        }
        // onto: all p^m residues occur
        let mut seen = vec![false; field.size() as usize];
        for i in 0..16 {
            seen[ring.residue_of(&ring.index_to_element(i).unwrap()) as usize] = true;
        }
        assert!(seen.iter().all(|&b| b));
    }

    #[test]
    fn order_maps() {
        let ring = gr422();
        let map = group_order_map(&ring, &GroupOrdering::Integer).unwrap();
        assert_eq!(map, (1..16).collect::<Vec<_>>());
        // gamma powers need r = 1
        let err = group_order_map(&ring, &GroupOrdering::GammaPowers { gamma_index: 2 });
        assert!(matches!(err, Err(Error::Unsupported(_))));

        let f4ring = GaloisRing::new(2, 1, 2, None).unwrap();
        let map = group_order_map(&f4ring, &GroupOrdering::GammaPowers { gamma_index: 2 }).unwrap();
        assert_eq!(map, vec![1, 2, 3]); // 1, alpha, alpha + 1
    }

    #[test]
    fn gamma_must_be_primitive() {
        let f8ring = GaloisRing::new(2, 1, 3, None).unwrap();
        // index 1 is the unit 1, whose powers repeat immediately
        let err = group_order_map(&f8ring, &GroupOrdering::GammaPowers { gamma_index: 1 });
        assert!(matches!(err, Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn m_equal_one_is_integer_residues() {
        let ring = GaloisRing::new(2, 3, 1, None).unwrap();
        assert_eq!(ring.h(), &[0, 1]);
        assert_eq!(ring.size(), 8);
        let five = ring.elem(vec![5]).unwrap();
        let seven = ring.elem(vec![7]).unwrap();
        assert_eq!(five.mul(&seven).unwrap().coeffs(), &[3]); // 35 mod 8
        assert_eq!(five.index(), 5);
    }

    #[test]
    fn corrupted_modulus_fails_invariants() {
        let good = gr422();
        let mut h = good.h().to_vec();
        h[0] = (h[0] + 2) % 4;
        let bad = GaloisRing::from_h_unchecked(2, 2, 2, h).unwrap();
        assert!(bad.check_invariants().is_err());
        assert!(good.check_invariants().is_ok());
    }
}
