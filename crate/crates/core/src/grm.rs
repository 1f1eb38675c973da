//! Generalized Reed-Muller codes of length q^m over F_q realized inside
//! the group algebra `F_q[G]` as extended cyclic codes.
//!
//! The shortened code of order nu is the ideal of `A = F_q[Z]/(Z^n - 1)`,
//! n = q^m - 1, generated by the polynomial whose roots are the powers
//! gamma^i of a primitive element of F_{q^m} with q-adic weight of i in
//! (0, m(q-1) - nu - 1]. The full code is its image under the extension
//! map that adds an overall-parity coordinate at the X^0 slot.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ff::{Embedding, Fq};
use crate::galois_ring::{group_order_map, GroupOrdering};
use crate::group_algebra::{qary_weight, Algebra, AlgebraElem};
use crate::linalg::SubspaceBasis;

/// N(t): the number of indices in [0, q^m - 1] with q-adic weight t.
/// Zero outside [0, m(q-1)].
pub fn weight_count(q: u64, m: usize, t: u32) -> u64 {
    let mut counts = vec![1u64];
    for _ in 0..m {
        let mut next = vec![0u64; counts.len() + q as usize - 1];
        for (w, &c) in counts.iter().enumerate() {
            for d in 0..q as usize {
                next[w + d] += c;
            }
        }
        counts = next;
    }
    counts.get(t as usize).copied().unwrap_or(0)
}

/// Which coordinate slot carries the leading term: the X^0 slot is
/// smaller than every shifted slot, and shifted slots compare by
/// position in the coordinate order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Slot {
    Identity,
    Position(usize),
}

/// Leading term of a group algebra element under a coordinate order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeadingTerm {
    pub slot: Slot,
    /// Group index of the monomial carrying the leading coefficient.
    pub group_index: usize,
    pub coeff: u64,
}

/// An element of `A = F_q[Z]/(Z^n - 1)`: n coefficients over F_q, low
/// degree first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicPoly {
    field: Arc<Fq>,
    coeffs: Vec<u64>,
}

impl CyclicPoly {
    pub fn new(field: &Arc<Fq>, coeffs: Vec<u64>) -> Result<CyclicPoly> {
        if coeffs.iter().any(|&c| c >= field.size()) {
            return Err(Error::OutOfRange {
                what: "coefficient encoding",
                value: 0,
                limit: field.size() as i64 - 1,
            });
        }
        Ok(CyclicPoly {
            field: Arc::clone(field),
            coeffs,
        })
    }

    pub fn field(&self) -> &Arc<Fq> {
        &self.field
    }
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }
    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Degree of the representative, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|&c| c != 0)
    }

    /// Multiply by z^j without wraparound; j + degree must stay below n.
    pub fn shift(&self, j: usize) -> Result<CyclicPoly> {
        let deg = self.degree().unwrap_or(0);
        let n = self.coeffs.len();
        if j + deg >= n {
            return Err(Error::OutOfRange {
                what: "shift exponent",
                value: j as i64,
                limit: (n - 1 - deg) as i64,
            });
        }
        let mut coeffs = vec![0u64; n];
        for (d, &c) in self.coeffs.iter().enumerate() {
            if c != 0 {
                coeffs[d + j] = c;
            }
        }
        Ok(CyclicPoly {
            field: Arc::clone(&self.field),
            coeffs,
        })
    }
}

/// Everything needed to build the codes: the group algebra, the
/// extension field F_{q^m} hosting the primitive element, the subfield
/// embedding of F_q into F_{q^m}, and the coordinate order on G \ {0}.
pub struct GrmContext {
    algebra: Arc<Algebra>,
    ext: Arc<Fq>,
    gamma: u64,
    embedding: Embedding,
    ordering: GroupOrdering,
    /// position -> group index of g_position
    order_map: Vec<usize>,
    /// group index -> position; the zero index has no position
    position_of: Vec<Option<usize>>,
    n: usize,
}

impl std::fmt::Debug for GrmContext {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "GrmContext(q={}, m={}, n={}, ordering={})",
            self.algebra.ring().q(),
            self.algebra.ring().m(),
            self.n,
            self.ordering.name()
        )
    }
}

/// Which coordinate order to use, before the primitive element is
/// resolved.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrderingKind {
    Integer,
    GammaPowers,
}

impl GrmContext {
    /// Build a context. The extension field defaults to the canonical
    /// modulus for F_{q^m}, except at r = 1 where the ring modulus h is
    /// reused so that gamma-power orderings are internally consistent.
    /// gamma defaults to the smallest-encoding primitive element.
    pub fn new(
        algebra: &Arc<Algebra>,
        kind: OrderingKind,
        gamma_override: Option<u64>,
        ext_override: Option<Arc<Fq>>,
    ) -> Result<GrmContext> {
        let ring = algebra.ring();
        let p = ring.p();
        let r = ring.r();
        let m = ring.m();
        let n = ring.size() as usize - 1;

        let ext = match ext_override {
            Some(e) => e,
            None => {
                if r == 1 {
                    // at r = 1 the ring is the field F_{p^m} presented by h
                    Fq::with_modulus(p, m, ring.h().to_vec())?
                } else {
                    Fq::canonical(p, r as usize * m)?
                }
            }
        };
        if ext.p() != p || ext.size() != ring.size() {
            return Err(Error::InvalidParameter(
                "extension field must have q^m elements".into(),
            ));
        }

        let gamma = match gamma_override {
            Some(g) => {
                if g == 0 || ext.order(g)? != ext.size() - 1 {
                    return Err(Error::InvalidParameter(
                        "gamma must be a primitive element of the extension field".into(),
                    ));
                }
                g
            }
            None => ext.primitive(),
        };

        let ordering = match kind {
            OrderingKind::Integer => GroupOrdering::Integer,
            OrderingKind::GammaPowers => {
                if r != 1 {
                    return Err(Error::Unsupported(
                        "gamma-power ordering requires r = 1".into(),
                    ));
                }
                if ext.modulus() != ring.h() {
                    return Err(Error::Unsupported(
                        "gamma-power ordering requires the extension field to reuse the ring modulus"
                            .into(),
                    ));
                }
                // at r = 1 the extension-field encoding equals the group index
                GroupOrdering::GammaPowers {
                    gamma_index: gamma as usize,
                }
            }
        };

        let embedding = Embedding::new(algebra.field(), &ext)?;
        let order_map = group_order_map(ring, &ordering)?;
        let mut position_of = vec![None; ring.size() as usize];
        for (pos, &idx) in order_map.iter().enumerate() {
            position_of[idx] = Some(pos);
        }

        Ok(GrmContext {
            algebra: Arc::clone(algebra),
            ext,
            gamma,
            embedding,
            ordering,
            order_map,
            position_of,
            n,
        })
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }
    pub fn ext_field(&self) -> &Arc<Fq> {
        &self.ext
    }
    pub fn gamma(&self) -> u64 {
        self.gamma
    }
    pub fn embedding(&self) -> &Embedding {
        &self.embedding
    }
    pub fn ordering(&self) -> &GroupOrdering {
        &self.ordering
    }
    /// Code length minus one: n = q^m - 1.
    pub fn n(&self) -> usize {
        self.n
    }
    /// The sequence (idx(g_0), ..., idx(g_{n-1})).
    pub fn order_map(&self) -> &[usize] {
        &self.order_map
    }
    pub fn position_of_index(&self, idx: usize) -> Option<usize> {
        self.position_of.get(idx).copied().flatten()
    }
    /// Largest code order plus one: m(q - 1).
    pub fn max_level(&self) -> u32 {
        self.algebra.max_level()
    }

    pub fn weight_count(&self, t: u32) -> u64 {
        weight_count(self.algebra.ring().q(), self.algebra.ring().m(), t)
    }

    fn check_order(&self, nu: u32) -> Result<()> {
        if nu >= self.max_level() {
            return Err(Error::OutOfRange {
                what: "code order",
                value: nu as i64,
                limit: self.max_level() as i64 - 1,
            });
        }
        Ok(())
    }

    /// Exponents i with 0 < weight_q(i) <= m(q-1) - nu - 1; the
    /// generator polynomial has roots gamma^i over these i.
    pub fn root_exponents(&self, nu: u32) -> Result<Vec<usize>> {
        self.check_order(nu)?;
        let q = self.algebra.ring().q();
        let m = self.algebra.ring().m();
        let bound = self.max_level() - nu - 1;
        Ok((1..self.algebra.dim())
            .filter(|&i| qary_weight(i, q, m).expect("index in range") <= bound)
            .collect())
    }

    /// The generator polynomial of the order-nu shortened code: the
    /// product of (z - gamma^i) over the root exponents, computed over
    /// F_{q^m} and projected onto F_q after checking that every
    /// coefficient is fixed by the subfield Frobenius. The empty
    /// product is 1.
    pub fn generator_poly(&self, nu: u32) -> Result<CyclicPoly> {
        let exponents = self.root_exponents(nu)?;
        let ext = &self.ext;
        let q = self.algebra.ring().q();

        let mut poly = vec![1u64]; // over the extension field
        for &i in &exponents {
            let root = ext.pow(self.gamma, i as u64);
            // multiply by (z - root)
            let mut next = vec![0u64; poly.len() + 1];
            for (d, &c) in poly.iter().enumerate() {
                if c == 0 {
                    continue;
                }
                next[d + 1] = ext.add(next[d + 1], c);
                next[d] = ext.sub(next[d], ext.mul(root, c));
            }
            poly = next;
        }

        let expected_deg: u64 = (1..=self.max_level() - nu - 1)
            .map(|t| self.weight_count(t))
            .sum();
        if poly.len() as u64 != expected_deg + 1 {
            return Err(Error::Internal(
                "generator polynomial degree does not match the weight counts".into(),
            ));
        }

        let mut coeffs = vec![0u64; self.n];
        for (d, &c) in poly.iter().enumerate() {
            if ext.pow(c, q) != c {
                return Err(Error::Internal(
                    "generator coefficient is not fixed by the subfield Frobenius".into(),
                ));
            }
            coeffs[d] = self.embedding.project(c).map_err(|_| {
                Error::Internal("generator coefficient failed subfield projection".into())
            })?;
        }
        Ok(CyclicPoly {
            field: Arc::clone(self.algebra.field()),
            coeffs,
        })
    }

    /// The extension map: a_0 + a_1 z + ... + a_{n-1} z^{n-1} goes to
    /// (-sum a_i) X^0 + sum a_i X^{g_i}. The image always has
    /// augmentation zero, so it lies in the radical.
    pub fn extend(&self, a: &CyclicPoly) -> Result<AlgebraElem> {
        if !a.field.same_field(self.algebra.field()) {
            return Err(Error::FieldMismatch);
        }
        if a.coeffs.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: a.coeffs.len(),
            });
        }
        let f = self.algebra.field();
        let mut out = vec![0u64; self.algebra.dim()];
        let mut sum = 0u64;
        for (pos, &c) in a.coeffs.iter().enumerate() {
            sum = f.add(sum, c);
            out[self.order_map[pos]] = c;
        }
        out[0] = f.neg(sum);
        self.algebra.from_coeffs(out)
    }

    /// The extension of z^j f_nu; its leading term sits at the slot of
    /// g_{j + deg f_nu}.
    pub fn extended_shift(&self, nu: u32, j: usize) -> Result<AlgebraElem> {
        let f = self.generator_poly(nu)?;
        self.extend(&f.shift(j)?)
    }

    /// The maximal nonzero coordinate under the context order (X^0
    /// smallest), with its coefficient.
    pub fn leading_term(&self, a: &AlgebraElem) -> Result<LeadingTerm> {
        if a.is_zero() {
            return Err(Error::ZeroElement);
        }
        for pos in (0..self.n).rev() {
            let g = self.order_map[pos];
            let c = a.coeff(g);
            if c != 0 {
                return Ok(LeadingTerm {
                    slot: Slot::Position(pos),
                    group_index: g,
                    coeff: c,
                });
            }
        }
        Ok(LeadingTerm {
            slot: Slot::Identity,
            group_index: 0,
            coeff: a.coeff(0),
        })
    }

    /// The shortened code of order nu as a canonical subspace of
    /// F_q^n: the span of the non-wrapping shifts z^j f_nu, whose
    /// dimension is exactly n - deg f_nu.
    pub fn shortened_code(&self, nu: u32) -> Result<SubspaceBasis> {
        let f = self.generator_poly(nu)?;
        let deg = f
            .degree()
            .expect("generator polynomial is monic, never zero");
        let span = SubspaceBasis::from_spanning(
            self.algebra.field(),
            self.n,
            (0..self.n - deg).map(|j| f.shift(j).expect("no wraparound").coeffs),
        )?;
        if span.dim() != self.n - deg {
            return Err(Error::Internal(
                "shortened code dimension does not match n - deg".into(),
            ));
        }
        Ok(span)
    }

    /// The generator set K_nu: the extension of f_0 together with the
    /// extensions of z^j f_i for 1 <= i <= nu and
    /// 0 <= j < N(m(q-1) - i), in (i, j) lexicographic order. Its
    /// cardinality equals the code dimension and its leading terms are
    /// pairwise distinct.
    pub fn generators(&self, nu: u32) -> Result<Vec<AlgebraElem>> {
        self.check_order(nu)?;
        let mut out = vec![self.extended_shift(0, 0)?];
        for i in 1..=nu {
            let shifts = self.weight_count(self.max_level() - i) as usize;
            for j in 0..shifts {
                out.push(self.extended_shift(i, j)?);
            }
        }
        Ok(out)
    }

    /// The code of order nu as a canonical subspace of F_q^{q^m} in
    /// group-index coordinates: the image of the shortened code under
    /// the extension map.
    pub fn code(&self, nu: u32) -> Result<SubspaceBasis> {
        let f = self.generator_poly(nu)?;
        let deg = f.degree().expect("generator polynomial is never zero");
        let rows = (0..self.n - deg)
            .map(|j| {
                self.extend(&f.shift(j).expect("no wraparound"))
                    .map(|e| e.coeffs().to_vec())
            })
            .collect::<Result<Vec<_>>>()?;
        let span = SubspaceBasis::from_spanning(self.algebra.field(), self.algebra.dim(), rows)?;
        if span.dim() != self.n - deg {
            return Err(Error::Internal(
                "code dimension does not match n - deg".into(),
            ));
        }
        Ok(span)
    }

    /// Side-by-side comparison of the radical filtration and the code
    /// chain under this context's coordinate order: dimensions, the
    /// full subspace-equality matrix, and the two forced equalities
    /// (lowest code = top radical power, highest code = radical).
    pub fn compare_radical_code(&self) -> Result<RadicalCodeComparison> {
        let max = self.max_level();
        let mut radical = Vec::with_capacity(max as usize + 1);
        for t in 0..=max {
            radical.push(self.algebra.radical_power(t)?);
        }
        let mut codes = Vec::with_capacity(max as usize);
        for nu in 0..max {
            codes.push(self.code(nu)?);
        }
        let equal: Vec<Vec<bool>> = radical
            .iter()
            .map(|mt| codes.iter().map(|c| mt == c).collect())
            .collect();
        Ok(RadicalCodeComparison {
            max_level: max,
            radical_dims: radical.iter().map(SubspaceBasis::dim).collect(),
            code_dims: codes.iter().map(SubspaceBasis::dim).collect(),
            lowest_code_is_top_radical: codes[0] == radical[max as usize],
            highest_code_is_radical: codes[max as usize - 1] == radical[1],
            equal,
        })
    }
}

/// Result of [`GrmContext::compare_radical_code`].
#[derive(Clone, Debug)]
pub struct RadicalCodeComparison {
    pub max_level: u32,
    /// dim M^t for t = 0..=max_level.
    pub radical_dims: Vec<usize>,
    /// dim C_nu for nu = 0..max_level.
    pub code_dims: Vec<usize>,
    /// `equal[t][nu]`: M^t and C_nu are the same subspace.
    pub equal: Vec<Vec<bool>>,
    pub lowest_code_is_top_radical: bool,
    pub highest_code_is_radical: bool,
}
