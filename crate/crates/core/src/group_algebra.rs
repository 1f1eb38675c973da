//! The modular group algebra `R = F_q[G]` for G the additive group of
//! GR(p^r, m), with q = p^r: convolution product, augmentation, the
//! radical M, Jennings vectors and bases, radical powers, annihilators.
//!
//! Elements are dense length-q^m coefficient sequences indexed by group
//! index; the product is the group convolution with digit-wise index
//! addition mod q.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ff::{self, Fq};
use crate::galois_ring::GaloisRing;
use crate::linalg::{MatrixFq, SubspaceBasis};

/// The pair (ring, coefficient field) describing `F_q[G]`.
pub struct Algebra {
    ring: Arc<GaloisRing>,
    field: Arc<Fq>,
}

impl std::fmt::Debug for Algebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Algebra(F_{}[G], |G| = {})",
            self.field.size(),
            self.ring.size()
        )
    }
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.field == other.field
    }
}
impl Eq for Algebra {}

impl Algebra {
    /// Build `F_q[G]` over the given ring; the coefficient field defaults
    /// to F_{p^r} with the canonical modulus and must have exactly
    /// q = p^r elements.
    pub fn new(ring: &Arc<GaloisRing>, field: Option<Arc<Fq>>) -> Result<Arc<Algebra>> {
        let field = match field {
            Some(f) => f,
            None => Fq::canonical(ring.p(), ring.r() as usize)?,
        };
        if field.p() != ring.p() || field.size() != ring.q() {
            return Err(Error::InvalidParameter(
                "coefficient field must have p^r elements".into(),
            ));
        }
        Ok(Arc::new(Algebra {
            ring: Arc::clone(ring),
            field,
        }))
    }

    pub fn ring(&self) -> &Arc<GaloisRing> {
        &self.ring
    }
    pub fn field(&self) -> &Arc<Fq> {
        &self.field
    }
    /// Dimension of the algebra over F_q, i.e. q^m.
    pub fn dim(&self) -> usize {
        self.ring.size() as usize
    }
    /// Nilpotency bound m(q - 1): the radical satisfies
    /// M^{m(q-1)} != 0 and M^{m(q-1)+1} = 0.
    pub fn max_level(&self) -> u32 {
        (self.ring.m() as u64 * (self.ring.q() - 1)) as u32
    }

    pub fn zero(self: &Arc<Self>) -> AlgebraElem {
        AlgebraElem {
            algebra: Arc::clone(self),
            coeffs: vec![0; self.dim()],
        }
    }

    /// X^0, the multiplicative identity.
    pub fn one(self: &Arc<Self>) -> AlgebraElem {
        self.monomial(0).expect("0 is a valid group index")
    }

    /// The basis monomial X^g for a group index g.
    pub fn monomial(self: &Arc<Self>, g: usize) -> Result<AlgebraElem> {
        if g >= self.dim() {
            return Err(Error::OutOfRange {
                what: "group index",
                value: g as i64,
                limit: self.dim() as i64 - 1,
            });
        }
        let mut coeffs = vec![0; self.dim()];
        coeffs[g] = 1;
        Ok(AlgebraElem {
            algebra: Arc::clone(self),
            coeffs,
        })
    }

    pub fn from_coeffs(self: &Arc<Self>, coeffs: Vec<u64>) -> Result<AlgebraElem> {
        if coeffs.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: coeffs.len(),
            });
        }
        if coeffs.iter().any(|&c| c >= self.field.size()) {
            return Err(Error::OutOfRange {
                what: "coefficient encoding",
                value: 0,
                limit: self.field.size() as i64 - 1,
            });
        }
        Ok(AlgebraElem {
            algebra: Arc::clone(self),
            coeffs,
        })
    }

    /// X^{alpha^l} - 1, the l-th Jennings factor.
    fn jennings_factor(self: &Arc<Self>, l: usize) -> AlgebraElem {
        let g = self.ring.q().pow(l as u32) as usize; // index of alpha^l
        let x = self.monomial(g).expect("alpha^l has a valid index");
        x.sub(&self.one()).expect("same algebra")
    }

    /// The Jennings vector V_i: the product over l of
    /// (X^{alpha^l} - 1)^{i_l} with (i_l) the base-q digits of i.
    /// Factors are raised by binary exponentiation.
    pub fn jennings_vector(self: &Arc<Self>, i: usize) -> Result<AlgebraElem> {
        if i >= self.dim() {
            return Err(Error::OutOfRange {
                what: "Jennings index",
                value: i as i64,
                limit: self.dim() as i64 - 1,
            });
        }
        let digits = ff::enc_to_digits(i as u64, self.ring.q(), self.ring.m());
        let mut acc = self.one();
        for (l, &d) in digits.iter().enumerate() {
            if d == 0 {
                continue;
            }
            let factor = self.jennings_factor(l).pow(d);
            acc = acc.mul(&factor)?;
        }
        Ok(acc)
    }

    /// B_t: the Jennings vectors V_i with q-adic weight >= t, in
    /// increasing i order. B_t is a linear basis of M^t.
    pub fn jennings_basis(self: &Arc<Self>, t: u32) -> Result<Vec<AlgebraElem>> {
        if t > self.max_level() {
            return Err(Error::OutOfRange {
                what: "radical level",
                value: t as i64,
                limit: self.max_level() as i64,
            });
        }
        let q = self.ring.q();
        let m = self.ring.m();
        let mut out = Vec::new();
        for i in 0..self.dim() {
            if qary_weight_unchecked(i, q, m) >= t {
                out.push(self.jennings_vector(i)?);
            }
        }
        Ok(out)
    }

    /// Canonical subspace M^t = span(B_t). The level t may exceed the
    /// nilpotency bound by one, giving the zero subspace.
    pub fn radical_power(self: &Arc<Self>, t: u32) -> Result<SubspaceBasis> {
        if t == self.max_level() + 1 {
            return Ok(SubspaceBasis::zero(&self.field, self.dim()));
        }
        let basis = self.jennings_basis(t)?;
        SubspaceBasis::from_spanning(&self.field, self.dim(), basis.into_iter().map(|v| v.coeffs))
    }

    /// Independent reference computation of all radical powers
    /// M^0, ..., M^{t_max}: M^t is spanned by the t-fold products of
    /// the linear generators X^g - 1 of M, so each level is the span of
    /// (previous level basis) * (generators). Quadratic in the ambient
    /// dimension per level; intended for small parameters.
    pub fn radical_powers_from_products(self: &Arc<Self>, t_max: u32) -> Vec<SubspaceBasis> {
        let dim = self.dim();
        let mut out = Vec::with_capacity(t_max as usize + 1);
        out.push(SubspaceBasis::full(&self.field, dim));
        if t_max == 0 {
            return out;
        }
        let generators: Vec<AlgebraElem> = (1..dim)
            .map(|g| {
                self.monomial(g)
                    .expect("valid index")
                    .sub(&self.one())
                    .expect("same algebra")
            })
            .collect();
        let mut level = SubspaceBasis::from_spanning(
            &self.field,
            dim,
            generators.iter().map(|g| g.coeffs.clone()),
        )
        .expect("generator rows have the ambient length");
        out.push(level.clone());
        for _ in 2..=t_max {
            let mut next = SubspaceBasis::zero(&self.field, dim);
            'rows: for row in level.rows() {
                let elem = self.from_coeffs(row.clone()).expect("basis row is valid");
                for g in &generators {
                    let prod = elem.mul(g).expect("same algebra");
                    next.insert(prod.coeffs)
                        .expect("product has ambient length");
                    if next.dim() == level.dim() {
                        // the span cannot grow past the previous level
                        break 'rows;
                    }
                }
            }
            out.push(next.clone());
            level = next;
        }
        out
    }

    /// Single-level variant of [`Algebra::radical_powers_from_products`].
    pub fn radical_power_from_products(self: &Arc<Self>, t: u32) -> SubspaceBasis {
        self.radical_powers_from_products(t)
            .pop()
            .expect("nonempty")
    }

    /// ann(S) = {a in R | a s = 0 for all s in S}: the nullspace of the
    /// stacked multiplication-by-s matrices.
    pub fn annihilator(self: &Arc<Self>, spanning: &[AlgebraElem]) -> Result<SubspaceBasis> {
        if spanning.is_empty() {
            return Err(Error::EmptySpanningSet);
        }
        let dim = self.dim();
        let mut rows = Vec::with_capacity(spanning.len() * dim);
        for s in spanning {
            if s.algebra.as_ref() != self.as_ref() {
                return Err(Error::RingMismatch);
            }
            // row k of the map v -> v*s: (v*s)[k] = sum_i s[k - g_i] v[i]
            for k in 0..dim {
                let mut row = vec![0u64; dim];
                for (i, slot) in row.iter_mut().enumerate() {
                    *slot = s.coeffs[self.ring.idx_sub(k, i)];
                }
                rows.push(row);
            }
        }
        let stacked = MatrixFq::from_rows(&self.field, &rows)?;
        Ok(stacked.nullspace())
    }

    /// Product of (X^g - 1)^{p-1} over a set U of nonzero group
    /// elements; defined for r = 1 only. Equals the sum of X^g over the
    /// F_p-span of U when U is linearly independent, and 0 otherwise.
    pub fn subset_product(self: &Arc<Self>, u: &[usize]) -> Result<AlgebraElem> {
        if self.ring.r() != 1 {
            return Err(Error::Unsupported(
                "subset products are defined for r = 1 only".into(),
            ));
        }
        if u.is_empty() {
            return Err(Error::EmptySpanningSet);
        }
        let p = self.ring.p();
        let mut acc = self.one();
        for &g in u {
            if g == 0 {
                return Err(Error::InvalidParameter(
                    "subset must not contain the zero element".into(),
                ));
            }
            let factor = self
                .monomial(g)?
                .sub(&self.one())
                .expect("same algebra")
                .pow(p - 1);
            acc = acc.mul(&factor)?;
        }
        Ok(acc)
    }
}

/// q-adic weight: the digit sum of the base-q expansion of i.
pub fn qary_weight(i: usize, q: u64, m: usize) -> Result<u32> {
    let limit = q.pow(m as u32);
    if (i as u64) >= limit {
        return Err(Error::OutOfRange {
            what: "index",
            value: i as i64,
            limit: limit as i64 - 1,
        });
    }
    Ok(qary_weight_unchecked(i, q, m))
}

fn qary_weight_unchecked(i: usize, q: u64, _m: usize) -> u32 {
    let mut i = i as u64;
    let mut w = 0;
    while i > 0 {
        w += (i % q) as u32;
        i /= q;
    }
    w
}

/// An index i in E = [0, q^m) together with its base-q digits and
/// q-adic weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightIndex {
    pub index: usize,
    pub digits: Vec<u64>,
    pub weight: u32,
}

impl WeightIndex {
    pub fn new(index: usize, q: u64, m: usize) -> Result<WeightIndex> {
        let weight = qary_weight(index, q, m)?;
        Ok(WeightIndex {
            index,
            digits: ff::enc_to_digits(index as u64, q, m),
            weight,
        })
    }
}

/// A group algebra element: dense coefficient vector over F_q indexed
/// by group index.
#[derive(Clone, Debug)]
pub struct AlgebraElem {
    algebra: Arc<Algebra>,
    coeffs: Vec<u64>,
}

impl PartialEq for AlgebraElem {
    fn eq(&self, other: &Self) -> bool {
        self.algebra == other.algebra && self.coeffs == other.coeffs
    }
}
impl Eq for AlgebraElem {}

impl AlgebraElem {
    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }
    pub fn coeff(&self, g: usize) -> u64 {
        self.coeffs[g]
    }
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    fn same(&self, rhs: &Self) -> Result<()> {
        if self.algebra == rhs.algebra {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn add(&self, rhs: &Self) -> Result<AlgebraElem> {
        self.same(rhs)?;
        let f = self.algebra.field();
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(&a, &b)| f.add(a, b))
            .collect();
        Ok(AlgebraElem {
            algebra: Arc::clone(&self.algebra),
            coeffs,
        })
    }

    pub fn neg(&self) -> AlgebraElem {
        let f = self.algebra.field();
        AlgebraElem {
            algebra: Arc::clone(&self.algebra),
            coeffs: self.coeffs.iter().map(|&a| f.neg(a)).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Result<AlgebraElem> {
        self.add(&rhs.neg())
    }

    pub fn scale(&self, c: u64) -> AlgebraElem {
        let f = self.algebra.field();
        AlgebraElem {
            algebra: Arc::clone(&self.algebra),
            coeffs: self.coeffs.iter().map(|&a| f.mul(c, a)).collect(),
        }
    }

    /// Group convolution: `(a b)[k] = sum over g + h = k of a[g] b[h]`,
    /// with index addition digit-wise mod q.
    pub fn mul(&self, rhs: &Self) -> Result<AlgebraElem> {
        self.same(rhs)?;
        let f = self.algebra.field();
        let ring = self.algebra.ring();
        let mut out = vec![0u64; self.coeffs.len()];
        for (i, &ai) in self.coeffs.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in rhs.coeffs.iter().enumerate() {
                if bj == 0 {
                    continue;
                }
                let k = ring.idx_add(i, j);
                out[k] = f.add(out[k], f.mul(ai, bj));
            }
        }
        Ok(AlgebraElem {
            algebra: Arc::clone(&self.algebra),
            coeffs: out,
        })
    }

    pub fn pow(&self, mut e: u64) -> AlgebraElem {
        let mut acc = self.algebra.one();
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).expect("same algebra");
            }
            base = base.mul(&base).expect("same algebra");
            e >>= 1;
        }
        acc
    }

    /// The augmentation: the sum of all coefficients. A ring
    /// homomorphism onto F_q whose kernel is the radical M.
    pub fn augment(&self) -> u64 {
        let f = self.algebra.field();
        self.coeffs.iter().fold(0, |acc, &c| f.add(acc, c))
    }

    /// Every element outside the radical is a unit: a is invertible iff
    /// its augmentation is nonzero, iff a^{p^r} != 0.
    pub fn is_unit(&self) -> bool {
        self.augment() != 0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::galois_ring::GaloisRing;

    fn alg(p: u64, r: u32, m: usize) -> Arc<Algebra> {
        let ring = GaloisRing::new(p, r, m, None).unwrap();
        Algebra::new(&ring, None).unwrap()
    }

    #[test]
    fn monomials_multiply_by_index_addition() {
        let a = alg(2, 2, 2);
        for g in 0..16 {
            for h in 0..16 {
                let prod = a.monomial(g).unwrap().mul(&a.monomial(h).unwrap()).unwrap();
                let k = a.ring().idx_add(g, h);
                assert_eq!(prod, a.monomial(k).unwrap());
            }
        }
    }

    #[test]
    fn qth_power_collapses_to_augmentation() {
        // (X^1 - 1)^q = 0; more generally a^q = augment(a) X^0
        for a in [alg(2, 2, 2), alg(2, 1, 2), alg(3, 1, 2)] {
            let q = a.ring().q();
            let x1 = a.monomial(1).unwrap().sub(&a.one()).unwrap();
            assert!(x1.pow(q).is_zero());
            let sample = {
                let mut coeffs = vec![0u64; a.dim()];
                for (i, c) in coeffs.iter_mut().enumerate() {
                    *c = (i as u64 * 3 + 1) % a.field().size();
                }
                a.from_coeffs(coeffs).unwrap()
            };
            let expect = a.one().scale(sample.augment());
            assert_eq!(sample.pow(q), expect);
        }
    }

    #[test]
    fn cube_of_basic_factor_is_scalar_orbit_sum() {
        // (p,r,m) = (2,2,2), g = 1: (X^1 - 1)^3 = X^0 + X^1 + X^2 + X^3
        let a = alg(2, 2, 2);
        let v = a.monomial(1).unwrap().sub(&a.one()).unwrap().pow(3);
        let mut expect = [0u64; 16];
        expect[..4].fill(1);
        assert_eq!(v.coeffs(), &expect[..]);
    }

    #[test]
    fn orbit_sum_identity_all_orders() {
        // (X^g - 1)^{q-1} = sum over i in [0, q) of X^{ig}, with
        // repetitions collapsed in characteristic p
        for a in [alg(2, 2, 2), alg(2, 1, 3), alg(3, 1, 2), alg(2, 3, 1)] {
            let q = a.ring().q();
            let f = Arc::clone(a.field());
            for g in 1..a.dim() {
                let lhs = a.monomial(g).unwrap().sub(&a.one()).unwrap().pow(q - 1);
                let mut rhs = vec![0u64; a.dim()];
                let mut idx = 0usize;
                for _ in 0..q {
                    rhs[idx] = f.add(rhs[idx], 1);
                    idx = a.ring().idx_add(idx, g);
                }
                assert_eq!(lhs.coeffs(), &rhs[..], "g={g}");
            }
        }
    }

    #[test]
    fn augmentation_examples() {
        let a = alg(2, 2, 2);
        assert_eq!(a.monomial(5).unwrap().augment(), 1);
        assert_eq!(a.monomial(5).unwrap().sub(&a.one()).unwrap().augment(), 0);
        let all = a.from_coeffs(vec![1; 16]).unwrap();
        assert_eq!(all.augment(), 0); // q^m * 1 = 0 in characteristic p
    }

    #[test]
    fn unit_criterion() {
        let a = alg(2, 2, 2);
        assert!(a.monomial(3).unwrap().is_unit());
        assert!(!a.monomial(3).unwrap().sub(&a.one()).unwrap().is_unit());
        assert!(a.one().scale(2).is_unit()); // nonzero scalar of F_4
    }

    #[test]
    fn jennings_vector_examples() {
        let a = alg(2, 2, 2);
        assert_eq!(a.jennings_vector(0).unwrap(), a.one());
        // V_{q^m - 1} is the sum of all monomials
        let top = a.jennings_vector(15).unwrap();
        assert_eq!(top.coeffs(), &vec![1u64; 16][..]);
        // digits of 4 are (0,1): a single factor X^alpha - 1
        let v4 = a.jennings_vector(4).unwrap();
        let expect = a.monomial(4).unwrap().sub(&a.one()).unwrap();
        assert_eq!(v4, expect);
    }

    #[test]
    fn jennings_basis_sizes() {
        let a = alg(2, 2, 2);
        assert_eq!(a.jennings_basis(0).unwrap().len(), 16);
        assert_eq!(a.jennings_basis(1).unwrap().len(), 15);
        assert_eq!(a.jennings_basis(2).unwrap().len(), 13);
        assert!(a.jennings_basis(7).is_err());
    }

    #[test]
    fn radical_power_dimensions() {
        let a = alg(2, 2, 2);
        assert_eq!(a.radical_power(1).unwrap().dim(), 15);
        assert_eq!(a.radical_power(6).unwrap().dim(), 1);
        assert_eq!(a.radical_power(7).unwrap().dim(), 0);
        assert!(a.radical_power(8).is_err());
    }

    #[test]
    fn radical_oracle_small_case() {
        // (2,1,2): M^2 = span of the all-ones vector
        let a = alg(2, 1, 2);
        let m2 = a.radical_power_from_products(2);
        assert_eq!(m2.dim(), 1);
        assert_eq!(m2.rows()[0], vec![1, 1, 1, 1]);
        // t = 0 is the full space, t = 1 the kernel of the augmentation
        let all = a.radical_powers_from_products(1);
        assert_eq!(all[0].dim(), 4);
        assert_eq!(all[1].dim(), 3);
        for row in all[1].rows() {
            assert_eq!(a.from_coeffs(row.clone()).unwrap().augment(), 0);
        }
    }

    #[test]
    fn annihilator_duality_cases() {
        let a = alg(2, 2, 2);
        let ann_m = a.annihilator(&a.jennings_basis(1).unwrap()).unwrap();
        assert_eq!(ann_m, a.radical_power(6).unwrap());
        assert_eq!(ann_m.dim(), 1);
        let ann_top = a.annihilator(&a.jennings_basis(6).unwrap()).unwrap();
        assert_eq!(ann_top, a.radical_power(1).unwrap());
        assert_eq!(ann_top.dim(), 15);
        let ann_m2 = a.annihilator(&a.jennings_basis(2).unwrap()).unwrap();
        assert_eq!(ann_m2, a.radical_power(5).unwrap());
        assert_eq!(ann_m2.dim(), 3);
    }

    #[test]
    fn annihilator_rejects_empty_input() {
        let a = alg(2, 1, 2);
        assert_eq!(a.annihilator(&[]), Err(Error::EmptySpanningSet));
    }

    #[test]
    fn weights() {
        assert_eq!(qary_weight(11, 4, 2).unwrap(), 5);
        assert_eq!(qary_weight(0, 4, 2).unwrap(), 0);
        assert_eq!(qary_weight(15, 4, 2).unwrap(), 6);
        assert!(qary_weight(16, 4, 2).is_err());
        let w = WeightIndex::new(11, 4, 2).unwrap();
        assert_eq!(w.digits, vec![3, 2]);
        assert_eq!(w.weight, 5);
    }

    mod convolution_axioms {
        use super::*;
        use proptest::prelude::*;

        fn coeffs() -> impl Strategy<Value = Vec<u64>> {
            proptest::collection::vec(0u64..4, 16)
        }

        proptest! {
            #[test]
            fn commutative_associative_unital(a in coeffs(), b in coeffs(), c in coeffs()) {
                let alg = alg(2, 2, 2);
                let a = alg.from_coeffs(a).unwrap();
                let b = alg.from_coeffs(b).unwrap();
                let c = alg.from_coeffs(c).unwrap();
                prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
                prop_assert_eq!(
                    a.mul(&b).unwrap().mul(&c).unwrap(),
                    a.mul(&b.mul(&c).unwrap()).unwrap()
                );
                prop_assert_eq!(alg.one().mul(&a).unwrap(), a.clone());
                prop_assert_eq!(
                    a.mul(&b.add(&c).unwrap()).unwrap(),
                    a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
                );
            }
        }
    }

    #[test]
    fn subset_products() {
        let a = alg(2, 1, 2);
        // single element: X^0 + X^g
        let s = a.subset_product(&[2]).unwrap();
        assert_eq!(s.coeffs(), &[1, 0, 1, 0]);
        // a basis of G: the sum over all of G
        let s = a.subset_product(&[1, 2]).unwrap();
        assert_eq!(s.coeffs(), &[1, 1, 1, 1]);
        // dependent set: zero
        let s = a.subset_product(&[1, 2, 3]).unwrap();
        assert!(s.is_zero());
        // r > 1 unsupported
        let a422 = alg(2, 2, 2);
        assert!(matches!(
            a422.subset_product(&[1]),
            Err(Error::Unsupported(_))
        ));
        assert!(matches!(
            a.subset_product(&[0, 1]),
            Err(Error::InvalidParameter(_))
        ));
    }
}
