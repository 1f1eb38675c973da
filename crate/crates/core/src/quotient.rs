//! The isomorphism between `F_q[G]` and the multivariate quotient ring
//! `F_q[X_0, ..., X_{m-1}] / (X_0^q - 1, ..., X_{m-1}^q - 1)`.
//!
//! Because every divisor X_i^q - 1 is a pure power minus a constant,
//! the general multivariate division collapses to reducing each
//! exponent mod q; this yields the identical unique remainder.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ff::{self, Fq};
use crate::group_algebra::{Algebra, AlgebraElem};

/// Sparse multivariate polynomial over F_q: a map from exponent tuples
/// to nonzero coefficient encodings. Zero coefficients are never
/// stored; in normal form all exponents additionally lie in [0, q).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPoly {
    field: Arc<Fq>,
    vars: usize,
    terms: BTreeMap<Vec<u64>, u64>,
}

impl MultiPoly {
    pub fn zero(field: &Arc<Fq>, vars: usize) -> MultiPoly {
        MultiPoly {
            field: Arc::clone(field),
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms<I>(field: &Arc<Fq>, vars: usize, terms: I) -> Result<MultiPoly>
    where
        I: IntoIterator<Item = (Vec<u64>, u64)>,
    {
        let mut out = MultiPoly::zero(field, vars);
        for (exps, coeff) in terms {
            out.add_term(&exps, coeff)?;
        }
        Ok(out)
    }

    /// A single monomial with coefficient 1.
    pub fn monomial(field: &Arc<Fq>, exps: Vec<u64>) -> MultiPoly {
        let vars = exps.len();
        let mut terms = BTreeMap::new();
        terms.insert(exps, 1);
        MultiPoly {
            field: Arc::clone(field),
            vars,
            terms,
        }
    }

    pub fn field(&self) -> &Arc<Fq> {
        &self.field
    }
    pub fn vars(&self) -> usize {
        self.vars
    }
    pub fn terms(&self) -> &BTreeMap<Vec<u64>, u64> {
        &self.terms
    }
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, exps: &[u64], coeff: u64) -> Result<()> {
        if exps.len() != self.vars {
            return Err(Error::DimensionMismatch {
                expected: self.vars,
                got: exps.len(),
            });
        }
        if coeff >= self.field.size() {
            return Err(Error::OutOfRange {
                what: "coefficient encoding",
                value: coeff as i64,
                limit: self.field.size() as i64 - 1,
            });
        }
        if coeff == 0 {
            return Ok(());
        }
        let f = Arc::clone(&self.field);
        match self.terms.entry(exps.to_vec()) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = f.add(*e.get(), coeff);
                if sum == 0 {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
        }
        Ok(())
    }

    pub fn add(&self, rhs: &MultiPoly) -> Result<MultiPoly> {
        self.same(rhs)?;
        let mut out = self.clone();
        for (exps, &c) in &rhs.terms {
            out.add_term(exps, c)?;
        }
        Ok(out)
    }

    pub fn mul(&self, rhs: &MultiPoly) -> Result<MultiPoly> {
        self.same(rhs)?;
        let f = &self.field;
        let mut out = MultiPoly::zero(f, self.vars);
        for (ea, &ca) in &self.terms {
            for (eb, &cb) in &rhs.terms {
                let exps: Vec<u64> = ea.iter().zip(eb).map(|(&x, &y)| x + y).collect();
                out.add_term(&exps, f.mul(ca, cb))?;
            }
        }
        Ok(out)
    }

    fn same(&self, rhs: &MultiPoly) -> Result<()> {
        if self.field.same_field(&rhs.field) && self.vars == rhs.vars {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    /// The unique remainder modulo the ideal (X_i^q - 1): every
    /// exponent reduced mod q, like terms combined.
    pub fn normal_form(&self, q: u64) -> MultiPoly {
        let mut out = MultiPoly::zero(&self.field, self.vars);
        for (exps, &c) in &self.terms {
            let red: Vec<u64> = exps.iter().map(|&e| e % q).collect();
            out.add_term(&red, c).expect("reduced term is valid");
        }
        out
    }
}

/// The homomorphism sending X_i to X^{alpha^i}: a monomial with
/// exponents (i_0, ..., i_{m-1}) maps to the group monomial whose index
/// has base-q digits (i_0 mod q, ..., i_{m-1} mod q).
pub fn psi(algebra: &Arc<Algebra>, f: &MultiPoly) -> Result<AlgebraElem> {
    let ring = algebra.ring();
    if f.vars != ring.m() {
        return Err(Error::DimensionMismatch {
            expected: ring.m(),
            got: f.vars,
        });
    }
    if !f.field.same_field(algebra.field()) {
        return Err(Error::FieldMismatch);
    }
    let q = ring.q();
    let fld = algebra.field();
    let mut coeffs = vec![0u64; algebra.dim()];
    for (exps, &c) in &f.terms {
        let digits: Vec<u64> = exps.iter().map(|&e| e % q).collect();
        let g = ff::digits_to_enc(&digits, q) as usize;
        coeffs[g] = fld.add(coeffs[g], c);
    }
    algebra.from_coeffs(coeffs)
}

/// The inverse on normal forms: X^g maps to the monomial whose
/// exponents are the base-q digits of g, extended linearly.
pub fn psi_inverse(algebra: &Arc<Algebra>, a: &AlgebraElem) -> MultiPoly {
    let ring = algebra.ring();
    let q = ring.q();
    let m = ring.m();
    let mut out = MultiPoly::zero(algebra.field(), m);
    for (g, &c) in a.coeffs().iter().enumerate() {
        if c == 0 {
            continue;
        }
        let exps = ff::enc_to_digits(g as u64, q, m);
        out.add_term(&exps, c).expect("digit exponents are valid");
    }
    out
}
