//! Exact linear algebra over F_q: row reduction, rank, nullspace, and
//! canonical subspace representations.
//!
//! Matrices are dense; the ambient dimensions at desk scale never
//! justify sparse machinery. Pivots are chosen as the first nonzero
//! entry left to right, top to bottom; arithmetic is exact so there are
//! no magnitude concerns.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ff::Fq;

/// Dense matrix over F_q, row major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixFq {
    field: Arc<Fq>,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl MatrixFq {
    pub fn zeros(field: &Arc<Fq>, rows: usize, cols: usize) -> MatrixFq {
        MatrixFq {
            field: Arc::clone(field),
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: &Arc<Fq>, n: usize) -> MatrixFq {
        let mut m = MatrixFq::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Build a matrix from encoded rows; rows must have uniform length
    /// and entries must be valid encodings for the field.
    pub fn from_rows(field: &Arc<Fq>, rows: &[Vec<u64>]) -> Result<MatrixFq> {
        let cols = rows.first().map_or(0, Vec::len);
        for r in rows {
            if r.len() != cols {
                return Err(Error::RaggedRows);
            }
            for &e in r {
                if e >= field.size() {
                    return Err(Error::OutOfRange {
                        what: "matrix entry",
                        value: e as i64,
                        limit: field.size() as i64 - 1,
                    });
                }
            }
        }
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            data.extend_from_slice(r);
        }
        Ok(MatrixFq {
            field: Arc::clone(field),
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn field(&self) -> &Arc<Fq> {
        &self.field
    }
    pub fn row_count(&self) -> usize {
        self.rows
    }
    pub fn col_count(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn rows_vec(&self) -> Vec<Vec<u64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// Reduced row-echelon form together with the rank and the strictly
    /// increasing pivot columns. The result is the unique RREF of the
    /// row space (zero rows kept at the bottom).
    pub fn rref(&self) -> (MatrixFq, usize, Vec<usize>) {
        let f = &self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0usize;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| m.at(i, c) != 0) else {
                continue;
            };
            if pr != r {
                for j in 0..m.cols {
                    m.data.swap(pr * m.cols + j, r * m.cols + j);
                }
            }
            let inv = f.inv(m.at(r, c)).expect("pivot is nonzero");
            for j in c..m.cols {
                m.data[r * m.cols + j] = f.mul(m.at(r, j), inv);
            }
            for i in 0..m.rows {
                if i == r || m.at(i, c) == 0 {
                    continue;
                }
                let factor = m.at(i, c);
                for j in c..m.cols {
                    let sub = f.mul(factor, m.at(r, j));
                    m.data[i * m.cols + j] = f.sub(m.at(i, j), sub);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, r, pivots)
    }

    /// Canonical basis of the right kernel {v : m v = 0}.
    pub fn nullspace(&self) -> SubspaceBasis {
        let f = Arc::clone(&self.field);
        let (red, rank, pivots) = self.rref();
        let mut basis = Vec::with_capacity(self.cols - rank);
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![0u64; self.cols];
            v[free] = 1;
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = f.neg(red.at(i, free));
            }
            basis.push(v);
        }
        SubspaceBasis::from_spanning(&f, self.cols, basis)
            .expect("kernel vectors have the ambient length")
    }
}

/// Canonical representation of a subspace of F_q^n: the unique reduced
/// row-echelon basis with no zero rows. Two values represent the same
/// subspace iff they are equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspaceBasis {
    field: Arc<Fq>,
    ambient: usize,
    /// RREF rows, sorted by pivot column.
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl SubspaceBasis {
    pub fn zero(field: &Arc<Fq>, ambient: usize) -> SubspaceBasis {
        SubspaceBasis {
            field: Arc::clone(field),
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: &Arc<Fq>, ambient: usize) -> SubspaceBasis {
        let mut s = SubspaceBasis::zero(field, ambient);
        for i in 0..ambient {
            let mut v = vec![0u64; ambient];
            v[i] = 1;
            s.rows.push(v);
            s.pivots.push(i);
        }
        s
    }

    /// Canonical span of a sequence of vectors; the result does not
    /// depend on their order. Empty input yields the zero subspace.
    pub fn from_spanning<I>(field: &Arc<Fq>, ambient: usize, vectors: I) -> Result<SubspaceBasis>
    where
        I: IntoIterator<Item = Vec<u64>>,
    {
        let mut s = SubspaceBasis::zero(field, ambient);
        for v in vectors {
            s.insert(v)?;
        }
        Ok(s)
    }

    /// Reduce one vector against the current rows and absorb what is
    /// left, keeping the RREF invariant. Returns true when the
    /// dimension grew.
    pub fn insert(&mut self, mut v: Vec<u64>) -> Result<bool> {
        if v.len() != self.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                got: v.len(),
            });
        }
        let f = Arc::clone(&self.field);
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = v[p];
            if c != 0 {
                for j in p..self.ambient {
                    v[j] = f.sub(v[j], f.mul(c, row[j]));
                }
            }
        }
        let Some(pivot) = v.iter().position(|&e| e != 0) else {
            return Ok(false);
        };
        let inv = f.inv(v[pivot]).expect("pivot is nonzero");
        for e in v.iter_mut().skip(pivot) {
            *e = f.mul(*e, inv);
        }
        // eliminate the new pivot from existing rows
        for row in self.rows.iter_mut() {
            let c = row[pivot];
            if c != 0 {
                for j in pivot..self.ambient {
                    row[j] = f.sub(row[j], f.mul(c, v[j]));
                }
            }
        }
        let at = self.pivots.partition_point(|&p| p < pivot);
        self.pivots.insert(at, pivot);
        self.rows.insert(at, v);
        Ok(true)
    }

    pub fn field(&self) -> &Arc<Fq> {
        &self.field
    }
    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }
    pub fn dim(&self) -> usize {
        self.rows.len()
    }
    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn matrix(&self) -> MatrixFq {
        MatrixFq::from_rows(&self.field, &self.rows).expect("canonical rows are rectangular")
    }

    /// Membership by reduction of `v` against the RREF rows.
    pub fn contains(&self, v: &[u64]) -> Result<bool> {
        if v.len() != self.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                got: v.len(),
            });
        }
        let f = &self.field;
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = v[p];
            if c != 0 {
                for j in p..self.ambient {
                    v[j] = f.sub(v[j], f.mul(c, row[j]));
                }
            }
        }
        Ok(v.iter().all(|&e| e == 0))
    }

    pub fn is_subspace_of(&self, other: &SubspaceBasis) -> Result<bool> {
        for row in &self.rows {
            if !other.contains(row)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}
