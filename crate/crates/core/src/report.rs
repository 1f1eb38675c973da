//! Serializable output schemas: generator-matrix files (JSON with a CSV
//! alternative), the parameter report, and the radical/code comparison
//! report.
//!
//! Matrix rows are coefficient vectors over F_q as integer encodings;
//! column 0 is the X^0 slot and columns 1..=n are g_0..g_{n-1} in the
//! context's coordinate order. Struct fields are declared in sorted
//! order so the emitted JSON is byte-stable.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ff::Fq;
use crate::galois_ring::GaloisRing;
use crate::grm::{weight_count, GrmContext, OrderingKind};
use crate::group_algebra::{Algebra, AlgebraElem};

/// Generator-matrix file: the rows are the K_nu coefficient vectors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenMatrixFile {
    pub gamma: u64,
    pub m: usize,
    pub modulus_ext: Vec<u64>,
    pub modulus_h: Vec<u64>,
    pub nu: u32,
    pub ordering: String,
    pub p: u64,
    pub r: u32,
    pub rows: Vec<Vec<u64>>,
}

/// Radical-basis file: the rows are the Jennings vectors V_i with
/// q-adic weight >= t, in increasing i order, in the same column order
/// as generator matrices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RadicalMatrixFile {
    pub m: usize,
    pub modulus_h: Vec<u64>,
    pub ordering: String,
    pub p: u64,
    pub r: u32,
    pub rows: Vec<Vec<u64>>,
    pub t: u32,
}

/// Parameter report: the numeric profile of one parameter set. The
/// degree and dimension columns come from the weight-count formulas;
/// the verification suites prove them equal to the computed ranks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamsReport {
    pub code_dims: Vec<usize>,
    pub degrees: Vec<usize>,
    pub field_modulus: Vec<u64>,
    pub gamma: u64,
    pub m: usize,
    pub max_level: u32,
    pub modulus_ext: Vec<u64>,
    pub modulus_h: Vec<u64>,
    pub n: usize,
    pub ordering: String,
    pub p: u64,
    pub q: u64,
    pub r: u32,
    pub radical_dims: Vec<usize>,
    pub weight_counts: Vec<u64>,
}

/// Radical/code comparison report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompareReport {
    pub code_dims: Vec<usize>,
    /// `equal[t][nu]`: M^t and C_nu are the same subspace.
    pub equal: Vec<Vec<bool>>,
    pub highest_code_is_radical: bool,
    pub lowest_code_is_top_radical: bool,
    pub m: usize,
    pub max_level: u32,
    pub ordering: String,
    pub p: u64,
    pub r: u32,
    pub radical_dims: Vec<usize>,
}

fn row_to_columns(ctx: &GrmContext, elem: &AlgebraElem) -> Vec<u64> {
    let mut row = Vec::with_capacity(ctx.n() + 1);
    row.push(elem.coeff(0));
    for &idx in ctx.order_map() {
        row.push(elem.coeff(idx));
    }
    row
}

/// The K_nu generator matrix in the serialization column order.
pub fn genmatrix(ctx: &GrmContext, nu: u32) -> Result<GenMatrixFile> {
    let ring = ctx.algebra().ring();
    let rows = ctx
        .generators(nu)?
        .iter()
        .map(|g| row_to_columns(ctx, g))
        .collect();
    Ok(GenMatrixFile {
        gamma: ctx.gamma(),
        m: ring.m(),
        modulus_ext: ctx.ext_field().modulus().to_vec(),
        modulus_h: ring.h().to_vec(),
        nu,
        ordering: ctx.ordering().name().to_string(),
        p: ring.p(),
        r: ring.r(),
        rows,
    })
}

/// The B_t radical-basis matrix in the serialization column order.
pub fn radical_matrix(ctx: &GrmContext, t: u32) -> Result<RadicalMatrixFile> {
    let ring = ctx.algebra().ring();
    let rows = ctx
        .algebra()
        .jennings_basis(t)?
        .iter()
        .map(|v| row_to_columns(ctx, v))
        .collect();
    Ok(RadicalMatrixFile {
        m: ring.m(),
        modulus_h: ring.h().to_vec(),
        ordering: ctx.ordering().name().to_string(),
        p: ring.p(),
        r: ring.r(),
        rows,
        t,
    })
}

pub fn params_report(ctx: &GrmContext) -> ParamsReport {
    let ring = ctx.algebra().ring();
    let q = ring.q();
    let m = ring.m();
    let max = ctx.max_level();
    let weight_counts: Vec<u64> = (0..=max).map(|t| weight_count(q, m, t)).collect();
    let degrees: Vec<usize> = (0..max)
        .map(|nu| {
            (1..=max - nu - 1)
                .map(|t| weight_counts[t as usize] as usize)
                .sum()
        })
        .collect();
    let code_dims: Vec<usize> = degrees.iter().map(|&d| ctx.n() - d).collect();
    let radical_dims: Vec<usize> = (0..=max)
        .map(|t| (t..=max).map(|s| weight_counts[s as usize] as usize).sum())
        .collect();
    ParamsReport {
        code_dims,
        degrees,
        field_modulus: ctx.algebra().field().modulus().to_vec(),
        gamma: ctx.gamma(),
        m,
        max_level: max,
        modulus_ext: ctx.ext_field().modulus().to_vec(),
        modulus_h: ring.h().to_vec(),
        n: ctx.n(),
        ordering: ctx.ordering().name().to_string(),
        p: ring.p(),
        q,
        r: ring.r(),
        radical_dims,
        weight_counts,
    }
}

pub fn compare_report(ctx: &GrmContext) -> Result<CompareReport> {
    let ring = ctx.algebra().ring();
    let cmp = ctx.compare_radical_code()?;
    Ok(CompareReport {
        code_dims: cmp.code_dims,
        equal: cmp.equal,
        highest_code_is_radical: cmp.highest_code_is_radical,
        lowest_code_is_top_radical: cmp.lowest_code_is_top_radical,
        m: ring.m(),
        max_level: cmp.max_level,
        ordering: ctx.ordering().name().to_string(),
        p: ring.p(),
        r: ring.r(),
        radical_dims: cmp.radical_dims,
    })
}

/// Deterministic JSON rendering: pretty-printed with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

/// CSV rendering of the matrix rows, same column order as the JSON.
pub fn rows_to_csv(rows: &[Vec<u64>]) -> String {
    let mut out = String::new();
    for row in rows {
        let line: Vec<String> = row.iter().map(u64::to_string).collect();
        out.push_str(&line.join(","));
        out.push('\n');
    }
    out
}

impl GenMatrixFile {
    pub fn from_json(s: &str) -> Result<GenMatrixFile> {
        serde_json::from_str(s)
            .map_err(|e| Error::InvalidParameter(format!("malformed generator-matrix file: {e}")))
    }

    /// Rebuild the context this file was emitted from.
    pub fn rebuild_context(&self) -> Result<GrmContext> {
        let ring = GaloisRing::from_h(self.p, self.r, self.m, self.modulus_h.clone())?;
        let algebra = Algebra::new(&ring, None)?;
        let kind = match self.ordering.as_str() {
            "integer" => OrderingKind::Integer,
            "gamma" => OrderingKind::GammaPowers,
            other => {
                return Err(Error::InvalidParameter(format!(
                    "unknown ordering name: {other}"
                )))
            }
        };
        let ext = Fq::with_modulus(self.p, self.r as usize * self.m, self.modulus_ext.clone())?;
        GrmContext::new(&algebra, kind, Some(self.gamma), Some(ext))
    }

    /// Convert the stored rows from serialization column order back to
    /// group-index coordinates.
    pub fn rows_in_group_coords(&self, ctx: &GrmContext) -> Result<Vec<Vec<u64>>> {
        let dim = ctx.algebra().dim();
        let mut out = Vec::with_capacity(self.rows.len());
        for row in &self.rows {
            if row.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: row.len(),
                });
            }
            let mut v = vec![0u64; dim];
            v[0] = row[0];
            for (pos, &idx) in ctx.order_map().iter().enumerate() {
                v[idx] = row[pos + 1];
            }
            out.push(v);
        }
        Ok(out)
    }
}
