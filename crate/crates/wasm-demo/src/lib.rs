//! Browser bindings: each exported function takes plain numeric
//! parameters and returns a JSON string for the static page to render.
//! The logic lives in plain functions so native tests cover it; the
//! wasm-bindgen wrappers only translate errors.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use grm_codes::error::{Error, Result};
use grm_codes::galois_ring::GaloisRing;
use grm_codes::grm::{GrmContext, OrderingKind, Slot};
use grm_codes::group_algebra::Algebra;
use grm_codes::report;

/// Keep the in-browser computations interactive.
const DEMO_DIM_LIMIT: u64 = 1024;

fn context(p: u64, r: u32, m: usize, ordering: &str) -> Result<GrmContext> {
    let kind = match ordering {
        "integer" => OrderingKind::Integer,
        "gamma" => OrderingKind::GammaPowers,
        other => {
            return Err(Error::InvalidParameter(format!(
                "unknown ordering: {other}"
            )))
        }
    };
    let ring = GaloisRing::new(p, r, m, None)?;
    if ring.size() > DEMO_DIM_LIMIT {
        return Err(Error::InvalidParameter(format!(
            "demo is limited to q^m <= {DEMO_DIM_LIMIT}"
        )));
    }
    let algebra = Algebra::new(&ring, None)?;
    GrmContext::new(&algebra, kind, None, None)
}

pub fn explore_json(p: u64, r: u32, m: usize, ordering: &str) -> Result<String> {
    let ctx = context(p, r, m, ordering)?;
    Ok(report::to_json(&report::params_report(&ctx)))
}

#[derive(Serialize)]
struct MatrixView {
    /// Field size, for the color scale.
    field_size: u64,
    /// Column of the leading term of each row (0 = X^0 slot).
    leading_cols: Vec<usize>,
    matrix: report::GenMatrixFile,
}

pub fn generator_matrix_json(p: u64, r: u32, m: usize, nu: u32, ordering: &str) -> Result<String> {
    let ctx = context(p, r, m, ordering)?;
    let matrix = report::genmatrix(&ctx, nu)?;
    let mut leading_cols = Vec::with_capacity(matrix.rows.len());
    for gen in ctx.generators(nu)? {
        let col = match ctx.leading_term(&gen)?.slot {
            Slot::Identity => 0,
            Slot::Position(pos) => pos + 1,
        };
        leading_cols.push(col);
    }
    Ok(report::to_json(&MatrixView {
        field_size: ctx.algebra().field().size(),
        leading_cols,
        matrix,
    }))
}

#[derive(Serialize)]
struct RadicalView {
    field_size: u64,
    matrix: report::RadicalMatrixFile,
}

pub fn radical_matrix_json(p: u64, r: u32, m: usize, t: u32, ordering: &str) -> Result<String> {
    let ctx = context(p, r, m, ordering)?;
    let matrix = report::radical_matrix(&ctx, t)?;
    Ok(report::to_json(&RadicalView {
        field_size: ctx.algebra().field().size(),
        matrix,
    }))
}

pub fn compare_json(p: u64, r: u32, m: usize, ordering: &str) -> Result<String> {
    let ctx = context(p, r, m, ordering)?;
    Ok(report::to_json(&report::compare_report(&ctx)?))
}

fn to_js<T>(r: Result<T>) -> std::result::Result<T, JsError> {
    r.map_err(|e| JsError::new(&e.to_string()))
}

/// Parameter profile: moduli, gamma, weight counts, degrees, dimensions.
#[wasm_bindgen]
pub fn explore(p: u64, r: u32, m: usize, ordering: &str) -> std::result::Result<String, JsError> {
    to_js(explore_json(p, r, m, ordering))
}

/// Generator matrix of the order-nu code with leading-term columns.
#[wasm_bindgen]
pub fn generator_matrix(
    p: u64,
    r: u32,
    m: usize,
    nu: u32,
    ordering: &str,
) -> std::result::Result<String, JsError> {
    to_js(generator_matrix_json(p, r, m, nu, ordering))
}

/// Radical-power basis matrix at level t.
#[wasm_bindgen]
pub fn radical_matrix(
    p: u64,
    r: u32,
    m: usize,
    t: u32,
    ordering: &str,
) -> std::result::Result<String, JsError> {
    to_js(radical_matrix_json(p, r, m, t, ordering))
}

/// Radical powers versus codes: dimensions and the equality matrix.
#[wasm_bindgen]
pub fn compare(p: u64, r: u32, m: usize, ordering: &str) -> std::result::Result<String, JsError> {
    to_js(compare_json(p, r, m, ordering))
}
