//! End-to-end tests of the `grm` binary: exit codes, output formats,
//! determinism, and the generator-matrix round trip.

use std::process::{Command, Output};

use grm_codes::linalg::SubspaceBasis;
use grm_codes::report::GenMatrixFile;

fn grm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_grm"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn params_profile_is_printed() {
    let out = grm(&["params", "--p", "2", "--r", "2", "--m", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("dim C_nu: 1 3 6 10 13 15"));
    assert!(text.contains("deg f_nu: 14 12 9 5 2 0"));
    assert!(text.contains("h = [1, 1, 1]"));
}

#[test]
fn params_smallest_case() {
    let out = grm(&["params", "--p", "2", "--r", "1", "--m", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("q = 2"));
    assert!(text.contains("n = 1"));
    assert!(text.contains("dim C_nu: 1"));
}

#[test]
fn composite_p_is_a_usage_error() {
    let out = grm(&["params", "--p", "4", "--r", "1", "--m", "2"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr).into_owned();
    assert!(err.contains("p must be prime"));
}

#[test]
fn ambient_guard_is_enforced() {
    let out = grm(&["params", "--p", "2", "--r", "1", "--m", "13"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn genmatrix_order_zero_is_all_ones() {
    let out = grm(&["genmatrix", "--p", "2", "--r", "2", "--m", "2", "--nu", "0"]);
    assert_eq!(out.status.code(), Some(0));
    let file = GenMatrixFile::from_json(&stdout(&out)).unwrap();
    assert_eq!(file.rows, vec![vec![1u64; 16]]);
}

#[test]
fn genmatrix_top_order_has_full_rank() {
    let out = grm(&["genmatrix", "--p", "2", "--r", "2", "--m", "2", "--nu", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let file = GenMatrixFile::from_json(&stdout(&out)).unwrap();
    assert_eq!(file.rows.len(), 15);
    let ctx = file.rebuild_context().unwrap();
    let rows = file.rows_in_group_coords(&ctx).unwrap();
    let span = SubspaceBasis::from_spanning(ctx.algebra().field(), 16, rows).unwrap();
    assert_eq!(span.dim(), 15);
}

#[test]
fn genmatrix_round_trip_recovers_the_code() {
    for ordering in ["integer", "gamma"] {
        let out = grm(&[
            "genmatrix",
            "--p",
            "2",
            "--r",
            "1",
            "--m",
            "3",
            "--nu",
            "1",
            "--ordering",
            ordering,
        ]);
        assert_eq!(out.status.code(), Some(0));
        let file = GenMatrixFile::from_json(&stdout(&out)).unwrap();
        let ctx = file.rebuild_context().unwrap();
        let rows = file.rows_in_group_coords(&ctx).unwrap();
        let span =
            SubspaceBasis::from_spanning(ctx.algebra().field(), ctx.algebra().dim(), rows).unwrap();
        assert_eq!(span, ctx.code(1).unwrap(), "ordering {ordering}");
    }
}

#[test]
fn genmatrix_out_of_range_order() {
    let out = grm(&["genmatrix", "--p", "2", "--r", "2", "--m", "2", "--nu", "6"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn genmatrix_output_is_deterministic() {
    let args = ["genmatrix", "--p", "2", "--r", "2", "--m", "2", "--nu", "3"];
    let a = grm(&args);
    let b = grm(&args);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn genmatrix_matches_golden_file() {
    let out = grm(&["genmatrix", "--p", "2", "--r", "2", "--m", "2", "--nu", "1"]);
    let golden = include_str!("golden/genmatrix_p2_r2_m2_nu1.json");
    assert_eq!(stdout(&out), golden);
}

#[test]
fn genmatrix_writes_output_file() {
    let path = std::path::Path::new(env!("CARGO_TARGET_TMPDIR")).join("k0.json");
    let out = grm(&[
        "genmatrix",
        "--p",
        "2",
        "--r",
        "2",
        "--m",
        "2",
        "--nu",
        "0",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let written = std::fs::read_to_string(&path).unwrap();
    let file = GenMatrixFile::from_json(&written).unwrap();
    assert_eq!(file.rows, vec![vec![1u64; 16]]);
}

#[test]
fn genmatrix_csv_format() {
    let out = grm(&[
        "genmatrix",
        "--p",
        "2",
        "--r",
        "2",
        "--m",
        "2",
        "--nu",
        "0",
        "--format",
        "csv",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), format!("{}\n", vec!["1"; 16].join(",")));
}

#[test]
fn radical_matrix_levels() {
    let out = grm(&["radical", "--p", "2", "--r", "2", "--m", "2", "--t", "0"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let parsed: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(parsed["rows"].as_array().unwrap().len(), 16);

    let out = grm(&["radical", "--p", "2", "--r", "2", "--m", "2", "--t", "6"]);
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed["rows"].as_array().unwrap().len(), 1);
    assert!(parsed["rows"][0]
        .as_array()
        .unwrap()
        .iter()
        .all(|v| v.as_u64() == Some(1)));
}

#[test]
fn radical_negative_level_is_a_usage_error() {
    let out = grm(&["radical", "--p", "2", "--r", "2", "--m", "2", "--t", "-1"]);
    assert_eq!(out.status.code(), Some(2));
    let out = grm(&["radical", "--p", "2", "--r", "2", "--m", "2", "--t", "7"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_passes_on_sound_parameters() {
    let out = grm(&["verify", "--p", "2", "--r", "2", "--m", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("all checks passed"));
}

#[test]
fn verify_gamma_ordering_includes_coincidence() {
    let out = grm(&[
        "verify",
        "--p",
        "2",
        "--r",
        "1",
        "--m",
        "3",
        "--ordering",
        "gamma",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("ok   code-radical-coincidence"));
}

#[test]
fn verify_detects_corrupted_modulus() {
    let out = grm(&["verify", "--p", "2", "--r", "2", "--m", "2", "--corrupt-h"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr).into_owned();
    assert!(err.contains("FAIL ring-modulus"));
}

#[test]
fn verify_gamma_ordering_requires_r_one() {
    let out = grm(&[
        "verify",
        "--p",
        "2",
        "--r",
        "2",
        "--m",
        "2",
        "--ordering",
        "gamma",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_accepts_seed_and_cap() {
    let out = grm(&[
        "verify",
        "--p",
        "2",
        "--r",
        "1",
        "--m",
        "2",
        "--seed",
        "123",
        "--max-dim",
        "4",
    ]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn fbar_override_is_validated() {
    // x^2+1 is reducible over F_2
    let out = grm(&[
        "params", "--p", "2", "--r", "2", "--m", "2", "--fbar", "1,0,1",
    ]);
    assert_eq!(out.status.code(), Some(2));
    // the canonical quadratic works
    let out = grm(&[
        "params", "--p", "2", "--r", "2", "--m", "2", "--fbar", "1,1,1",
    ]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn gamma_override_is_validated() {
    // encoding 1 has order 1, never primitive for q^m > 2
    let out = grm(&["params", "--p", "2", "--r", "2", "--m", "2", "--gamma", "1"]);
    assert_eq!(out.status.code(), Some(2));
    // the canonical generator passes
    let out = grm(&["params", "--p", "2", "--r", "2", "--m", "2", "--gamma", "2"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn example16_reproduces_the_profile() {
    let out = grm(&["example16"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("all quantities match"));
    assert!(text.contains("[1, 3, 6, 10, 13, 15]"));
    assert!(!text.contains("FAIL"));
}
