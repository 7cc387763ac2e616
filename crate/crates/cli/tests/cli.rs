//! End-to-end tests of the `unimod` binary.

use std::process::Command;

use proptest::prelude::*;
use serde_json::Value;
use unimod_cli::parser::{parse_poly_expr, ParsedPoly};
use unimod_cli::report::to_canonical;
use unimod_core::intpoly::cyclotomic;
use unimod_core::{FactoredCharPoly, IntPoly};

fn unimod(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_unimod")).args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn no_floats(v: &Value) -> bool {
    match v {
        Value::Number(n) => n.is_i64() || n.is_u64(),
        Value::Array(a) => a.iter().all(no_floats),
        Value::Object(m) => m.values().all(no_floats),
        _ => true,
    }
}

#[test]
fn decide_exit_codes() {
    let (code, _, _) = unimod(&["decide", "--poly", "Phi(7)^2*Phi(14)^2", "--signature", "24,0"]);
    assert_eq!(code, 1);
    let (code, _, _) = unimod(&["decide", "--poly", "Phi(21)*Phi(147)", "--signature", "92,4"]);
    assert_eq!(code, 0);
    let (code, _, err) = unimod(&["decide", "--poly", "Phi(15)", "--signature", "3,4"]);
    assert_eq!(code, 64);
    assert!(err.contains("r + s"));
    let s6 = "(x^6 - 3*x^5 - x^4 + 5*x^3 - x^2 - 3*x + 1) * Phi(12)";
    let (code, _, _) = unimod(&["decide", "--poly", s6, "--signature", "9,1"]);
    assert_eq!(code, 2);
}

#[test]
fn quiet_prints_nothing() {
    let (code, out, err) = unimod(&["--quiet", "decide", "--poly", "Phi(3)^2*Phi(6)^2", "--signature", "8,0"]);
    assert_eq!((code, out.as_str(), err.as_str()), (0, "", ""));
}

#[test]
fn usage_errors() {
    let (code, _, err) = unimod(&["decide", "--poly", "Phi(1)", "--signature", "1,1"]);
    assert_eq!(code, 64);
    assert!(err.contains("linear"));
    let (code, _, err) = unimod(&["sh", "--poly", "Phi(3) *"]);
    assert_eq!(code, 64);
    assert!(err.contains("byte 8"));
    let (code, _, _) = unimod(&["knot", "--torus", "9,7", "--milnor", "1:"]);
    assert_eq!(code, 64);
    let (code, _, _) = unimod(&["knot", "--torus", "9,7", "--milnor", "3:1"]);
    assert_eq!(code, 64);
    let (code, _, _) = unimod(&["knot", "--torus", "3,9", "--indices"]);
    assert_eq!(code, 64);
    let (code, _, _) = unimod(&["bogus"]);
    assert_eq!(code, 64);
}

#[test]
fn knot_reports() {
    let (code, out, _) = unimod(&["--json", "knot", "--torus", "9,7", "--indices"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    let want: Vec<i64> = (-48..=48).filter(|i| i % 8 == 0).collect();
    assert_eq!(v["knot"]["realizable_indices"], serde_json::json!(want));
    let (code, _, _) = unimod(&["knot", "--torus", "3,7", "--milnor", "1:5"]);
    assert_eq!(code, 0);
}

#[test]
fn json_round_trip_and_schema() {
    let runs: [&[&str]; 5] = [
        &["--json", "decide", "--poly", "Phi(7)^2*Phi(14)^2", "--signature", "24,0"],
        &["--json", "sh", "--poly", "Phi(77)*Phi(847)*Phi(9317)", "--rational", "--bound", "50"],
        &["--json", "resultant", "--f", "x^12 - x^11 + x^10 - x^9 - x^6 - x^3 + x^2 - x + 1", "--g", "Phi(12)"],
        &["--json", "factors-modp", "--poly", "Phi(12)", "--prime", "13"],
        &["--json", "milnor", "--poly", "Phi(21)*Phi(147)", "--signature", "92,4", "--profile", "1:1,2:1"],
    ];
    for args in runs {
        let (_, out, _) = unimod(args);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(format!("{}\n", to_canonical(&v)), out, "{args:?}");
        assert_eq!(v["schema_version"], 1);
        assert!(v["timing_us"].is_u64());
        assert!(no_floats(&v), "{args:?}");
    }
    let (_, out, _) = unimod(runs[2]);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["resultant"], "169");
    let (_, out, _) = unimod(runs[0]);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["verdict"], "not_realizable");
    assert_eq!(v["polynomial"]["factors"][0]["coefficients"][0], "1");
}

#[test]
fn selftest_passes() {
    let (code, out, _) = unimod(&["selftest"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.lines().filter(|l| l.starts_with("PASS ")).count() > 70);
    assert!(out.contains("PASS salem6-9-1"));
    assert!(out.contains("PASS res-salem10-phi14"));
}

#[test]
fn engine_text_parses_back() {
    let f = FactoredCharPoly::new(vec![
        (IntPoly::from_i64s(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1]), 1),
        (cyclotomic(14), 2),
    ])
    .unwrap();
    assert_eq!(parse_poly_expr(&f.to_text()).unwrap(), ParsedPoly::Factored(f));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn int_poly_text_round_trip(c in prop::collection::vec(-1000i64..=1000, 1..12)) {
        let p = IntPoly::from_i64s(&c);
        let parsed = parse_poly_expr(&p.to_text()).unwrap().expand();
        prop_assert_eq!(parsed, p);
    }

    #[test]
    fn cyclotomic_products_round_trip(ms in prop::collection::btree_set(3u64..60, 1..4), k in 1u32..3) {
        let pairs: Vec<(u64, u32)> = ms.into_iter().map(|m| (m, k)).collect();
        let f = FactoredCharPoly::from_cyclotomic(&pairs).unwrap();
        prop_assert_eq!(parse_poly_expr(&f.to_text()).unwrap(), ParsedPoly::Factored(f));
    }
}
