//! The fixture corpus and its replay.
//!
//! Each fixture names a command, its arguments and a fragment of the expected
//! JSON report. Objects match when every expected key matches, arrays match
//! exactly, and `{"$contains": [...]}` matches an array holding every listed
//! element.

use num_bigint::BigInt;
use serde_json::{json, Map, Value};
use unimod_core::arith::{divisors, is_prime_u64};
use unimod_core::decision::reciprocity_failures;
use unimod_core::fppoly::{
    expand, factor_mod, is_irreducible, legendre, reduce_mod, symmetric_irreducible_factors, FpPoly,
};
use unimod_core::intpoly::cyclotomic;
use unimod_core::obstruction::{v_set, FactorLimits, DEFAULT_RATIONAL_BOUND};
use unimod_core::IntPoly;

use crate::commands::{self, CliError, CliResult, KnotSource};

/// The corpus shipped with the binary.
pub const FIXTURES: &str = include_str!("../corpus/fixtures.json");

/// One fixture result.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixtureResult {
    pub id: String,
    pub criterion: u64,
    pub passed: bool,
    pub detail: String,
}

fn arg<'a>(args: &'a Value, key: &str) -> CliResult<&'a str> {
    args[key]
        .as_str()
        .ok_or_else(|| CliError::Usage(format!("fixture argument '{key}' missing")))
}

/// Runs one fixture's command and returns its report.
pub fn run_command(command: &str, args: &Value) -> CliResult<Value> {
    let limits = FactorLimits::default();
    let out = match command {
        "decide" => commands::decide(arg(args, "poly")?, arg(args, "signature")?, limits)?,
        "milnor" => commands::milnor(arg(args, "poly")?, arg(args, "signature")?, arg(args, "profile")?, limits)?,
        "sh" => commands::sh(arg(args, "poly")?, false, DEFAULT_RATIONAL_BOUND, limits)?,
        "knot" => {
            let source = match args.get("torus").and_then(Value::as_str) {
                Some(t) => KnotSource::Torus(t.to_string()),
                None => KnotSource::Poly(arg(args, "poly")?.to_string()),
            };
            commands::knot(&source, args.get("milnor").and_then(Value::as_str))?
        }
        "resultant" => commands::resultant(arg(args, "f")?, arg(args, "g")?, limits)?,
        "factors-modp" => {
            let p = args["prime"]
                .as_u64()
                .ok_or_else(|| CliError::Usage("fixture argument 'prime' missing".into()))?;
            commands::factors_modp(arg(args, "poly")?, p)?
        }
        "property" => return Ok(property(arg(args, "name")?)),
        other => return Err(CliError::Usage(format!("unknown fixture command '{other}'"))),
    };
    Ok(out.json)
}

/// Whether `actual` matches the expected fragment.
pub fn matches(expected: &Value, actual: &Value) -> bool {
    match expected {
        Value::Object(m) if m.len() == 1 && m.contains_key("$contains") => match (&m["$contains"], actual) {
            (Value::Array(want), Value::Array(have)) => want.iter().all(|w| have.iter().any(|h| matches(w, h))),
            _ => false,
        },
        Value::Object(m) => match actual {
            Value::Object(a) => m.iter().all(|(k, v)| a.get(k).is_some_and(|x| matches(v, x))),
            _ => false,
        },
        Value::Array(want) => match actual {
            Value::Array(have) => want.len() == have.len() && want.iter().zip(have).all(|(w, h)| matches(w, h)),
            _ => false,
        },
        _ => expected == actual,
    }
}

fn mismatch_paths(expected: &Value, actual: &Value, path: &str, out: &mut Vec<String>) {
    if let (Value::Object(m), Value::Object(a)) = (expected, actual) {
        if !m.contains_key("$contains") {
            for (k, v) in m {
                match a.get(k) {
                    Some(x) => mismatch_paths(v, x, &format!("{path}.{k}"), out),
                    None => out.push(format!("{path}.{k} missing")),
                }
            }
            return;
        }
    }
    if !matches(expected, actual) {
        out.push(format!("{path}: expected {expected}, got {actual}"));
    }
}

/// Replays every fixture in order.
pub fn replay(corpus: &str) -> CliResult<Vec<FixtureResult>> {
    let doc: Value = serde_json::from_str(corpus).map_err(|e| CliError::Usage(format!("corpus: {e}")))?;
    let fixtures = doc["fixtures"]
        .as_array()
        .ok_or_else(|| CliError::Usage("corpus has no fixtures".into()))?;
    let mut results = Vec::with_capacity(fixtures.len());
    for fx in fixtures {
        let id = fx["id"].as_str().unwrap_or("?").to_string();
        let criterion = fx["criterion"].as_u64().unwrap_or(0);
        let command = fx["command"].as_str().unwrap_or("");
        let (passed, detail) = match run_command(command, &fx["args"]) {
            Ok(report) => {
                let mut diffs = Vec::new();
                mismatch_paths(&fx["expect"], &report, "", &mut diffs);
                (diffs.is_empty(), diffs.join("; "))
            }
            Err(e) => (false, format!("error: {e}")),
        };
        results.push(FixtureResult {
            id,
            criterion,
            passed,
            detail,
        });
    }
    Ok(results)
}

/// Built-in checks against brute-force oracles.
pub fn property(name: &str) -> Value {
    let failures = match name {
        "m-and-p" => m_and_p(),
        "q-and-p" => q_and_p(),
        "cyclotomic-product" => cyclotomic_product(),
        "factor-reconstruction" => factor_reconstruction(),
        "v-subset" => v_subset(),
        "reciprocity" => {
            let n = reciprocity_failures();
            if n == 0 {
                Vec::new()
            } else {
                vec![format!("{n} reciprocity failures")]
            }
        }
        other => vec![format!("unknown property '{other}'")],
    };
    let mut m = Map::new();
    m.insert("property".into(), json!(name));
    m.insert("pass".into(), json!(failures.is_empty()));
    m.insert("failures".into(), json!(failures));
    Value::Object(m)
}

fn powers_reach_minus_one(m: u64, p: u64) -> bool {
    let mut x = p % m;
    for _ in 0..m {
        if x == m - 1 {
            return true;
        }
        if x == 1 {
            return false;
        }
        x = x * p % m;
    }
    false
}

fn has_symmetric_factor(m: u64, p: u64) -> bool {
    let red = reduce_mod(&cyclotomic(m), p).expect("prime");
    !symmetric_irreducible_factors(&red).expect("nonzero constant term").is_empty()
}

fn m_and_p() -> Vec<String> {
    let mut out = Vec::new();
    for m in (3..=200u64).step_by(2) {
        for p in (3..=50u64).filter(|&p| is_prime_u64(p) && m % p != 0) {
            if has_symmetric_factor(m, p) != powers_reach_minus_one(m, p) {
                out.push(format!("m = {m}, p = {p}"));
            }
        }
    }
    out
}

fn q_and_p() -> Vec<String> {
    let mut out = Vec::new();
    for m in (3..=100u64).filter(|&m| is_prime_u64(m) && m % 4 == 3) {
        for p in (3..=60u64).filter(|&p| is_prime_u64(p) && p != m) {
            let squares: Vec<u64> = (1..m).map(|x| x * x % m).collect();
            let nonsquare = !squares.contains(&(p % m));
            let sym = legendre(&BigInt::from(p), m).expect("odd prime") == -1;
            if has_symmetric_factor(m, p) != nonsquare || sym != nonsquare {
                out.push(format!("m = {m}, p = {p}"));
            }
        }
    }
    out
}

fn cyclotomic_product() -> Vec<String> {
    (1..=200u64)
        .filter(|&m| {
            let prod: IntPoly = divisors(m).into_iter().map(cyclotomic).product();
            let mut c = vec![BigInt::from(0); m as usize + 1];
            c[0] = BigInt::from(-1);
            c[m as usize] = BigInt::from(1);
            prod != IntPoly::new(c)
        })
        .map(|m| format!("m = {m}"))
        .collect()
}

fn factor_reconstruction() -> Vec<String> {
    let mut out = Vec::new();
    for p in [2u64, 3, 5, 7, 13] {
        for d in 1..=24usize {
            let c: Vec<u64> = (0..=d as u64).map(|i| (i * i * 7919 + d as u64 * 104_729 + 1) % p).collect();
            let mut c = c;
            c[d] = c[d].max(1);
            let f = FpPoly::new(p, c).expect("prime");
            let fac = factor_mod(&f);
            let ok = expand(&fac, p) == f && fac.factors.iter().all(|(g, _)| is_irreducible(g));
            if !ok {
                out.push(format!("{} mod {p}", f.to_text()));
            }
        }
    }
    out
}

fn v_subset() -> Vec<String> {
    let salem10 = IntPoly::from_i64s(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1]);
    let salem12 = IntPoly::from_i64s(&[1, -1, 1, -1, 0, 0, -1, 0, 0, -1, 1, -1, 1]);
    let pairs = [
        (salem10, cyclotomic(14)),
        (salem12.clone(), cyclotomic(14)),
        (salem12, cyclotomic(12)),
        (cyclotomic(7), cyclotomic(14)),
        (cyclotomic(21), cyclotomic(147)),
    ];
    let mut out = Vec::new();
    for (f, g) in pairs {
        let Ok(v) = v_set(&f, &g) else {
            out.push(format!("V({f}, {g}) failed"));
            continue;
        };
        for p in v {
            for q in [&f, &g] {
                let red = reduce_mod(q, p).expect("prime");
                if symmetric_irreducible_factors(&red).map_or(true, |s| s.is_empty()) {
                    out.push(format!("{p} in V({f}, {g}) but not in V({q})"));
                }
            }
        }
    }
    out
}
