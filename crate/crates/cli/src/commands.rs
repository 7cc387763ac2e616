//! Subcommand implementations shared by the binary and the self-test.

use std::time::Instant;

use num_bigint::{BigInt, BigUint};
use num_traits::Signed;
use serde_json::{json, Map, Value};
use thiserror::Error;
use unimod_core::arith::prime_divisors;
use unimod_core::decision::{decide_lattice_with, decide_milnor_with, EngineOptions, MilnorProfile, SignatureTarget};
use unimod_core::fppoly::{factor_mod, reduce_mod};
use unimod_core::knots::{knot_milnor_realizable, realizable_indices, torus_alexander, TorusKnotSpec};
use unimod_core::obstruction::{sh_group_with, sh_rational_bounded, FactorLimits};
use unimod_core::{Error as CoreError, FactoredCharPoly};

use crate::parser::{parse_char_poly, parse_poly_expr, ParseError};
use crate::report;

/// Exit status for a realizable verdict or a successful report.
pub const EXIT_OK: i32 = 0;
pub const EXIT_NOT_REALIZABLE: i32 = 1;
pub const EXIT_UNDETERMINED: i32 = 2;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_INTERNAL: i32 = 70;

/// Errors surfaced to the user.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(#[from] ParseError),
    #[error("usage: {0}")]
    Usage(String),
    #[error("{0}")]
    Engine(#[from] CoreError),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Engine(CoreError::InternalInconsistency(_)) => EXIT_INTERNAL,
            _ => EXIT_USAGE,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

/// A finished command: exit status, JSON report and a short text summary.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub exit: i32,
    pub json: Value,
    pub text: String,
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

/// Parses `R,S`.
pub fn parse_signature(text: &str) -> CliResult<SignatureTarget> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    match parts.as_slice() {
        [r, s] => match (r.parse(), s.parse()) {
            (Ok(r), Ok(s)) => Ok(SignatureTarget::new(r, s)),
            _ => Err(usage(format!("signature '{text}' must be two non-negative integers R,S"))),
        },
        _ => Err(usage(format!("signature '{text}' must have the form R,S"))),
    }
}

/// Parses `U,V`.
pub fn parse_torus(text: &str) -> CliResult<TorusKnotSpec> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    match parts.as_slice() {
        [u, v] => match (u.parse(), v.parse()) {
            (Ok(u), Ok(v)) => TorusKnotSpec::new(u, v).map_err(CliError::from),
            _ => Err(usage(format!("torus '{text}' must be two integers U,V"))),
        },
        _ => Err(usage(format!("torus '{text}' must have the form U,V"))),
    }
}

/// Parses `i:Ni,...` with 1-based factor indices; omitted factors get 0.
pub fn parse_profile(text: &str, factors: usize) -> CliResult<MilnorProfile> {
    let mut counts = vec![None; factors];
    for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (i, n) = item
            .split_once(':')
            .ok_or_else(|| usage(format!("profile entry '{item}' must have the form i:N")))?;
        let i: usize = i.trim().parse().map_err(|_| usage(format!("bad factor index in '{item}'")))?;
        let n: usize = n.trim().parse().map_err(|_| usage(format!("bad count in '{item}'")))?;
        if i == 0 || i > factors {
            return Err(usage(format!("factor index {i} outside 1..={factors}")));
        }
        if counts[i - 1].replace(n).is_some() {
            return Err(usage(format!("factor index {i} given twice")));
        }
    }
    Ok(MilnorProfile::new(counts.into_iter().map(|c| c.unwrap_or(0)).collect()))
}

fn check_rank(f: &FactoredCharPoly, t: SignatureTarget) -> CliResult<()> {
    if t.r + t.s != f.degree() {
        return Err(usage(format!(
            "signature ({}, {}) has r + s = {}, but the polynomial has degree {}",
            t.r,
            t.s,
            t.r + t.s,
            f.degree()
        )));
    }
    Ok(())
}

fn verdict_exit(code: &str) -> i32 {
    match code {
        "realizable" => EXIT_OK,
        "not_realizable" => EXIT_NOT_REALIZABLE,
        _ => EXIT_UNDETERMINED,
    }
}

fn finish(command: &str, input: Value, body: Map<String, Value>, start: Instant, exit: i32, text: String) -> Outcome {
    Outcome {
        exit,
        json: report::envelope(command, input, body, start.elapsed().as_micros()),
        text,
    }
}

fn decision_text(f: &FactoredCharPoly, body: &Map<String, Value>) -> String {
    let reason = body["reason"].as_str().map(|r| format!(" ({r})")).unwrap_or_default();
    format!(
        "{} at ({}, {}): {}{} by rule {}",
        f.to_text(),
        body["signature"][0],
        body["signature"][1],
        body["verdict"].as_str().unwrap_or(""),
        reason,
        body["rule"].as_str().unwrap_or("")
    )
}

/// `decide`: lattice realizability of a signature.
pub fn decide(poly: &str, signature: &str, limits: FactorLimits) -> CliResult<Outcome> {
    let start = Instant::now();
    let f = parse_char_poly(poly)?;
    let t = parse_signature(signature)?;
    check_rank(&f, t)?;
    let rep = decide_lattice_with(&f, t, EngineOptions { limits })?;
    let mut body = report::decision(&rep);
    body.insert("polynomial".into(), report::polynomial(&f));
    let text = decision_text(&f, &body);
    let exit = verdict_exit(rep.verdict.code());
    Ok(finish("decide", json!({"poly": poly, "signature": signature}), body, start, exit, text))
}

/// `milnor`: realizability with a prescribed Milnor index.
pub fn milnor(poly: &str, signature: &str, profile: &str, limits: FactorLimits) -> CliResult<Outcome> {
    let start = Instant::now();
    let f = parse_char_poly(poly)?;
    let t = parse_signature(signature)?;
    check_rank(&f, t)?;
    let prof = parse_profile(profile, f.len())?;
    let rep = decide_milnor_with(&f, t, &prof, EngineOptions { limits })?;
    let mut body = report::decision(&rep);
    body.insert("polynomial".into(), report::polynomial(&f));
    body.insert("profile".into(), json!(prof.neg_pairs));
    let text = decision_text(&f, &body);
    let exit = verdict_exit(rep.verdict.code());
    Ok(finish(
        "milnor",
        json!({"poly": poly, "signature": signature, "profile": profile}),
        body,
        start,
        exit,
        text,
    ))
}

/// `sh`: the obstruction group, optionally with the bounded rational group.
pub fn sh(poly: &str, rational: bool, bound: u64, limits: FactorLimits) -> CliResult<Outcome> {
    let start = Instant::now();
    let f = parse_char_poly(poly)?;
    let g = sh_group_with(&f, limits)?;
    let mut body = Map::new();
    body.insert("polynomial".into(), report::polynomial(&f));
    body.insert("sh".into(), report::sh(&g));
    let mut text = format!("Sh of {}: rank {}, classes {:?}", f.to_text(), g.rank(), one_based(&g.classes));
    for e in &g.edges {
        text.push_str(&format!("\n  V({}, {}) = {:?}", e.i + 1, e.j + 1, e.primes));
    }
    if rational {
        let r = sh_rational_bounded(&f, bound);
        text.push_str(&format!("\nrational group up to {bound}: rank at most {}", r.group.rank()));
        body.insert("rational".into(), report::rational_sh(&r));
    }
    Ok(finish(
        "sh",
        json!({"poly": poly, "rational": rational, "bound": bound}),
        body,
        start,
        EXIT_OK,
        text,
    ))
}

fn one_based(classes: &[Vec<usize>]) -> Vec<Vec<usize>> {
    classes.iter().map(|c| c.iter().map(|i| i + 1).collect()).collect()
}

/// Source of a knot's Alexander polynomial.
#[derive(Debug, Clone)]
pub enum KnotSource {
    Torus(String),
    Poly(String),
}

/// `knot`: realizable indices, or one Milnor profile.
pub fn knot(source: &KnotSource, milnor_profile: Option<&str>) -> CliResult<Outcome> {
    let start = Instant::now();
    let (f, input) = match source {
        KnotSource::Torus(t) => (torus_alexander(parse_torus(t)?)?, json!({"torus": t})),
        KnotSource::Poly(p) => (parse_char_poly(p)?, json!({"poly": p})),
    };
    let mut input = input;
    let mut body = Map::new();
    body.insert("polynomial".into(), report::polynomial(&f));
    match milnor_profile {
        None => {
            let rep = realizable_indices(&f)?;
            let text = format!(
                "{}: Sh rank {}, realizable indices {:?}",
                f.to_text(),
                rep.sh_rank,
                rep.realizable_indices()
            );
            body.insert("knot".into(), report::knot_indices(&rep));
            Ok(finish("knot", input, body, start, EXIT_OK, text))
        }
        Some(p) => {
            input["milnor"] = json!(p);
            let prof = parse_profile(p, f.len())?;
            let s = 2 * prof.neg_pairs.iter().sum::<usize>() + f.m();
            if s > f.degree() {
                return Err(usage(format!("profile gives s = {s} above the degree {}", f.degree())));
            }
            let t = SignatureTarget::new(f.degree() - s, s);
            let rep = knot_milnor_realizable(&f, t, &prof)?;
            body.extend(report::decision(&rep));
            body.insert("profile".into(), json!(prof.neg_pairs));
            let text = decision_text(&f, &body);
            let exit = verdict_exit(rep.verdict.code());
            Ok(finish("knot", input, body, start, exit, text))
        }
    }
}

/// `resultant`: `Res(f, g)` and its prime divisors.
pub fn resultant(f: &str, g: &str, limits: FactorLimits) -> CliResult<Outcome> {
    let start = Instant::now();
    let a = parse_poly_expr(f)?.expand();
    let b = parse_poly_expr(g)?.expand();
    let r: BigInt = a.resultant(&b)?;
    let pd = prime_divisors(&r.abs().to_biguint().unwrap_or_default(), limits.trial_limit, limits.rho_rounds);
    let mut body = Map::new();
    body.insert("resultant".into(), report::big(&r));
    body.insert(
        "prime_divisors".into(),
        json!(pd.primes.iter().map(BigUint::to_string).collect::<Vec<_>>()),
    );
    body.insert("unresolved".into(), json!(pd.unresolved.map(|u| u.to_string())));
    let text = format!("Res = {r}, prime divisors {:?}", pd.primes.iter().map(BigUint::to_string).collect::<Vec<_>>());
    Ok(finish("resultant", json!({"f": f, "g": g}), body, start, EXIT_OK, text))
}

/// `factors-modp`: factorization modulo a prime with self-reciprocal factors marked.
pub fn factors_modp(poly: &str, prime: u64) -> CliResult<Outcome> {
    let start = Instant::now();
    let p = parse_poly_expr(poly)?.expand();
    let red = reduce_mod(&p, prime)?;
    if red.is_zero() {
        return Err(usage(format!("{} vanishes modulo {prime}", p.to_text())));
    }
    let fac = factor_mod(&red);
    let factors: Vec<Value> = fac
        .factors
        .iter()
        .map(|(g, e)| {
            json!({
                "factor": g.to_text(),
                "multiplicity": e,
                "self_reciprocal": g.is_self_reciprocal(),
            })
        })
        .collect();
    let mut text = format!("{} mod {prime} = {}", p.to_text(), fac.unit);
    for (g, e) in &fac.factors {
        let mark = if g.is_self_reciprocal() { " [self-reciprocal]" } else { "" };
        text.push_str(&format!("\n  ({})^{e}{mark}", g.to_text()));
    }
    let mut body = Map::new();
    body.insert("unit".into(), json!(fac.unit));
    body.insert("factors".into(), Value::Array(factors));
    Ok(finish("factors-modp", json!({"poly": poly, "prime": prime}), body, start, EXIT_OK, text))
}
