//! JSON reports. Keys are sorted, integers of unbounded size are decimal
//! strings and no floats are emitted.

use num_bigint::BigInt;
use serde_json::{json, Value};
use unimod_core::decision::{C1Report, C2Report, DecisionReport, Epsilon, EpsilonSource, Verdict};
use unimod_core::fppoly::FpPoly;
use unimod_core::knots::{IndexOutcome, KnotIndexReport};
use unimod_core::obstruction::{Place, RationalSh, Trust};
use unimod_core::{FactoredCharPoly, IntPoly, ParityVector, ShGroup};

/// Version of the report layout.
pub const SCHEMA_VERSION: u64 = 1;

/// Canonical serialization: sorted keys, two-space indentation.
pub fn to_canonical(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

pub fn big(n: &BigInt) -> Value {
    Value::String(n.to_string())
}

pub fn coefficients(p: &IntPoly) -> Value {
    Value::Array(p.coeffs().iter().map(big).collect())
}

pub fn bits(v: &ParityVector) -> Value {
    json!(v.0)
}

/// Factor indices are reported 1-based.
fn one_based(ix: &[usize]) -> Value {
    json!(ix.iter().map(|i| i + 1).collect::<Vec<_>>())
}

pub fn polynomial(f: &FactoredCharPoly) -> Value {
    let factors: Vec<Value> = f
        .factors()
        .iter()
        .enumerate()
        .map(|(i, x)| {
            json!({
                "index": i + 1,
                "label": x.label(),
                "text": x.poly.to_text(),
                "coefficients": coefficients(&x.poly),
                "degree": x.degree(),
                "multiplicity": x.multiplicity,
                "cyclotomic": x.cyclotomic,
                "trust": match x.trust {
                    Trust::Verified => "verified",
                    Trust::Asserted => "asserted",
                },
                "m": x.m,
                "unit_circle_pairs": x.pairs,
            })
        })
        .collect();
    json!({
        "text": f.to_text(),
        "degree": f.degree(),
        "m": f.m(),
        "factors": factors,
    })
}

pub fn fp_poly(p: &FpPoly) -> Value {
    Value::String(p.to_text())
}

pub fn sh(g: &ShGroup) -> Value {
    let edges: Vec<Value> = g
        .edges
        .iter()
        .map(|e| {
            json!({
                "i": e.i + 1,
                "j": e.j + 1,
                "primes": e.primes,
                "common_factors": e
                    .witnesses
                    .iter()
                    .map(|(p, fs)| json!({"prime": p, "factors": fs.iter().map(fp_poly).collect::<Vec<_>>()}))
                    .collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({
        "rank": g.rank(),
        "classes": g.classes.iter().map(|c| one_based(c)).collect::<Vec<_>>(),
        "basis": g.basis.iter().map(bits).collect::<Vec<_>>(),
        "edges": edges,
    })
}

pub fn rational_sh(r: &RationalSh) -> Value {
    let places: Vec<Value> = r
        .places
        .iter()
        .map(|(p, members)| {
            json!({
                "place": match p {
                    Place::Infinite => "infinity".to_string(),
                    Place::Prime(q) => q.to_string(),
                },
                "factors": one_based(members),
            })
        })
        .collect();
    json!({
        "rank": r.group.rank(),
        "classes": r.group.classes.iter().map(|c| one_based(c)).collect::<Vec<_>>(),
        "prime_bound": r.prime_bound,
        "upper_bound": r.upper_bound,
        "places": places,
    })
}

pub fn epsilon(e: &Epsilon) -> Value {
    let per_prime: serde_json::Map<String, Value> =
        e.per_prime.iter().map(|(p, v)| (p.to_string(), bits(v))).collect();
    json!({
        "source": match e.source {
            EpsilonSource::ResidueFormula => "residue-formula",
            EpsilonSource::HasseWitt => "hasse-witt",
        },
        "per_prime": per_prime,
        "total": bits(&e.total),
    })
}

pub fn c1(c: &C1Report) -> Value {
    json!({
        "f_at_1": big(&c.at_one),
        "f_at_minus_1": big(&c.at_minus_one),
        "product": big(&c.product),
        "pass": c.pass,
    })
}

pub fn c2(c: &C2Report) -> Value {
    json!({
        "degree": c.degree,
        "m": c.m,
        "rank_ok": c.rank_ok,
        "mod8_ok": c.mod8_ok,
        "bounds_ok": c.bounds_ok,
        "parity_ok": c.parity_ok,
        "pass": c.pass,
    })
}

pub fn verdict(v: &Verdict) -> (&'static str, Value) {
    match v {
        Verdict::Undetermined(r) => (v.code(), Value::String(r.code().to_string())),
        _ => (v.code(), Value::Null),
    }
}

/// Fields of a decision, flattened.
pub fn decision(rep: &DecisionReport) -> serde_json::Map<String, Value> {
    let (code, reason) = verdict(&rep.verdict);
    let v = json!({
        "verdict": code,
        "reason": reason,
        "rule": rep.rule.code(),
        "signature": [rep.target.r, rep.target.s],
        "index": rep.target.index(),
        "c1": c1(&rep.c1),
        "c2": c2(&rep.c2),
        "sh": rep.sh.as_ref().map(sh),
        "epsilon": rep.epsilon.as_ref().map(epsilon),
        "epsilon_residue": rep.epsilon_residue.as_ref().map(epsilon),
        "cross_check": rep.cross_check.code(),
        "real_data": rep.real_data.iter().map(bits).collect::<Vec<_>>(),
        "witness": rep.witness.as_ref().map(bits),
    });
    match v {
        Value::Object(m) => m,
        _ => unreachable!(),
    }
}

pub fn knot_indices(r: &KnotIndexReport) -> Value {
    let outcomes: Vec<Value> = r
        .outcomes
        .iter()
        .map(|(i, o)| match o {
            IndexOutcome::Realizable(p) => {
                json!({"index": i, "verdict": "realizable", "reason": null, "witness": p.neg_pairs})
            }
            IndexOutcome::NotRealizable => {
                json!({"index": i, "verdict": "not_realizable", "reason": null, "witness": null})
            }
            IndexOutcome::Undetermined(why) => {
                json!({"index": i, "verdict": "undetermined", "reason": why, "witness": null})
            }
        })
        .collect();
    json!({
        "degree": r.degree,
        "bound": r.bound,
        "sh_rank": r.sh_rank,
        "realizable_indices": r.realizable_indices(),
        "outcomes": outcomes,
    })
}

/// Wraps command output with the schema version, the echoed input and timing.
pub fn envelope(command: &str, input: Value, body: serde_json::Map<String, Value>, timing_us: u128) -> Value {
    let mut m = body;
    m.insert("schema_version".into(), json!(SCHEMA_VERSION));
    m.insert("command".into(), json!(command));
    m.insert("input".into(), input);
    m.insert("timing_us".into(), json!(timing_us as u64));
    Value::Object(m)
}
