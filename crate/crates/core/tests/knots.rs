//! Knot indices against torus-knot signatures.

mod common;

use std::collections::BTreeSet;

use num_integer::Integer;
use unimod_core::decision::{MilnorProfile, SignatureTarget, Verdict};
use unimod_core::knots::{
    is_unramified, knot_milnor_realizable, realizable_indices, torus_alexander, TorusKnotSpec,
};

fn odd_pairs(limit: u64) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    for u in (3..=limit).step_by(2) {
        for v in (u + 2..=limit).step_by(2) {
            if u.gcd(&v) == 1 {
                out.push((u, v));
            }
        }
    }
    out
}

#[test]
fn alexander_product_identity() {
    for (u, v) in odd_pairs(21) {
        let spec = TorusKnotSpec::new(u, v).unwrap();
        let f = torus_alexander(spec).unwrap();
        assert_eq!(f.expand(), spec.alexander_expanded(), "({u}, {v})");
        assert!(is_unramified(&f.expand()));
        assert_eq!(f.degree() as u64, (u - 1) * (v - 1));
    }
}

#[test]
fn torus_knot_signature_is_realized() {
    for (u, v) in odd_pairs(15) {
        let f = torus_alexander(TorusKnotSpec::new(u, v).unwrap()).unwrap();
        let (sigma, neg) = common::torus_signature(u, v);
        assert_eq!(sigma.rem_euclid(8), 0, "signature of T({u}, {v})");
        let n2 = f.degree() as i64;
        let t = SignatureTarget::new(((n2 + sigma) / 2) as usize, ((n2 - sigma) / 2) as usize);
        let counts: Vec<usize> = f
            .factors()
            .iter()
            .map(|x| {
                let d = x.cyclotomic.unwrap();
                neg.iter().find(|(o, _)| *o == d).map_or(0, |&(_, k)| k)
            })
            .collect();
        let rep = knot_milnor_realizable(&f, t, &MilnorProfile::new(counts.clone())).unwrap();
        assert_eq!(rep.verdict, Verdict::Realizable, "T({u}, {v}) profile {counts:?}");
        let idx = realizable_indices(&f).unwrap();
        assert!(idx.realizable_indices().contains(&sigma), "T({u}, {v}) index {sigma}");
    }
}

#[test]
fn indices_are_symmetric() {
    for (u, v) in odd_pairs(15) {
        let f = torus_alexander(TorusKnotSpec::new(u, v).unwrap()).unwrap();
        let set: BTreeSet<i64> = realizable_indices(&f).unwrap().realizable_indices().into_iter().collect();
        let neg: BTreeSet<i64> = set.iter().map(|i| -i).collect();
        assert_eq!(set, neg, "({u}, {v})");
    }
}

#[test]
fn rejects_non_knot_input() {
    let f = unimod_core::FactoredCharPoly::from_cyclotomic(&[(7, 2), (14, 2)]).unwrap();
    assert!(realizable_indices(&f).is_err());
}
