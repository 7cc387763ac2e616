//! Torus-knot Alexander polynomials and realizability of knot indices and
//! Milnor indices.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use crate::arith::{self, is_prime_u64};
use crate::decision::{
    self, check_c1, check_c2, decide_milnor, epsilon_hasse_witt, parity_class_feasible, parity_class_witness,
    DecisionReport, MilnorProfile, SignatureTarget,
};
use crate::error::{Error, Result};
use crate::intpoly::IntPoly;
use crate::obstruction::{sh_group, FactoredCharPoly, ParityVector, ShGroup};

/// The `(u, v)` torus knot with `u`, `v` odd, coprime and greater than 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TorusKnotSpec {
    pub u: u64,
    pub v: u64,
}

impl TorusKnotSpec {
    pub fn new(u: u64, v: u64) -> Result<Self> {
        if u < 3 || v < 3 || u % 2 == 0 || v % 2 == 0 {
            return Err(Error::BadSpec(format!("({u}, {v}): both must be odd and greater than 1")));
        }
        if u.gcd(&v) != 1 {
            return Err(Error::BadSpec(format!("({u}, {v}) are not coprime")));
        }
        Ok(TorusKnotSpec { u, v })
    }

    /// `(X^{uv} - 1)(X - 1) / ((X^u - 1)(X^v - 1))` computed directly.
    pub fn alexander_expanded(&self) -> IntPoly {
        let xm1 = |k: u64| {
            let mut c = vec![BigInt::from(0); k as usize + 1];
            c[0] = BigInt::from(-1);
            c[k as usize] = BigInt::one();
            IntPoly::new(c)
        };
        let num = &xm1(self.u * self.v) * &xm1(1);
        let den = &xm1(self.u) * &xm1(self.v);
        num.div_exact(&den).expect("exact quotient")
    }
}

/// `Delta_{u,v} = prod Phi_{ab}` over `a | u`, `b | v`, `a, b > 1`.
pub fn torus_alexander(spec: TorusKnotSpec) -> Result<FactoredCharPoly> {
    let mut ms = Vec::new();
    for a in arith::divisors(spec.u).into_iter().filter(|&a| a > 1) {
        for b in arith::divisors(spec.v).into_iter().filter(|&b| b > 1) {
            ms.push((a * b, 1));
        }
    }
    FactoredCharPoly::from_cyclotomic(&ms)
}

/// Monic with `d(1) = 1` and `d(-1) = +-1`.
pub fn is_unramified(d: &IntPoly) -> bool {
    d.is_monic() && d.eval_i64(1).is_one() && d.eval_i64(-1).abs().is_one()
}

fn check_knot_input(f: &FactoredCharPoly) -> Result<()> {
    if !f.is_squarefree() {
        return Err(Error::NotSquareFree);
    }
    if !(f.eval(1).is_one() && f.eval(-1).abs().is_one()) {
        return Err(Error::NotUnramified);
    }
    Ok(())
}

/// Whether a knot with Alexander polynomial `F` and Milnor index given by
/// `profile` exists.
pub fn knot_milnor_realizable(f: &FactoredCharPoly, t: SignatureTarget, profile: &MilnorProfile) -> Result<DecisionReport> {
    check_knot_input(f)?;
    decide_milnor(f, t, profile)
}

/// Verdict for one index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IndexOutcome {
    Realizable(MilnorProfile),
    NotRealizable,
    Undetermined(String),
}

/// Knot indices `r - s` realized by knots with a given Alexander polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnotIndexReport {
    pub degree: usize,
    /// Indices considered satisfy `|i| <= bound`.
    pub bound: i64,
    pub outcomes: BTreeMap<i64, IndexOutcome>,
    pub sh_rank: usize,
}

impl KnotIndexReport {
    pub fn realizable_indices(&self) -> Vec<i64> {
        self.outcomes
            .iter()
            .filter(|(_, o)| matches!(o, IndexOutcome::Realizable(_)))
            .map(|(&i, _)| i)
            .collect()
    }

    pub fn witness(&self, index: i64) -> Option<&MilnorProfile> {
        match self.outcomes.get(&index) {
            Some(IndexOutcome::Realizable(p)) => Some(p),
            _ => None,
        }
    }
}

/// Realizable knot indices `i = 0 mod 8`, `|i| <= deg F`, searched over
/// parity classes of the negative-pair counts.
pub fn realizable_indices(f: &FactoredCharPoly) -> Result<KnotIndexReport> {
    check_knot_input(f)?;
    let degree = f.degree();
    let n = f.len();
    if n > 24 {
        return Err(Error::BadInput(format!("{n} factors exceed the enumeration limit")));
    }
    let sh = sh_group(f)?;
    let eps = if sh.rank() == 0 {
        None
    } else {
        match epsilon_hasse_witt(f) {
            Ok(e) => Some(e),
            Err(Error::RamifiedCyclotomic(_)) | Err(Error::InvalidFactor(_)) => None,
            Err(e) => return Err(e),
        }
    };
    let caps: Vec<usize> = f.factors().iter().map(|x| x.pairs).collect();
    let c1 = check_c1(f).pass;
    let bound = degree as i64;
    let mut outcomes = BTreeMap::new();
    let mut index = -(bound - bound.rem_euclid(8));
    while index <= bound {
        let r = (bound + index) / 2;
        let s = (bound - index) / 2;
        let t = SignatureTarget::new(r as usize, s as usize);
        let outcome = if !c1 || !check_c2(f, t).pass {
            IndexOutcome::NotRealizable
        } else {
            search_index(f, &sh, eps.as_ref(), &caps, t)?
        };
        outcomes.insert(index, outcome);
        index += 8;
    }
    Ok(KnotIndexReport {
        degree,
        bound,
        outcomes,
        sh_rank: sh.rank(),
    })
}

fn search_index(
    f: &FactoredCharPoly,
    sh: &ShGroup,
    eps: Option<&decision::Epsilon>,
    caps: &[usize],
    t: SignatureTarget,
) -> Result<IndexOutcome> {
    let n = caps.len();
    let target = (t.s - f.m()) / 2;
    let mut any_class = false;
    for mask in 0..(1u64 << n) {
        let b = ParityVector::from_mask(mask, n);
        if !parity_class_feasible(caps, &b, target) {
            continue;
        }
        any_class = true;
        let ok = if sh.rank() == 0 {
            true
        } else if let Some(e) = eps {
            sh.kills(&e.total.add(&b)?)?
        } else {
            continue;
        };
        if ok {
            let counts = parity_class_witness(caps, &b, target).expect("feasible class");
            return Ok(IndexOutcome::Realizable(MilnorProfile::new(counts)));
        }
    }
    Ok(if !any_class {
        IndexOutcome::NotRealizable
    } else if sh.rank() > 0 && eps.is_none() {
        IndexOutcome::Undetermined("epsilon-requires-non-cyclotomic-local-data".into())
    } else {
        IndexOutcome::NotRealizable
    })
}

/// `Sh` of `Delta_{p, p1 p2}` for distinct primes congruent to 3 mod 4.
pub fn three_torus_sh(p: u64, p1: u64, p2: u64) -> Result<ShGroup> {
    let ps = [p, p1, p2];
    if ps.iter().any(|&q| !is_prime_u64(q) || q % 4 != 3) || p == p1 || p == p2 || p1 == p2 {
        return Err(Error::BadSpec(format!("({p}, {p1}, {p2}) must be distinct primes = 3 mod 4")));
    }
    sh_group(&torus_alexander(TorusKnotSpec::new(p, p1 * p2)?)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alexander_factors() {
        let d = torus_alexander(TorusKnotSpec::new(3, 7).unwrap()).unwrap();
        assert_eq!(d.to_text(), "Phi(21)");
        let d = torus_alexander(TorusKnotSpec::new(9, 7).unwrap()).unwrap();
        assert_eq!(d.to_text(), "Phi(21) * Phi(63)");
        assert_eq!(d.degree(), 48);
        let d = torus_alexander(TorusKnotSpec::new(15, 7).unwrap()).unwrap();
        assert_eq!(d.to_text(), "Phi(21) * Phi(35) * Phi(105)");
        assert!(TorusKnotSpec::new(3, 9).is_err());
        assert!(TorusKnotSpec::new(2, 9).is_err());
    }

    #[test]
    fn unramified() {
        let d = torus_alexander(TorusKnotSpec::new(3, 7).unwrap()).unwrap();
        assert!(is_unramified(&d.expand()));
        assert!(!is_unramified(&IntPoly::from_i64s(&[1, -3, 1])));
    }

    #[test]
    fn trefoil_like_indices() {
        let d = torus_alexander(TorusKnotSpec::new(3, 7).unwrap()).unwrap();
        let rep = realizable_indices(&d).unwrap();
        assert_eq!(rep.realizable_indices(), vec![-8, 0, 8]);
    }
}
