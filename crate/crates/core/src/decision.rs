//! The realizability decision: conditions C1 and C2, real local data, the
//! homomorphism `epsilon` for cyclotomic products and the rule chain.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicUsize, Ordering};

use num_bigint::BigInt;
use num_traits::Signed;

use crate::arith::{self, prime_power_base};
use crate::error::{Error, Result};
use crate::fppoly;
use crate::intpoly::{cyclotomic, is_perfect_square};
use crate::obstruction::{sh_group_with, FactorLimits, FactoredCharPoly, ParityVector, ShGroup};

static RECIPROCITY_FAILURES: AtomicUsize = AtomicUsize::new(0);

/// Number of times the reciprocity sanity check has fired in this process.
pub fn reciprocity_failures() -> usize {
    RECIPROCITY_FAILURES.load(Ordering::Relaxed)
}

/// A signature `(r, s)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignatureTarget {
    pub r: usize,
    pub s: usize,
}

impl SignatureTarget {
    pub fn new(r: usize, s: usize) -> Self {
        SignatureTarget { r, s }
    }

    /// The index `r - s`.
    pub fn index(&self) -> i64 {
        self.r as i64 - self.s as i64
    }
}

/// Numbers of negative hermitian pairs per factor (`N_i`), indexed like the
/// factors of the characteristic polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MilnorProfile {
    pub neg_pairs: Vec<usize>,
    /// Optional split of `neg_pairs[i]` over the unit-circle factors of `f_i`.
    pub fine: Option<Vec<Vec<usize>>>,
}

impl MilnorProfile {
    pub fn new(neg_pairs: Vec<usize>) -> Self {
        MilnorProfile { neg_pairs, fine: None }
    }

    /// From counts per unit-circle factor `P` of each `f_i`.
    pub fn from_fine(fine: Vec<Vec<usize>>) -> Self {
        MilnorProfile {
            neg_pairs: fine.iter().map(|v| v.iter().sum()).collect(),
            fine: Some(fine),
        }
    }

    /// `a_tau(i) = N_i mod 2`.
    pub fn parity(&self) -> ParityVector {
        ParityVector(self.neg_pairs.iter().map(|&n| (n % 2) as u8).collect())
    }

    /// Checks bounds and that the profile induces the signature `t`.
    pub fn check(&self, f: &FactoredCharPoly, t: SignatureTarget) -> Result<()> {
        if self.neg_pairs.len() != f.len() {
            return Err(Error::ProfileMismatch(format!(
                "{} entries for {} factors",
                self.neg_pairs.len(),
                f.len()
            )));
        }
        for (i, (fac, &n)) in f.factors().iter().zip(&self.neg_pairs).enumerate() {
            let cap = fac.multiplicity as usize * fac.pairs;
            if n > cap {
                return Err(Error::ProfileMismatch(format!("N_{} = {n} exceeds {cap}", i + 1)));
            }
            if let Some(fine) = &self.fine {
                let row = &fine[i];
                if row.len() != fac.pairs || row.iter().any(|&c| c > fac.multiplicity as usize) {
                    return Err(Error::ProfileMismatch(format!("bad split for factor {}", i + 1)));
                }
            }
        }
        let s = 2 * self.neg_pairs.iter().sum::<usize>() + f.m();
        if s != t.s || t.r + t.s != f.degree() {
            return Err(Error::ProfileMismatch(format!(
                "profile gives s = {s}, target is ({}, {})",
                t.r, t.s
            )));
        }
        Ok(())
    }
}

/// Outcome of condition C1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct C1Report {
    pub at_one: BigInt,
    pub at_minus_one: BigInt,
    /// `(-1)^n F(1) F(-1)`.
    pub product: BigInt,
    pub pass: bool,
}

/// Outcome of condition C2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct C2Report {
    pub degree: usize,
    pub m: usize,
    pub rank_ok: bool,
    pub mod8_ok: bool,
    pub bounds_ok: bool,
    pub parity_ok: bool,
    pub pass: bool,
}

/// `|F(1)|`, `|F(-1)|` and `(-1)^n F(1) F(-1)` are squares (`deg F = 2n`).
pub fn check_c1(f: &FactoredCharPoly) -> C1Report {
    let at_one = f.eval(1);
    let at_minus_one = f.eval(-1);
    let n = f.degree() / 2;
    let mut product = &at_one * &at_minus_one;
    if n % 2 == 1 {
        product = -product;
    }
    let pass = is_perfect_square(&at_one.abs())
        && is_perfect_square(&at_minus_one.abs())
        && is_perfect_square(&product);
    C1Report { at_one, at_minus_one, product, pass }
}

/// `r + s = deg F`, `r = s mod 8`, `r, s >= m(F)`, `m(F) = r = s mod 2`.
pub fn check_c2(f: &FactoredCharPoly, t: SignatureTarget) -> C2Report {
    let degree = f.degree();
    let m = f.m();
    let rank_ok = t.r + t.s == degree;
    let mod8_ok = (t.r as i64 - t.s as i64).rem_euclid(8) == 0;
    let bounds_ok = t.r >= m && t.s >= m;
    let parity_ok = t.r % 2 == m % 2 && t.s % 2 == m % 2;
    C2Report {
        degree,
        m,
        rank_ok,
        mod8_ok,
        bounds_ok,
        parity_ok,
        pass: rank_ok && mod8_ok && bounds_ok && parity_ok,
    }
}

/// Parity vectors `sigma mod 2` of all `sigma` with `0 <= sigma_i <= n_i k_i`
/// and `sum 2 sigma_i = s - m(F)`: the set `C(V'')`, sorted.
pub fn real_local_data(f: &FactoredCharPoly, t: SignatureTarget) -> Result<Vec<ParityVector>> {
    let caps: Vec<usize> = f
        .factors()
        .iter()
        .map(|x| x.multiplicity as usize * x.pairs)
        .collect();
    let m = f.m();
    if t.s < m || (t.s - m) % 2 == 1 || t.r + t.s != f.degree() {
        return Err(Error::Infeasible);
    }
    let target = (t.s - m) / 2;
    let n = caps.len();
    if n > 24 {
        return Err(Error::BadInput(format!("{n} factors exceed the enumeration limit")));
    }
    let mut out = Vec::new();
    for mask in 0..(1u64 << n) {
        let b = ParityVector::from_mask(mask, n);
        if parity_class_feasible(&caps, &b, target) {
            out.push(b);
        }
    }
    if out.is_empty() {
        return Err(Error::Infeasible);
    }
    out.sort();
    Ok(out)
}

/// Whether some `0 <= N_i <= caps_i` with `N_i = b_i mod 2` sums to `target`.
pub fn parity_class_feasible(caps: &[usize], b: &ParityVector, target: usize) -> bool {
    let mut lo = 0;
    let mut hi = 0;
    for (i, &k) in caps.iter().enumerate() {
        let bi = b.get(i) as usize;
        if bi > k {
            return false;
        }
        lo += bi;
        hi += k - (k - bi) % 2;
    }
    target >= lo && target <= hi && (target - lo) % 2 == 0
}

/// A member of the parity class `b` summing to `target`, filled greedily.
pub fn parity_class_witness(caps: &[usize], b: &ParityVector, target: usize) -> Option<Vec<usize>> {
    if !parity_class_feasible(caps, b, target) {
        return None;
    }
    let mut n: Vec<usize> = b.0.iter().map(|&x| x as usize).collect();
    let mut rest = target - n.iter().sum::<usize>();
    for (i, &k) in caps.iter().enumerate() {
        let room = (k - n[i]) / 2 * 2;
        let add = room.min(rest);
        n[i] += add;
        rest -= add;
    }
    (rest == 0).then_some(n)
}

/// Where the values of `epsilon` come from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EpsilonSource {
    /// Local residue data at primes `p = 3 mod 4` dividing the conductors.
    ResidueFormula,
    /// Hasse-Witt invariants of split local data (2-adic and real places).
    HasseWitt,
}

/// `epsilon` as a parity vector per prime and in total.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Epsilon {
    pub source: EpsilonSource,
    pub per_prime: BTreeMap<u64, ParityVector>,
    pub total: ParityVector,
}

/// `epsilon` from the residue formula: for primes `p = 3 mod 4` dividing some
/// conductor, `a^p(i) = 1` iff `p | m_i` and `Phi_{m_i} mod p` has a
/// self-reciprocal irreducible factor. Requires every `m_i >= 3` to be
/// neither a prime power nor twice one.
pub fn epsilon_cyclotomic(f: &FactoredCharPoly) -> Result<Epsilon> {
    let n = f.len();
    let mut ms = Vec::with_capacity(n);
    for fac in f.factors() {
        let m = fac
            .cyclotomic
            .ok_or_else(|| Error::InvalidFactor(format!("{} is not cyclotomic", fac.label())))?;
        let odd = if m % 2 == 0 { m / 2 } else { m };
        if m < 3 || odd == 1 || prime_power_base(odd).is_some() {
            return Err(Error::RamifiedCyclotomic(m));
        }
        ms.push(m);
    }
    let mut primes: Vec<u64> = ms
        .iter()
        .flat_map(|&m| arith::factor_u64(m).into_iter().map(|(p, _)| p))
        .filter(|p| p % 4 == 3)
        .collect();
    primes.sort_unstable();
    primes.dedup();
    let mut per_prime = BTreeMap::new();
    let mut total = ParityVector::zeros(n);
    for p in primes {
        let mut a = ParityVector::zeros(n);
        for (i, &m) in ms.iter().enumerate() {
            if m % p != 0 {
                continue;
            }
            let red = fppoly::reduce_mod(&cyclotomic(m), p)?;
            if !fppoly::symmetric_irreducible_factors(&red)?.is_empty() {
                a.0[i] = 1;
            }
        }
        total = total.add(&a)?;
        per_prime.insert(p, a);
    }
    Ok(Epsilon {
        source: EpsilonSource::ResidueFormula,
        per_prime,
        total,
    })
}

/// Whether `f_i^{n_i}` satisfies C1 on its own.
pub fn component_c1(f: &FactoredCharPoly, i: usize) -> bool {
    let fac = &f.factors()[i];
    let e = fac.multiplicity as usize;
    let a = num_traits::pow::pow(fac.poly.eval_i64(1), e);
    let b = num_traits::pow::pow(fac.poly.eval_i64(-1), e);
    let mut prod = &a * &b;
    if fac.half_rank() % 2 == 1 {
        prod = -prod;
    }
    is_perfect_square(&a.abs()) && is_perfect_square(&b.abs()) && is_perfect_square(&prod)
}

/// `epsilon` for a cyclotomic product whose components each satisfy C1.
///
/// Each component then carries an even unimodular lattice at every prime
/// (hyperbolic of rank `2 k_i` at 2), so `epsilon + epsilon_a` is the sum of
/// the Hasse-Witt invariants of the components over all places:
/// `C(k_i, 2)` at 2 plus `sigma_i` at the real place. The returned total is
/// the 2-adic part; `a = sigma mod 2` supplies the rest.
pub fn epsilon_hasse_witt(f: &FactoredCharPoly) -> Result<Epsilon> {
    let n = f.len();
    let mut total = ParityVector::zeros(n);
    for (i, fac) in f.factors().iter().enumerate() {
        if fac.cyclotomic.is_none() {
            return Err(Error::InvalidFactor(format!("{} is not cyclotomic", fac.label())));
        }
        if !component_c1(f, i) {
            return Err(Error::RamifiedCyclotomic(fac.cyclotomic.unwrap_or(0)));
        }
        let k = fac.half_rank();
        total.0[i] = ((k * k.saturating_sub(1) / 2) % 2) as u8;
    }
    let mut per_prime = BTreeMap::new();
    per_prime.insert(2, total.clone());
    Ok(Epsilon {
        source: EpsilonSource::HasseWitt,
        per_prime,
        total,
    })
}

/// The rule that produced a verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rule {
    /// C1 or C2 fails.
    LocalConditions,
    /// `Sh = 0`.
    TrivialObstruction,
    /// Exhaustive `epsilon + epsilon_a` test on cyclotomic products.
    CyclotomicEpsilon,
    /// Two factors and a non-maximal signature.
    TwoFactorsNonMaximal,
    /// The real local data meet every class of characters of `Sh`, so some
    /// `epsilon_a` cancels `epsilon` whatever its value.
    RealDataCoverSh,
    /// No rule applies.
    OutOfScope,
}

impl Rule {
    pub fn code(&self) -> &'static str {
        match self {
            Rule::LocalConditions => "local-conditions",
            Rule::TrivialObstruction => "trivial-obstruction",
            Rule::CyclotomicEpsilon => "cyclotomic-epsilon",
            Rule::TwoFactorsNonMaximal => "two-factors-non-maximal",
            Rule::RealDataCoverSh => "real-data-cover-sh",
            Rule::OutOfScope => "out-of-scope",
        }
    }
}

/// Why no verdict could be reached.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum UndeterminedReason {
    /// `epsilon` would need local data of non-cyclotomic factors.
    NonCyclotomicEpsilon,
    /// Some cyclotomic component fails C1 on its own.
    ComponentNotSplit,
    /// A resultant could not be factored.
    UnresolvedCofactor(String),
}

impl UndeterminedReason {
    pub fn code(&self) -> &'static str {
        match self {
            UndeterminedReason::NonCyclotomicEpsilon => "epsilon-requires-non-cyclotomic-local-data",
            UndeterminedReason::ComponentNotSplit => "component-not-locally-split",
            UndeterminedReason::UnresolvedCofactor(_) => "unresolved-resultant-cofactor",
        }
    }
}

/// Realizable, not realizable, or not decided by the engine.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Realizable,
    NotRealizable,
    Undetermined(UndeterminedReason),
}

impl Verdict {
    pub fn code(&self) -> &'static str {
        match self {
            Verdict::Realizable => "realizable",
            Verdict::NotRealizable => "not_realizable",
            Verdict::Undetermined(_) => "undetermined",
        }
    }
}

/// Agreement between the two computations of `epsilon` on the obstruction group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CrossCheck {
    Agree,
    Disagree,
    NotApplicable,
}

impl CrossCheck {
    pub fn code(&self) -> &'static str {
        match self {
            CrossCheck::Agree => "agree",
            CrossCheck::Disagree => "disagree",
            CrossCheck::NotApplicable => "not-applicable",
        }
    }
}

/// Verdict with its audit trail.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecisionReport {
    pub verdict: Verdict,
    pub rule: Rule,
    pub target: SignatureTarget,
    pub c1: C1Report,
    pub c2: C2Report,
    pub sh: Option<ShGroup>,
    /// `epsilon` used for the verdict.
    pub epsilon: Option<Epsilon>,
    /// `epsilon` from the residue formula, when applicable.
    pub epsilon_residue: Option<Epsilon>,
    pub cross_check: CrossCheck,
    /// `C(V'')`.
    pub real_data: Vec<ParityVector>,
    /// The parity vector that kills `epsilon + epsilon_a`.
    pub witness: Option<ParityVector>,
}

/// Options for the engine.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EngineOptions {
    pub limits: FactorLimits,
}

struct Gate {
    c1: C1Report,
    c2: C2Report,
}

fn report(gate: Gate, t: SignatureTarget, verdict: Verdict, rule: Rule) -> DecisionReport {
    DecisionReport {
        verdict,
        rule,
        target: t,
        c1: gate.c1,
        c2: gate.c2,
        sh: None,
        epsilon: None,
        epsilon_residue: None,
        cross_check: CrossCheck::NotApplicable,
        real_data: Vec::new(),
        witness: None,
    }
}

/// Both `epsilon` computations for an all-cyclotomic product, with the
/// verdict-bearing one first.
fn cyclotomic_epsilons(f: &FactoredCharPoly, sh: &ShGroup) -> Result<(Option<Epsilon>, Option<Epsilon>, CrossCheck)> {
    if !f.all_cyclotomic() {
        return Ok((None, None, CrossCheck::NotApplicable));
    }
    let hw = match epsilon_hasse_witt(f) {
        Ok(e) => Some(e),
        Err(Error::RamifiedCyclotomic(_)) => None,
        Err(e) => return Err(e),
    };
    let residue = match epsilon_cyclotomic(f) {
        Ok(e) => Some(e),
        Err(Error::RamifiedCyclotomic(_)) => None,
        Err(e) => return Err(e),
    };
    let check = match (&hw, &residue) {
        (Some(a), Some(b)) => {
            let same = sh
                .basis
                .iter()
                .map(|c| -> Result<bool> {
                    Ok(crate::obstruction::eval_character(c, &a.total)? == crate::obstruction::eval_character(c, &b.total)?)
                })
                .collect::<Result<Vec<_>>>()?
                .into_iter()
                .all(|x| x);
            if same {
                CrossCheck::Agree
            } else {
                CrossCheck::Disagree
            }
        }
        _ => CrossCheck::NotApplicable,
    };
    Ok((hw, residue, check))
}

/// The reciprocity sanity check: all of `C(V'')` share one weight parity and
/// `sum epsilon(i) + sum a(i) = 0` for the witness.
fn reciprocity_check(eps: &Epsilon, real_data: &[ParityVector], witness: Option<&ParityVector>) -> Result<()> {
    let fail = |msg: String| {
        RECIPROCITY_FAILURES.fetch_add(1, Ordering::Relaxed);
        Err(Error::InternalInconsistency(msg))
    };
    if let Some(first) = real_data.first() {
        let w = first.weight_parity();
        if real_data.iter().any(|a| a.weight_parity() != w) {
            return fail("real local data with different total parities".into());
        }
    }
    if let Some(a) = witness {
        if (eps.total.weight_parity() + a.weight_parity()) % 2 != 0 {
            return fail(format!("epsilon {:?} and witness {:?} have odd total", eps.total.0, a.0));
        }
    }
    Ok(())
}

/// First `a` in `candidates` with `epsilon + a` killed by every character of `sh`.
fn find_witness(sh: &ShGroup, eps: &Epsilon, candidates: &[ParityVector]) -> Result<Option<ParityVector>> {
    for a in candidates {
        if sh.kills(&eps.total.add(a)?)? {
            return Ok(Some(a.clone()));
        }
    }
    Ok(None)
}

/// True iff the values of the basis characters on `candidates` exhaust `(Z/2)^rank`.
fn real_data_cover(sh: &ShGroup, candidates: &[ParityVector]) -> Result<bool> {
    let k = sh.rank();
    if k >= 20 || candidates.len() < 1 << k {
        return Ok(false);
    }
    let mut seen = std::collections::BTreeSet::new();
    for a in candidates {
        let mut v = 0u32;
        for (j, c) in sh.basis.iter().enumerate() {
            v |= (crate::obstruction::eval_character(c, a)? as u32) << j;
        }
        seen.insert(v);
    }
    Ok(seen.len() == 1 << k)
}

/// Decides whether an even unimodular lattice of signature `t` carries a
/// semi-simple isometry with characteristic polynomial `F`.
pub fn decide_lattice(f: &FactoredCharPoly, t: SignatureTarget) -> Result<DecisionReport> {
    decide_lattice_with(f, t, EngineOptions::default())
}

pub fn decide_lattice_with(f: &FactoredCharPoly, t: SignatureTarget, opts: EngineOptions) -> Result<DecisionReport> {
    let gate = Gate {
        c1: check_c1(f),
        c2: check_c2(f, t),
    };
    if !gate.c1.pass || !gate.c2.pass {
        return Ok(report(gate, t, Verdict::NotRealizable, Rule::LocalConditions));
    }
    let sh = match sh_group_with(f, opts.limits) {
        Ok(sh) => sh,
        Err(Error::UnresolvedCofactor(u)) => {
            return Ok(report(
                gate,
                t,
                Verdict::Undetermined(UndeterminedReason::UnresolvedCofactor(u.to_string())),
                Rule::OutOfScope,
            ))
        }
        Err(e) => return Err(e),
    };
    let real_data = real_local_data(f, t)?;
    let mut rep = report(gate, t, Verdict::Realizable, Rule::TrivialObstruction);
    rep.real_data = real_data;
    if sh.rank() == 0 {
        rep.sh = Some(sh);
        return Ok(rep);
    }
    let (hw, residue, check) = cyclotomic_epsilons(f, &sh)?;
    rep.epsilon_residue = residue;
    rep.cross_check = check;
    if let Some(eps) = hw {
        let witness = find_witness(&sh, &eps, &rep.real_data)?;
        reciprocity_check(&eps, &rep.real_data, witness.as_ref())?;
        rep.rule = Rule::CyclotomicEpsilon;
        rep.verdict = if witness.is_some() {
            Verdict::Realizable
        } else {
            Verdict::NotRealizable
        };
        rep.witness = witness;
        rep.epsilon = Some(eps);
        rep.sh = Some(sh);
        return Ok(rep);
    }
    let m = f.m();
    if f.len() == 2 && t.s != m && t.r != m {
        rep.rule = Rule::TwoFactorsNonMaximal;
        rep.verdict = Verdict::Realizable;
    } else if real_data_cover(&sh, &rep.real_data)? {
        rep.rule = Rule::RealDataCoverSh;
        rep.verdict = Verdict::Realizable;
    } else {
        rep.rule = Rule::OutOfScope;
        rep.verdict = Verdict::Undetermined(if f.all_cyclotomic() {
            UndeterminedReason::ComponentNotSplit
        } else {
            UndeterminedReason::NonCyclotomicEpsilon
        });
    }
    rep.sh = Some(sh);
    Ok(rep)
}

/// Decides whether the isometry can moreover have Milnor index given by `profile`.
pub fn decide_milnor(f: &FactoredCharPoly, t: SignatureTarget, profile: &MilnorProfile) -> Result<DecisionReport> {
    decide_milnor_with(f, t, profile, EngineOptions::default())
}

pub fn decide_milnor_with(
    f: &FactoredCharPoly,
    t: SignatureTarget,
    profile: &MilnorProfile,
    opts: EngineOptions,
) -> Result<DecisionReport> {
    profile.check(f, t)?;
    let gate = Gate {
        c1: check_c1(f),
        c2: check_c2(f, t),
    };
    if !gate.c1.pass || !gate.c2.pass {
        return Ok(report(gate, t, Verdict::NotRealizable, Rule::LocalConditions));
    }
    let sh = match sh_group_with(f, opts.limits) {
        Ok(sh) => sh,
        Err(Error::UnresolvedCofactor(u)) => {
            return Ok(report(
                gate,
                t,
                Verdict::Undetermined(UndeterminedReason::UnresolvedCofactor(u.to_string())),
                Rule::OutOfScope,
            ))
        }
        Err(e) => return Err(e),
    };
    let a_tau = profile.parity();
    let mut rep = report(gate, t, Verdict::Realizable, Rule::TrivialObstruction);
    rep.real_data = vec![a_tau.clone()];
    if sh.rank() == 0 {
        rep.witness = Some(a_tau);
        rep.sh = Some(sh);
        return Ok(rep);
    }
    let (hw, residue, check) = cyclotomic_epsilons(f, &sh)?;
    rep.epsilon_residue = residue;
    rep.cross_check = check;
    match hw {
        Some(eps) => {
            let ok = sh.kills(&eps.total.add(&a_tau)?)?;
            rep.rule = Rule::CyclotomicEpsilon;
            if ok {
                reciprocity_check(&eps, &[], Some(&a_tau))?;
                rep.verdict = Verdict::Realizable;
                rep.witness = Some(a_tau);
            } else {
                rep.verdict = Verdict::NotRealizable;
            }
            rep.epsilon = Some(eps);
        }
        None => {
            rep.rule = Rule::OutOfScope;
            rep.verdict = Verdict::Undetermined(if f.all_cyclotomic() {
                UndeterminedReason::ComponentNotSplit
            } else {
                UndeterminedReason::NonCyclotomicEpsilon
            });
        }
    }
    rep.sh = Some(sh);
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(ms: &[(u64, u32)]) -> FactoredCharPoly {
        FactoredCharPoly::from_cyclotomic(ms).unwrap()
    }

    #[test]
    fn c1_values() {
        let f = cyc(&[(7, 2), (14, 2)]);
        let c1 = check_c1(&f);
        assert_eq!(c1.at_one, BigInt::from(49));
        assert_eq!(c1.at_minus_one, BigInt::from(49));
        assert!(c1.pass);
    }

    #[test]
    fn c2_values() {
        let f = cyc(&[(7, 2), (14, 2)]);
        assert!(check_c2(&f, SignatureTarget::new(24, 0)).pass);
        assert!(check_c2(&f, SignatureTarget::new(20, 4)).pass);
        assert!(!check_c2(&f, SignatureTarget::new(22, 2)).pass);
        assert!(!check_c2(&f, SignatureTarget::new(12, 10)).pass);
    }

    #[test]
    fn feasibility_box() {
        let caps = [6, 42];
        assert!(parity_class_feasible(&caps, &ParityVector::from_bits(&[1, 1]), 2));
        assert!(!parity_class_feasible(&caps, &ParityVector::from_bits(&[1, 0]), 2));
        assert!(!parity_class_feasible(&caps, &ParityVector::from_bits(&[1, 1]), 0));
        assert_eq!(
            parity_class_witness(&caps, &ParityVector::from_bits(&[0, 0]), 24),
            Some(vec![6, 18])
        );
        // N_1 odd caps at 5 when k_1 = 6
        assert!(!parity_class_feasible(&[6], &ParityVector::from_bits(&[1]), 6));
    }

    #[test]
    fn real_data_examples() {
        let f = cyc(&[(21, 1), (147, 1)]);
        let bits = |v: &[&[u8]]| v.iter().map(|b| ParityVector::from_bits(b)).collect::<Vec<_>>();
        assert_eq!(real_local_data(&f, SignatureTarget::new(92, 4)).unwrap(), bits(&[&[0, 0], &[1, 1]]));
        assert_eq!(real_local_data(&f, SignatureTarget::new(96, 0)).unwrap(), bits(&[&[0, 0]]));
        assert_eq!(real_local_data(&f, SignatureTarget::new(48, 48)).unwrap(), bits(&[&[0, 0], &[1, 1]]));
    }

    #[test]
    fn residue_epsilon() {
        let f = cyc(&[(21, 1), (147, 1)]);
        let e = epsilon_cyclotomic(&f).unwrap();
        assert_eq!(e.total, ParityVector::from_bits(&[1, 1]));
        assert_eq!(e.per_prime[&3], ParityVector::from_bits(&[1, 1]));
        assert_eq!(e.per_prime[&7], ParityVector::zeros(2));
        assert_eq!(epsilon_cyclotomic(&cyc(&[(7, 1), (14, 1)])), Err(Error::RamifiedCyclotomic(7)));
    }

    #[test]
    fn hasse_witt_epsilon() {
        let e = epsilon_hasse_witt(&cyc(&[(7, 2), (14, 2)])).unwrap();
        assert_eq!(e.total, ParityVector::from_bits(&[1, 1]));
        let e = epsilon_hasse_witt(&cyc(&[(21, 1), (147, 1)])).unwrap();
        assert_eq!(e.total, ParityVector::from_bits(&[1, 1]));
        // Phi_7 alone fails C1 on its own
        assert!(epsilon_hasse_witt(&cyc(&[(7, 1), (14, 1)])).is_err());
    }

    #[test]
    fn profile_checks() {
        let f = cyc(&[(21, 1), (147, 1)]);
        let t = SignatureTarget::new(92, 4);
        assert!(MilnorProfile::new(vec![1, 1]).check(&f, t).is_ok());
        assert!(MilnorProfile::new(vec![2, 1]).check(&f, t).is_err());
        assert!(MilnorProfile::new(vec![7, 0]).check(&f, SignatureTarget::new(82, 14)).is_err());
        assert!(MilnorProfile::new(vec![2]).check(&f, t).is_err());
    }
}
