//! Factored characteristic polynomials, the prime sets `V_{f,g}`, the
//! obstruction group `Sh` and its characters.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, ToPrimitive, Zero};
use petgraph::unionfind::UnionFind;

use crate::arith::{self, prime_power_base, DEFAULT_RHO_ROUNDS, DEFAULT_TRIAL_LIMIT};
use crate::error::{Error, Result};
use crate::fppoly::{self, FpPoly};
use crate::intpoly::{cyclotomic, cyclotomic_index, IntPoly};
use crate::realroots;

/// How irreducibility over Q of a factor is known.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Trust {
    /// The factor is a cyclotomic polynomial.
    Verified,
    /// Irreducibility is taken on the caller's word.
    Asserted,
}

/// One factor `f_i^{n_i}` with cached root data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factor {
    pub poly: IntPoly,
    pub multiplicity: u32,
    /// `m` with `poly = Phi_m`, when known.
    pub cyclotomic: Option<u64>,
    pub trust: Trust,
    /// Roots with `|z| > 1`.
    pub m: usize,
    /// Root pairs on the unit circle.
    pub pairs: usize,
}

impl Factor {
    pub fn degree(&self) -> usize {
        self.poly.deg()
    }

    /// `n_i * deg f_i / 2`.
    pub fn half_rank(&self) -> usize {
        self.multiplicity as usize * self.degree() / 2
    }

    fn sort_key(&self) -> (usize, u64, &[BigInt]) {
        (self.degree(), self.cyclotomic.unwrap_or(u64::MAX), self.poly.coeffs())
    }

    /// `Phi(m)` for cyclotomic factors, coefficients otherwise.
    pub fn label(&self) -> String {
        match self.cyclotomic {
            Some(m) => format!("Phi({m})"),
            None => format!("({})", self.poly.to_text()),
        }
    }
}

/// `prod f_i^{n_i}` with distinct monic symmetric squarefree `f_i`, sorted by
/// degree, then cyclotomic index (cyclotomic first), then coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactoredCharPoly {
    factors: Vec<Factor>,
}

impl FactoredCharPoly {
    /// Validates and sorts the factors. Cyclotomic polynomials are recognized
    /// and marked `Verified`.
    pub fn new(factors: Vec<(IntPoly, u32)>) -> Result<Self> {
        let mut out = Vec::with_capacity(factors.len());
        for (poly, n) in factors {
            let cyc = cyclotomic_index(&poly);
            out.push(Self::make_factor(poly, n, cyc)?);
        }
        Self::assemble(out)
    }

    /// `prod Phi_m^n` over the given pairs.
    pub fn from_cyclotomic(ms: &[(u64, u32)]) -> Result<Self> {
        let mut out = Vec::with_capacity(ms.len());
        for &(m, n) in ms {
            if m == 0 {
                return Err(Error::InvalidFactor("Phi(0) is undefined".into()));
            }
            out.push(Self::make_factor(cyclotomic(m), n, Some(m))?);
        }
        Self::assemble(out)
    }

    fn make_factor(poly: IntPoly, n: u32, cyc: Option<u64>) -> Result<Factor> {
        let text = poly.to_text();
        if n == 0 {
            return Err(Error::InvalidFactor(format!("{text} has multiplicity 0")));
        }
        if !poly.is_monic() {
            return Err(Error::InvalidFactor(format!("{text} is not monic")));
        }
        if poly.deg() == 0 {
            return Err(Error::InvalidFactor(format!("{text} is constant")));
        }
        if poly.deg() == 1 {
            return Err(Error::InvalidFactor(format!("{text} is linear")));
        }
        if poly.deg() % 2 == 1 {
            return Err(Error::InvalidFactor(format!("{text} has odd degree")));
        }
        if !poly.is_symmetric() {
            return Err(Error::InvalidFactor(format!("{text} is not symmetric")));
        }
        if !poly.squarefree_check() {
            return Err(Error::InvalidFactor(format!("{text} is not squarefree")));
        }
        let (m, pairs) = match cyc {
            Some(_) => (0, poly.deg() / 2),
            None => {
                let m = realroots::m_of_factor(&poly)?;
                (m, poly.deg() / 2 - m)
            }
        };
        Ok(Factor {
            poly,
            multiplicity: n,
            cyclotomic: cyc,
            trust: if cyc.is_some() { Trust::Verified } else { Trust::Asserted },
            m,
            pairs,
        })
    }

    fn assemble(mut factors: Vec<Factor>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::InvalidFactor("empty product".into()));
        }
        factors.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
        for i in 0..factors.len() {
            for j in i + 1..factors.len() {
                let (a, b) = (&factors[i], &factors[j]);
                if a.poly == b.poly {
                    return Err(Error::InvalidFactor(format!("{} is repeated", a.label())));
                }
                let coprime = match (a.cyclotomic, b.cyclotomic) {
                    (Some(_), Some(_)) => true,
                    _ => a.poly.gcd(&b.poly).deg() == 0,
                };
                if !coprime {
                    return Err(Error::InvalidFactor(format!(
                        "{} and {} share a factor",
                        a.label(),
                        b.label()
                    )));
                }
            }
        }
        Ok(FactoredCharPoly { factors })
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.factors
            .iter()
            .map(|f| f.multiplicity as usize * f.degree())
            .sum()
    }

    /// The expanded product `prod f_i^{n_i}`.
    pub fn expand(&self) -> IntPoly {
        self.factors
            .iter()
            .fold(IntPoly::one(), |acc, f| &acc * &f.poly.pow(f.multiplicity))
    }

    /// `F(x)` computed factorwise.
    pub fn eval(&self, x: i64) -> BigInt {
        let x = BigInt::from(x);
        self.factors
            .iter()
            .map(|f| num_traits::pow::pow(f.poly.eval(&x), f.multiplicity as usize))
            .product()
    }

    /// `m(F) = sum n_i m(f_i)`.
    pub fn m(&self) -> usize {
        self.factors
            .iter()
            .map(|f| f.multiplicity as usize * f.m)
            .sum()
    }

    pub fn all_cyclotomic(&self) -> bool {
        self.factors.iter().all(|f| f.cyclotomic.is_some())
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|f| f.multiplicity == 1)
    }

    /// The squarefree product `g = prod f_i`.
    pub fn radical(&self) -> IntPoly {
        self.factors.iter().fold(IntPoly::one(), |acc, f| &acc * &f.poly)
    }

    /// Text form `Phi(7)^2 * (X^2 + 7*X + 1)`.
    pub fn to_text(&self) -> String {
        self.factors
            .iter()
            .map(|f| {
                if f.multiplicity == 1 {
                    f.label()
                } else {
                    format!("{}^{}", f.label(), f.multiplicity)
                }
            })
            .collect::<Vec<_>>()
            .join(" * ")
    }
}

/// A map from the factor index set to `Z/2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParityVector(pub Vec<u8>);

impl ParityVector {
    pub fn zeros(n: usize) -> Self {
        ParityVector(vec![0; n])
    }

    pub fn from_bits(bits: &[u8]) -> Self {
        ParityVector(bits.iter().map(|b| b & 1).collect())
    }

    /// Bits of `mask`, index 0 first.
    pub fn from_mask(mask: u64, n: usize) -> Self {
        ParityVector((0..n).map(|i| ((mask >> i) & 1) as u8).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> u8 {
        self.0[i]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&b| b == 0)
    }

    /// `sum_i a(i) mod 2`.
    pub fn weight_parity(&self) -> u8 {
        self.0.iter().fold(0, |acc, &b| acc ^ b)
    }

    pub fn add(&self, other: &ParityVector) -> Result<ParityVector> {
        if self.len() != other.len() {
            return Err(Error::DomainMismatch(self.len(), other.len()));
        }
        Ok(ParityVector(
            self.0.iter().zip(&other.0).map(|(a, b)| a ^ b).collect(),
        ))
    }
}

/// `sum_i c(i) a(i) mod 2`.
pub fn eval_character(c: &ParityVector, a: &ParityVector) -> Result<u8> {
    if c.len() != a.len() {
        return Err(Error::DomainMismatch(c.len(), a.len()));
    }
    Ok(c.0.iter().zip(&a.0).fold(0, |acc, (x, y)| acc ^ (x & y)))
}

/// Prime divisors of a resultant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CandidatePrimes {
    pub primes: Vec<u64>,
    /// Cofactor that could not be split, or a prime divisor beyond 64 bits.
    pub unresolved: Option<BigUint>,
}

/// Knobs for factoring resultants.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FactorLimits {
    pub trial_limit: u64,
    pub rho_rounds: u64,
}

impl Default for FactorLimits {
    fn default() -> Self {
        FactorLimits {
            trial_limit: DEFAULT_TRIAL_LIMIT,
            rho_rounds: DEFAULT_RHO_ROUNDS,
        }
    }
}

/// `Res(Phi_a, Phi_b)` for `a > b > 1`: `p^phi(b)` when `a / b` is a power of
/// the prime `p`, else 1.
pub fn cyclotomic_resultant(a: u64, b: u64) -> BigInt {
    let (hi, lo) = if a >= b { (a, b) } else { (b, a) };
    assert!(lo > 1 && hi != lo, "needs distinct indices above 1");
    match (hi % lo == 0).then(|| prime_power_base(hi / lo)).flatten() {
        Some(p) => num_traits::pow::pow(BigInt::from(p), arith::euler_phi(lo) as usize),
        None => BigInt::from(1),
    }
}

/// Distinct primes dividing `Res(f, g)` for monic coprime `f`, `g`.
pub fn candidate_primes(f: &IntPoly, g: &IntPoly) -> Result<CandidatePrimes> {
    candidate_primes_with(f, g, FactorLimits::default())
}

pub fn candidate_primes_with(f: &IntPoly, g: &IntPoly, limits: FactorLimits) -> Result<CandidatePrimes> {
    if let (Some(a), Some(b)) = (cyclotomic_index(f), cyclotomic_index(g)) {
        if a > 2 && b > 2 && a != b {
            return Ok(cyclotomic_candidates(a, b));
        }
    }
    let r = f.resultant(g)?;
    primes_of(&r, limits)
}

fn cyclotomic_candidates(a: u64, b: u64) -> CandidatePrimes {
    let (hi, lo) = if a >= b { (a, b) } else { (b, a) };
    let primes = (hi % lo == 0)
        .then(|| prime_power_base(hi / lo))
        .flatten()
        .into_iter()
        .collect();
    CandidatePrimes { primes, unresolved: None }
}

fn primes_of(r: &BigInt, limits: FactorLimits) -> Result<CandidatePrimes> {
    if r.is_zero() {
        return Err(Error::ResultantZero);
    }
    let pd = arith::prime_divisors(&r.abs().to_biguint().expect("nonnegative"), limits.trial_limit, limits.rho_rounds);
    let mut primes = Vec::new();
    let mut unresolved = pd.unresolved;
    for p in pd.primes {
        match p.to_u64() {
            Some(q) => primes.push(q),
            None => {
                unresolved = Some(match unresolved {
                    None => p,
                    Some(u) => u * p,
                })
            }
        }
    }
    Ok(CandidatePrimes { primes, unresolved })
}

/// Audit record for one pair of factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub i: usize,
    pub j: usize,
    /// The set `V_{f_i, f_j}`.
    pub primes: Vec<u64>,
    /// Common self-reciprocal factors found at each prime of `primes`.
    pub witnesses: Vec<(u64, Vec<FpPoly>)>,
}

/// `V_{f,g}`: primes where `f` and `g` share a self-reciprocal irreducible factor.
pub fn v_set(f: &IntPoly, g: &IntPoly) -> Result<Vec<u64>> {
    Ok(v_set_audit(f, g, FactorLimits::default())?
        .into_iter()
        .map(|(p, _)| p)
        .collect())
}

fn v_set_audit(f: &IntPoly, g: &IntPoly, limits: FactorLimits) -> Result<Vec<(u64, Vec<FpPoly>)>> {
    let cand = candidate_primes_with(f, g, limits)?;
    if let Some(u) = cand.unresolved {
        return Err(Error::UnresolvedCofactor(u));
    }
    let mut out = Vec::new();
    for p in cand.primes {
        let common = fppoly::common_symmetric_factors(f, g, p)?;
        if !common.is_empty() {
            out.push((p, common));
        }
    }
    Ok(out)
}

/// The obstruction group as a partition of the factor indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShGroup {
    /// Number of factors.
    pub size: usize,
    /// Classes sorted by least element; class 0 holds index 0.
    pub classes: Vec<Vec<usize>>,
    /// Indicators of classes `1..k`.
    pub basis: Vec<ParityVector>,
    /// Pairs with nonempty `V_{i,j}`.
    pub edges: Vec<Edge>,
}

impl ShGroup {
    fn from_union_find(size: usize, uf: &UnionFind<usize>, edges: Vec<Edge>) -> Self {
        let mut by_root: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for i in 0..size {
            by_root.entry(uf.find(i)).or_default().push(i);
        }
        let mut classes: Vec<Vec<usize>> = by_root.into_values().collect();
        classes.sort();
        let basis = classes
            .iter()
            .skip(1)
            .map(|cl| {
                let mut v = vec![0u8; size];
                for &i in cl {
                    v[i] = 1;
                }
                ParityVector(v)
            })
            .collect();
        ShGroup { size, classes, basis, edges }
    }

    /// Dimension over `Z/2`.
    pub fn rank(&self) -> usize {
        self.classes.len().saturating_sub(1)
    }

    /// Index of the class holding factor `i`.
    pub fn class_of(&self, i: usize) -> usize {
        self.classes
            .iter()
            .position(|cl| cl.contains(&i))
            .expect("index in range")
    }

    /// True iff every basis character vanishes on `a`.
    pub fn kills(&self, a: &ParityVector) -> Result<bool> {
        for c in &self.basis {
            if eval_character(c, a)? == 1 {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// `Sh` of `F`: classes of the relation generated by `V_{f_i, f_j} != {}`.
pub fn sh_group(f: &FactoredCharPoly) -> Result<ShGroup> {
    sh_group_with(f, FactorLimits::default())
}

pub fn sh_group_with(f: &FactoredCharPoly, limits: FactorLimits) -> Result<ShGroup> {
    let n = f.len();
    let mut uf = UnionFind::new(n);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let audit = v_set_audit(&f.factors()[i].poly, &f.factors()[j].poly, limits)?;
            if !audit.is_empty() {
                uf.union(i, j);
                edges.push(Edge {
                    i,
                    j,
                    primes: audit.iter().map(|(p, _)| *p).collect(),
                    witnesses: audit,
                });
            }
        }
    }
    Ok(ShGroup::from_union_find(n, &uf, edges))
}

/// A place of Q: the infinite place or a prime.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Place {
    Infinite,
    Prime(u64),
}

/// Result of the bounded search for the rational group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalSh {
    /// Partition from places found up to the bound; the true group is a quotient.
    pub group: ShGroup,
    pub prime_bound: u64,
    /// Always true: witnesses beyond the bound can only merge classes further.
    pub upper_bound: bool,
    /// Places tested before the partition stabilized, with the factors they contain.
    pub places: Vec<(Place, Vec<usize>)>,
}

/// Default prime bound for [`sh_rational_bounded`].
pub const DEFAULT_RATIONAL_BOUND: u64 = 1000;

/// Bounded approximation of the rational group: classes merged when two
/// factors share the infinite place (a unit-circle root pair) or a prime
/// `p <= prime_bound` with a self-reciprocal irreducible factor mod `p`.
/// Stops as soon as a single class remains.
pub fn sh_rational_bounded(f: &FactoredCharPoly, prime_bound: u64) -> RationalSh {
    let n = f.len();
    let mut uf = UnionFind::new(n);
    let mut places = Vec::new();
    let mut classes = n;
    let merge = |members: &[usize], uf: &mut UnionFind<usize>, classes: &mut usize| {
        for w in members.windows(2) {
            if uf.union(w[0], w[1]) {
                *classes -= 1;
            }
        }
    };
    let inf: Vec<usize> = (0..n).filter(|&i| f.factors()[i].pairs > 0).collect();
    merge(&inf, &mut uf, &mut classes);
    places.push((Place::Infinite, inf));
    let mut p = 2;
    while p <= prime_bound && classes > 1 {
        if arith::is_prime_u64(p) {
            let members: Vec<usize> = (0..n)
                .filter(|&i| {
                    let red = fppoly::reduce_mod(&f.factors()[i].poly, p).expect("prime");
                    fppoly::symmetric_irreducible_factors(&red).is_ok_and(|v| !v.is_empty())
                })
                .collect();
            merge(&members, &mut uf, &mut classes);
            places.push((Place::Prime(p), members));
        }
        p += 1;
    }
    RationalSh {
        group: ShGroup::from_union_find(n, &uf, Vec::new()),
        prime_bound,
        upper_bound: true,
        places,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parity_ops() {
        let a = ParityVector::from_bits(&[1, 1]);
        assert_eq!(eval_character(&ParityVector::from_bits(&[1, 0]), &a).unwrap(), 1);
        assert_eq!(eval_character(&ParityVector::zeros(2), &a).unwrap(), 0);
        assert_eq!(eval_character(&a, &a).unwrap(), 0);
        assert_eq!(eval_character(&a, &ParityVector::zeros(3)), Err(Error::DomainMismatch(2, 3)));
        assert_eq!(ParityVector::from_mask(0b101, 3).0, vec![1, 0, 1]);
    }

    #[test]
    fn validation() {
        let bad = |v: Vec<(IntPoly, u32)>| FactoredCharPoly::new(v).is_err();
        assert!(bad(vec![(IntPoly::from_i64s(&[-1, 1]), 1)]));
        assert!(bad(vec![(IntPoly::from_i64s(&[2, 1, 1]), 1)]));
        assert!(bad(vec![(cyclotomic(7), 1), (cyclotomic(7), 2)]));
        assert!(bad(vec![(&cyclotomic(3) * &cyclotomic(3), 1)]));
        assert!(bad(vec![(&cyclotomic(3) * &cyclotomic(4), 1), (cyclotomic(3), 1)]));
        let ok = FactoredCharPoly::from_cyclotomic(&[(14, 2), (7, 2)]).unwrap();
        assert_eq!(ok.factors()[0].cyclotomic, Some(7));
        assert_eq!(ok.degree(), 24);
        assert_eq!(ok.to_text(), "Phi(7)^2 * Phi(14)^2");
    }

    #[test]
    fn cyclotomic_resultant_values() {
        assert_eq!(cyclotomic_resultant(6, 3), BigInt::from(4));
        assert_eq!(cyclotomic_resultant(147, 21), BigInt::from(7).pow(12));
        assert_eq!(cyclotomic_resultant(15, 21), BigInt::from(1));
    }

    #[test]
    fn sh_single_and_pair() {
        let one = FactoredCharPoly::from_cyclotomic(&[(21, 1)]).unwrap();
        assert_eq!(sh_group(&one).unwrap().rank(), 0);
        let pair = FactoredCharPoly::from_cyclotomic(&[(7, 1), (14, 1)]).unwrap();
        let sh = sh_group(&pair).unwrap();
        assert_eq!(sh.rank(), 1);
        assert_eq!(sh.basis, vec![ParityVector::from_bits(&[0, 1])]);
        assert_eq!(sh_rational_bounded(&pair, 1000).group.rank(), 0);
    }
}
