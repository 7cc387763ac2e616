//! Polynomials over prime fields `F_p`: Euclid, complete factorization
//! (squarefree, distinct-degree and equal-degree splitting) and detection of
//! self-reciprocal irreducible factors.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::{self, is_prime_u64};
use crate::error::{Error, Result};
use crate::intpoly::IntPoly;

/// Polynomial over `F_p` with ascending coefficients in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FpPoly {
    p: u64,
    coeffs: Vec<u64>,
}

/// Complete factorization `unit * prod factor^multiplicity`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpFactorization {
    pub unit: u64,
    pub factors: Vec<(FpPoly, u32)>,
}

/// Below this bound `2^20` products of residues add up without overflow.
const SMALL_PRIME: u64 = 1 << 21;

#[inline]
fn mulm(a: u64, b: u64, p: u64) -> u64 {
    if p <= u32::MAX as u64 {
        a * b % p
    } else {
        arith::mul_mod(a, b, p)
    }
}

#[inline]
fn addm(a: u64, b: u64, p: u64) -> u64 {
    let s = a as u128 + b as u128;
    (s % p as u128) as u64
}

#[inline]
fn subm(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        p - (b - a)
    }
}

fn invm(a: u64, p: u64) -> u64 {
    arith::pow_mod(a, p - 2, p)
}

impl FpPoly {
    /// Reduces the coefficients modulo the prime `p`.
    pub fn new(p: u64, coeffs: Vec<u64>) -> Result<Self> {
        if !is_prime_u64(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Self::from_raw(p, coeffs.into_iter().map(|c| c % p).collect()))
    }

    fn from_raw(p: u64, mut coeffs: Vec<u64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        FpPoly { p, coeffs }
    }

    fn constant(p: u64, c: u64) -> Self {
        Self::from_raw(p, vec![c % p])
    }

    fn x(p: u64) -> Self {
        Self::from_raw(p, vec![0, 1])
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn leading(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn eval(&self, x: u64) -> u64 {
        let x = x % self.p;
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| addm(mulm(acc, x, self.p), c, self.p))
    }

    /// Scales to leading coefficient 1; the zero polynomial is returned as is.
    pub fn monic(&self) -> FpPoly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = invm(self.leading(), self.p);
        self.scale(inv)
    }

    fn scale(&self, c: u64) -> FpPoly {
        Self::from_raw(self.p, self.coeffs.iter().map(|&a| mulm(a, c, self.p)).collect())
    }

    pub fn add(&self, o: &FpPoly) -> FpPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let c = (0..n)
            .map(|k| addm(self.get(k), o.get(k), self.p))
            .collect();
        Self::from_raw(self.p, c)
    }

    pub fn sub(&self, o: &FpPoly) -> FpPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let c = (0..n)
            .map(|k| subm(self.get(k), o.get(k), self.p))
            .collect();
        Self::from_raw(self.p, c)
    }

    fn get(&self, k: usize) -> u64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn mul(&self, o: &FpPoly) -> FpPoly {
        if self.is_zero() || o.is_zero() {
            return Self::from_raw(self.p, Vec::new());
        }
        let p = self.p;
        let n = self.coeffs.len() + o.coeffs.len() - 1;
        if p < SMALL_PRIME && n < 1 << 20 {
            let mut acc = vec![0u64; n];
            for (i, &a) in self.coeffs.iter().enumerate() {
                if a == 0 {
                    continue;
                }
                for (x, &b) in acc[i..].iter_mut().zip(&o.coeffs) {
                    *x += a * b;
                }
            }
            Self::from_raw(p, acc.into_iter().map(|v| v % p).collect())
        } else if p <= u32::MAX as u64 {
            let mut acc = vec![0u128; n];
            for (i, &a) in self.coeffs.iter().enumerate() {
                if a == 0 {
                    continue;
                }
                for (j, &b) in o.coeffs.iter().enumerate() {
                    acc[i + j] += (a * b) as u128;
                }
            }
            Self::from_raw(p, acc.into_iter().map(|v| (v % p as u128) as u64).collect())
        } else {
            let mut out = vec![0u64; n];
            for (i, &a) in self.coeffs.iter().enumerate() {
                for (j, &b) in o.coeffs.iter().enumerate() {
                    out[i + j] = addm(out[i + j], mulm(a, b, p), p);
                }
            }
            Self::from_raw(p, out)
        }
    }

    /// Quotient and remainder by a nonzero divisor.
    pub fn div_rem(&self, d: &FpPoly) -> (FpPoly, FpPoly) {
        let p = self.p;
        let dd = d.degree().expect("division by zero polynomial");
        if self.deg() < dd || self.is_zero() {
            return (Self::from_raw(p, Vec::new()), self.clone());
        }
        let inv = invm(d.leading(), p);
        let n = self.deg();
        if p < SMALL_PRIME && n < 1 << 20 {
            return self.div_rem_small(d, dd, inv);
        }
        let mut r = self.coeffs.clone();
        let mut q = vec![0u64; n - dd + 1];
        for k in (0..=n - dd).rev() {
            let t = r[k + dd];
            if t == 0 {
                continue;
            }
            let c = mulm(t, inv, p);
            q[k] = c;
            for (j, &dc) in d.coeffs.iter().enumerate() {
                if dc != 0 {
                    r[k + j] = subm(r[k + j], mulm(c, dc, p), p);
                }
            }
        }
        r.truncate(dd);
        (Self::from_raw(p, q), Self::from_raw(p, r))
    }

    /// Long division with the remainder kept unreduced until each leading
    /// coefficient is needed.
    fn div_rem_small(&self, d: &FpPoly, dd: usize, inv: u64) -> (FpPoly, FpPoly) {
        let p = self.p;
        let n = self.deg();
        let neg: Vec<u64> = d.coeffs[..dd].iter().map(|&c| (p - c) % p).collect();
        let mut r = self.coeffs.clone();
        let mut q = vec![0u64; n - dd + 1];
        for k in (0..=n - dd).rev() {
            let t = r[k + dd] % p;
            if t == 0 {
                continue;
            }
            let c = t * inv % p;
            q[k] = c;
            for (x, &nc) in r[k..k + dd].iter_mut().zip(&neg) {
                *x += c * nc;
            }
        }
        r.truncate(dd);
        (
            Self::from_raw(p, q),
            Self::from_raw(p, r.into_iter().map(|v| v % p).collect()),
        )
    }

    pub fn rem(&self, d: &FpPoly) -> FpPoly {
        self.div_rem(d).1
    }

    pub fn derivative(&self) -> FpPoly {
        let p = self.p;
        let c = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, &a)| mulm(a, k as u64 % p, p))
            .collect();
        Self::from_raw(p, c)
    }

    /// `self^e mod m`.
    pub fn pow_mod(&self, e: &BigUint, m: &FpPoly) -> FpPoly {
        let mut result = Self::constant(self.p, 1).rem(m);
        let base = self.rem(m);
        for i in (0..e.bits()).rev() {
            result = result.mul(&result).rem(m);
            if e.bit(i) {
                result = result.mul(&base).rem(m);
            }
        }
        result
    }

    /// Monic normalization of `X^deg * g(1/X)`.
    pub fn reciprocal_monic(&self) -> FpPoly {
        Self::from_raw(self.p, self.coeffs.iter().rev().copied().collect()).monic()
    }

    /// True iff `g(0) != 0` and `g(0)^(-1) X^deg g(1/X) = g` for monic `g`.
    pub fn is_self_reciprocal(&self) -> bool {
        !self.is_zero() && self.coeffs[0] != 0 && self.monic().reciprocal_monic() == self.monic()
    }

    /// Lifts to integer coefficients in `[0, p)`.
    pub fn to_intpoly(&self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Text form with coefficients in `[0, p)`.
    pub fn to_text(&self) -> String {
        self.to_intpoly().to_text()
    }

    fn pth_root(&self) -> FpPoly {
        let p = self.p as usize;
        Self::from_raw(self.p, self.coeffs.iter().step_by(p).copied().collect())
    }
}

/// Coefficientwise reduction modulo a prime.
pub fn reduce_mod(f: &IntPoly, prime: u64) -> Result<FpPoly> {
    if !is_prime_u64(prime) {
        return Err(Error::NotPrime(prime));
    }
    let m = BigInt::from(prime);
    let coeffs = f
        .coeffs()
        .iter()
        .map(|c| c.mod_floor(&m).to_u64().expect("residue fits"))
        .collect();
    Ok(FpPoly::from_raw(prime, coeffs))
}

/// Monic gcd by Euclid.
pub fn gcd_mod(a: &FpPoly, b: &FpPoly) -> Result<FpPoly> {
    if a.p != b.p {
        return Err(Error::ModulusMismatch(a.p, b.p));
    }
    Ok(gcd_raw(a, b))
}

fn gcd_raw(a: &FpPoly, b: &FpPoly) -> FpPoly {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_zero() {
        let r = a.rem(&b);
        a = b;
        b = r;
    }
    a.monic()
}

/// Multiplication by the Frobenius `h -> h^p` on `F_p[X] / (m)`.
struct Frobenius {
    modulus: FpPoly,
    rows: Vec<Vec<u64>>,
}

impl Frobenius {
    fn new(m: &FpPoly) -> Self {
        let p = m.p;
        let n = m.deg();
        let xp = FpPoly::x(p).pow_mod(&BigUint::from(p), m);
        let mut rows = Vec::with_capacity(n);
        let mut cur = FpPoly::constant(p, 1).rem(m);
        for _ in 0..n {
            rows.push(pad(&cur.coeffs, n));
            cur = if (p as usize) <= n {
                shift_rem(&cur, p as usize, m)
            } else {
                cur.mul(&xp).rem(m)
            };
        }
        Frobenius { modulus: m.clone(), rows }
    }

    fn apply(&self, h: &FpPoly) -> FpPoly {
        let p = self.modulus.p;
        let n = self.rows.len();
        let h = h.rem(&self.modulus);
        if p < SMALL_PRIME && n < 1 << 20 {
            let mut acc = vec![0u64; n];
            for (i, &c) in h.coeffs.iter().enumerate() {
                if c == 0 {
                    continue;
                }
                for (a, &r) in acc.iter_mut().zip(&self.rows[i]) {
                    *a += c * r;
                }
            }
            FpPoly::from_raw(p, acc.into_iter().map(|v| v % p).collect())
        } else if p <= u32::MAX as u64 {
            let mut acc = vec![0u128; n];
            for (i, &c) in h.coeffs.iter().enumerate() {
                if c == 0 {
                    continue;
                }
                for (a, &r) in acc.iter_mut().zip(&self.rows[i]) {
                    *a += (c * r) as u128;
                }
            }
            FpPoly::from_raw(p, acc.into_iter().map(|v| (v % p as u128) as u64).collect())
        } else {
            let mut out = vec![0u64; n];
            for (i, &c) in h.coeffs.iter().enumerate() {
                for (o, &r) in out.iter_mut().zip(&self.rows[i]) {
                    *o = addm(*o, mulm(c, r, p), p);
                }
            }
            FpPoly::from_raw(p, out)
        }
    }
}

fn pad(c: &[u64], n: usize) -> Vec<u64> {
    let mut v = c.to_vec();
    v.resize(n, 0);
    v
}

/// `a * X^s mod m`, reducing one degree at a time.
fn shift_rem(a: &FpPoly, s: usize, m: &FpPoly) -> FpPoly {
    let p = a.p;
    let n = m.deg();
    let inv = invm(m.leading(), p);
    let mut c = pad(&a.coeffs, n);
    for _ in 0..s {
        let top = c[n - 1];
        c.rotate_right(1);
        c[0] = 0;
        if top != 0 {
            let t = mulm(top, inv, p);
            for j in 0..n {
                c[j] = subm(c[j], mulm(t, m.coeffs[j], p), p);
            }
        }
    }
    FpPoly::from_raw(p, c)
}

fn seed_for(f: &FpPoly) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for w in std::iter::once(f.p).chain(f.coeffs.iter().copied()) {
        for b in w.to_le_bytes() {
            h ^= b as u64;
            h = h.wrapping_mul(0x0000_0100_0000_01b3);
        }
    }
    h
}

fn squarefree_parts(f: &FpPoly) -> Vec<(FpPoly, u32)> {
    let p = f.p;
    let mut out = Vec::new();
    if f.deg() == 0 {
        return out;
    }
    let d = f.derivative();
    if d.is_zero() {
        for (h, e) in squarefree_parts(&f.pth_root()) {
            out.push((h, e * p as u32));
        }
        return out;
    }
    let mut c = gcd_raw(f, &d);
    let mut w = f.div_rem(&c).0;
    let mut i = 1u32;
    while w.deg() > 0 {
        let y = gcd_raw(&w, &c);
        let z = w.div_rem(&y).0;
        if z.deg() > 0 {
            out.push((z.monic(), i));
        }
        i += 1;
        c = c.div_rem(&y).0;
        w = y;
    }
    if c.deg() > 0 {
        for (h, e) in squarefree_parts(&c.monic().pth_root()) {
            out.push((h, e * p as u32));
        }
    }
    out
}

fn distinct_degree(h: &FpPoly) -> Vec<(FpPoly, usize)> {
    let p = h.p;
    let mut out = Vec::new();
    if h.deg() == 0 {
        return out;
    }
    if h.deg() == 1 {
        return vec![(h.monic(), 1)];
    }
    let frob = Frobenius::new(h);
    let x = FpPoly::x(p);
    let mut rest = h.clone();
    let mut xpi = x.clone();
    let mut i = 1;
    while rest.deg() >= 2 * i {
        xpi = frob.apply(&xpi);
        let g = gcd_raw(&rest, &xpi.sub(&x));
        if !g.is_one() {
            rest = rest.div_rem(&g).0;
            out.push((g, i));
        }
        i += 1;
    }
    if rest.deg() > 0 {
        let d = rest.deg();
        out.push((rest.monic(), d));
    }
    out
}

/// Cantor-Zassenhaus splitting of `h`, a product of irreducibles of degree
/// `d` dividing the modulus of `frob`.
fn equal_degree(h: &FpPoly, d: usize, frob: &Frobenius, rng: &mut ChaCha8Rng, out: &mut Vec<FpPoly>) {
    let n = h.deg();
    if n == d {
        out.push(h.monic());
        return;
    }
    let p = h.p;
    let top = &frob.modulus;
    let half = BigUint::from((p - 1) / 2);
    loop {
        let a = FpPoly::from_raw(p, (0..n).map(|_| rng.gen_range(0..p)).collect());
        if a.deg() == 0 {
            continue;
        }
        let b = if p == 2 {
            let mut t = a.clone();
            let mut acc = a.clone();
            for _ in 1..d {
                t = t.mul(&t).rem(top);
                acc = acc.add(&t);
            }
            acc.rem(h)
        } else {
            let mut t = a.clone();
            let mut norm = a.clone();
            for _ in 1..d {
                t = frob.apply(&t);
                norm = norm.mul(&t).rem(top);
            }
            norm.rem(h).pow_mod(&half, h).sub(&FpPoly::constant(p, 1))
        };
        let g = gcd_raw(h, &b);
        if g.deg() > 0 && g.deg() < n {
            let q = h.div_rem(&g).0;
            equal_degree(&g, d, frob, rng, out);
            equal_degree(&q, d, frob, rng, out);
            return;
        }
    }
}

fn sort_key(f: &FpPoly) -> (usize, Vec<u64>) {
    (f.deg(), f.coeffs.iter().rev().copied().collect())
}

/// Complete factorization into monic irreducibles, sorted by degree then by
/// coefficients from the top down.
pub fn factor_mod(f: &FpPoly) -> FpFactorization {
    assert!(!f.is_zero(), "factor_mod of the zero polynomial");
    let unit = f.leading();
    let monic = f.monic();
    let mut rng = ChaCha8Rng::seed_from_u64(seed_for(&monic));
    let mut factors: Vec<(FpPoly, u32)> = Vec::new();
    for (part, e) in squarefree_parts(&monic) {
        for (block, d) in distinct_degree(&part) {
            let mut found = Vec::new();
            if block.deg() == d {
                found.push(block);
            } else {
                let frob = Frobenius::new(&block);
                equal_degree(&block, d, &frob, &mut rng, &mut found);
            }
            factors.extend(found.into_iter().map(|g| (g, e)));
        }
    }
    factors.sort_by_key(|(g, _)| sort_key(g));
    let mut merged: Vec<(FpPoly, u32)> = Vec::new();
    for (g, e) in factors {
        match merged.last_mut() {
            Some((h, k)) if *h == g => *k += e,
            _ => merged.push((g, e)),
        }
    }
    FpFactorization { unit, factors: merged }
}

/// Irreducible factors of `f` equal to their monic reciprocal, linear ones included.
pub fn symmetric_irreducible_factors(f: &FpPoly) -> Result<Vec<FpPoly>> {
    symmetric_irreducible_factors_with(f, true)
}

/// As [`symmetric_irreducible_factors`]; `include_linear = false` drops `X + 1` and `X - 1`.
pub fn symmetric_irreducible_factors_with(f: &FpPoly, include_linear: bool) -> Result<Vec<FpPoly>> {
    if f.coeffs.first().copied().unwrap_or(0) == 0 {
        return Err(Error::ZeroConstantTerm);
    }
    Ok(factor_mod(f)
        .factors
        .into_iter()
        .map(|(g, _)| g)
        .filter(|g| g.is_self_reciprocal() && (include_linear || g.deg() >= 2))
        .collect())
}

/// Common self-reciprocal irreducible factors of `f` and `g` modulo `prime`,
/// counting `X + 1` and `X - 1`.
pub fn common_symmetric_factors(f: &IntPoly, g: &IntPoly, prime: u64) -> Result<Vec<FpPoly>> {
    let a = reduce_mod(f, prime)?;
    let b = reduce_mod(g, prime)?;
    let h = gcd_raw(&a, &b);
    if h.deg() == 0 {
        return Ok(Vec::new());
    }
    symmetric_irreducible_factors(&h)
}

/// True iff `f` and `g` share a self-reciprocal irreducible factor modulo `prime`.
pub fn has_common_symmetric_factor(f: &IntPoly, g: &IntPoly, prime: u64) -> Result<bool> {
    Ok(!common_symmetric_factors(f, g, prime)?.is_empty())
}

/// True iff `-1` lies in the subgroup of `(Z/mZ)^*` generated by `p`.
/// `p = 2` is accepted as a plain group computation.
pub fn subgroup_contains_minus_one(m: u64, p: u64) -> Result<bool> {
    if m < 3 || m % 2 == 0 || !is_prime_u64(p) || m.gcd(&p) != 1 {
        return Err(Error::BadInput(format!("need odd m >= 3 and a prime p coprime to m, got m = {m}, p = {p}")));
    }
    let g = p % m;
    let mut x = g;
    while x != 1 {
        if x == m - 1 {
            return Ok(true);
        }
        x = arith::mul_mod(x, g, m);
    }
    Ok(false)
}

/// Legendre symbol `(a / p)` by Euler's criterion.
pub fn legendre(a: &BigInt, p: u64) -> Result<i8> {
    if p == 2 || !is_prime_u64(p) {
        return Err(Error::NotOddPrime(p));
    }
    let r = a.mod_floor(&BigInt::from(p)).to_u64().expect("residue fits");
    if r == 0 {
        return Ok(0);
    }
    Ok(if arith::pow_mod(r, (p - 1) / 2, p) == 1 { 1 } else { -1 })
}

/// Irreducibility check by gcd with `X^(p^d) - X` for every `d <= deg / 2`.
pub fn is_irreducible(f: &FpPoly) -> bool {
    let n = f.deg();
    if n == 0 {
        return false;
    }
    let frob = Frobenius::new(f);
    let x = FpPoly::x(f.p);
    let mut xpi = x.clone().rem(f);
    for _ in 1..=n / 2 {
        xpi = frob.apply(&xpi);
        if gcd_raw(f, &xpi.sub(&x)).deg() > 0 {
            return false;
        }
    }
    true
}

/// Product of the factorization, used to check reconstruction.
pub fn expand(fac: &FpFactorization, p: u64) -> FpPoly {
    let mut acc = FpPoly::constant(p, fac.unit);
    for (g, e) in &fac.factors {
        for _ in 0..*e {
            acc = acc.mul(g);
        }
    }
    acc
}

impl FpFactorization {
    /// Distinct irreducible factors, dropping multiplicities.
    pub fn distinct(&self) -> impl Iterator<Item = &FpPoly> {
        self.factors.iter().map(|(g, _)| g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::intpoly::cyclotomic;

    fn fp(p: u64, c: &[u64]) -> FpPoly {
        FpPoly::new(p, c.to_vec()).unwrap()
    }

    #[test]
    fn reduction() {
        let f = reduce_mod(&cyclotomic(14), 13).unwrap();
        assert_eq!(f.coeffs(), &[1, 12, 1, 12, 1, 12, 1]);
        let g = reduce_mod(&IntPoly::from_i64s(&[-14, 1]), 7).unwrap();
        assert_eq!(g.coeffs(), &[0, 1]);
        assert_eq!(reduce_mod(&cyclotomic(3), 9), Err(Error::NotPrime(9)));
    }

    #[test]
    fn gcd_basics() {
        let f = fp(7, &[3, 0, 2]);
        let z = fp(7, &[]);
        assert_eq!(gcd_mod(&f, &z).unwrap(), f.monic());
        assert_eq!(gcd_mod(&fp(7, &[1, 1]), &fp(7, &[2, 1])).unwrap(), fp(7, &[1]));
        assert_eq!(gcd_mod(&fp(7, &[1]), &fp(5, &[1])), Err(Error::ModulusMismatch(7, 5)));
    }

    #[test]
    fn factor_square() {
        let fac = factor_mod(&fp(5, &[0, 0, 1]));
        assert_eq!(fac.factors, vec![(fp(5, &[0, 1]), 2)]);
    }

    #[test]
    fn factor_pth_powers() {
        // (X^2 + X + 1)^9 over F_3 = (X - 1)^18
        let base = fp(3, &[1, 1, 1]);
        let mut f = fp(3, &[1]);
        for _ in 0..9 {
            f = f.mul(&base);
        }
        let fac = factor_mod(&f);
        assert_eq!(fac.factors, vec![(fp(3, &[2, 1]), 18)]);
    }

    #[test]
    fn cyclotomic_mod_two() {
        // Phi_21 mod 2: ord_21(2) = 6, so two sextic factors
        let fac = factor_mod(&reduce_mod(&cyclotomic(21), 2).unwrap());
        assert_eq!(fac.factors.len(), 2);
        assert!(fac.factors.iter().all(|(g, e)| g.deg() == 6 && *e == 1 && is_irreducible(g)));
        assert_eq!(expand(&fac, 2), reduce_mod(&cyclotomic(21), 2).unwrap());
    }

    #[test]
    fn self_reciprocal() {
        assert!(fp(13, &[1, 7, 1]).is_self_reciprocal());
        assert!(fp(13, &[1, 1]).is_self_reciprocal());
        assert!(!fp(13, &[2, 1]).is_self_reciprocal());
        // X^2 + X + 2 is irreducible over F_5 and not palindromic
        let q = fp(5, &[2, 1, 1]);
        assert!(is_irreducible(&q));
        assert!(symmetric_irreducible_factors(&q).unwrap().is_empty());
        assert_eq!(symmetric_irreducible_factors(&fp(5, &[0, 1])), Err(Error::ZeroConstantTerm));
    }

    #[test]
    fn linear_flag() {
        let f = reduce_mod(&cyclotomic(14), 7).unwrap();
        assert_eq!(symmetric_irreducible_factors(&f).unwrap(), vec![fp(7, &[1, 1])]);
        assert!(symmetric_irreducible_factors_with(&f, false).unwrap().is_empty());
    }

    #[test]
    fn subgroup_minus_one() {
        assert!(subgroup_contains_minus_one(7, 13).unwrap());
        assert!(!subgroup_contains_minus_one(7, 2).unwrap());
        assert!(subgroup_contains_minus_one(8, 3).is_err());
        assert!(!subgroup_contains_minus_one(7, 11).unwrap());
        assert!(subgroup_contains_minus_one(21, 7).is_err());
    }

    #[test]
    fn legendre_values() {
        assert_eq!(legendre(&BigInt::from(3), 7).unwrap(), -1);
        assert_eq!(legendre(&BigInt::from(0), 7).unwrap(), 0);
        assert_eq!(legendre(&BigInt::from(11), 7).unwrap(), 1);
        assert_eq!(legendre(&BigInt::from(-1), 7).unwrap(), -1);
        assert_eq!(legendre(&BigInt::from(3), 2), Err(Error::NotOddPrime(2)));
    }

    #[test]
    fn deterministic_output() {
        let f = reduce_mod(&cyclotomic(105), 29).unwrap();
        assert_eq!(factor_mod(&f), factor_mod(&f));
    }

    #[test]
    fn large_prime_modulus() {
        let p = 18_446_744_073_709_551_557u64;
        let f = reduce_mod(&(&IntPoly::from_i64s(&[-3, 1]) * &IntPoly::from_i64s(&[1, 0, 1])), p).unwrap();
        let fac = factor_mod(&f);
        assert_eq!(expand(&fac, p), f);
        assert!(fac.factors.iter().all(|(g, _)| is_irreducible(g)));
    }
}
