//! Dense univariate polynomials over the integers.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith;
use crate::error::{Error, Result};

/// Polynomial with arbitrary-precision integer coefficients; `coeffs[k]` is
/// the coefficient of `X^k`. The zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    /// Builds a polynomial from ascending coefficients, trimming trailing zeros.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial `X`.
    pub fn x() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    /// `c * X^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `X^k`, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    /// Exact evaluation by Horner's rule.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_i64(&self, x: i64) -> BigInt {
        self.eval(&BigInt::from(x))
    }

    /// `v^d * p(u / v)` with `d = deg p`; same sign as `p(u/v)` when `v > 0`.
    pub fn eval_homogeneous(&self, u: &BigInt, v: &BigInt) -> BigInt {
        let Some(d) = self.degree() else {
            return BigInt::zero();
        };
        let mut vpow = vec![BigInt::one(); d + 1];
        for k in 1..=d {
            vpow[k] = &vpow[k - 1] * v;
        }
        let mut acc = self.coeffs[d].clone();
        for k in (0..d).rev() {
            acc = acc * u + &self.coeffs[k] * &vpow[d - k];
        }
        acc
    }

    /// `X^deg * p(1/X)`, i.e. the reversed coefficient sequence.
    pub fn reciprocal(&self) -> Result<IntPoly> {
        match self.coeffs.first() {
            Some(c) if !c.is_zero() => Ok(IntPoly::new(self.coeffs.iter().rev().cloned().collect())),
            _ => Err(Error::ZeroConstantTerm),
        }
    }

    /// Nonzero, even degree and palindromic.
    pub fn is_symmetric(&self) -> bool {
        match self.degree() {
            Some(d) if d % 2 == 0 => {
                !self.coeffs[0].is_zero() && (0..=d / 2).all(|k| self.coeffs[k] == self.coeffs[d - k])
            }
            _ => false,
        }
    }

    pub fn derivative(&self) -> IntPoly {
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigInt::from(k))
                .collect(),
        )
    }

    /// Nonnegative gcd of the coefficients.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// `self / content`, normalized to a positive leading coefficient.
    pub fn primitive_part(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut c = self.content();
        if self.leading().is_negative() {
            c = -c;
        }
        IntPoly::new(self.coeffs.iter().map(|x| x / &c).collect())
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn pow(&self, e: u32) -> IntPoly {
        let mut r = IntPoly::one();
        let mut b = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                r = &r * &b;
            }
            e >>= 1;
            if e > 0 {
                b = &b * &b;
            }
        }
        r
    }

    /// `p(X^k)`.
    pub fn compose_power(&self, k: usize) -> IntPoly {
        if self.is_zero() || k == 0 {
            return IntPoly::constant(self.coeffs.iter().sum());
        }
        let mut coeffs = vec![BigInt::zero(); self.deg() * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c.clone();
        }
        IntPoly::new(coeffs)
    }

    /// `p(-X)`.
    pub fn negate_variable(&self) -> IntPoly {
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// Quotient when `d` divides `self` in `Z[X]`, else `None`.
    pub fn div_exact(&self, d: &IntPoly) -> Option<IntPoly> {
        let dd = d.degree()?;
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        let n = self.deg();
        if n < dd {
            return None;
        }
        let lc = d.leading();
        let mut rem = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); n - dd + 1];
        for k in (0..=n - dd).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let (c, r) = top.div_rem(&lc);
            if !r.is_zero() {
                return None;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                if !dc.is_zero() {
                    rem[k + j] -= &c * dc;
                }
            }
            q[k] = c;
        }
        rem.iter().all(|c| c.is_zero()).then(|| IntPoly::new(q))
    }

    /// Pseudo-remainder: `lc(d)^(deg self - deg d + 1) * self mod d`.
    pub fn pseudo_rem(&self, d: &IntPoly) -> Result<IntPoly> {
        let dd = d.degree().ok_or(Error::ZeroPolynomial)?;
        let Some(n) = self.degree() else {
            return Ok(IntPoly::zero());
        };
        if n < dd {
            return Ok(self.clone());
        }
        let lc = d.leading();
        let mut rem = self.coeffs.clone();
        let mut extra = n - dd + 1;
        for k in (0..=n - dd).rev() {
            let top = rem[k + dd].clone();
            for c in rem.iter_mut().take(k + dd + 1) {
                *c *= &lc;
            }
            extra -= 1;
            if !top.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    rem[k + j] -= &top * dc;
                }
            }
            rem.truncate(k + dd);
        }
        debug_assert_eq!(extra, 0);
        Ok(IntPoly::new(rem))
    }

    /// Primitive gcd over the rationals with positive leading coefficient.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.deg() < b.deg() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).expect("nonzero divisor");
            a = b;
            b = r.primitive_part();
        }
        a.primitive_part()
    }

    /// True iff `gcd(p, p')` over the rationals is constant.
    pub fn squarefree_check(&self) -> bool {
        !self.is_zero() && self.gcd(&self.derivative()).deg() == 0
    }

    /// Yun's squarefree decomposition of the primitive part: pairs `(g_k, k)`
    /// with `p = c * prod g_k^k`, each `g_k` primitive, squarefree and nonconstant.
    pub fn squarefree_decomposition(&self) -> Vec<(IntPoly, usize)> {
        let f = self.primitive_part();
        if f.deg() == 0 {
            return Vec::new();
        }
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.div_exact(&a0).expect("gcd divides");
        let c = df.div_exact(&a0).expect("gcd divides derivative");
        let mut d = &c - &b.derivative();
        let mut out = Vec::new();
        let mut k = 1;
        while b.deg() > 0 {
            let a = b.gcd(&d);
            let nb = b.div_exact(&a).expect("gcd divides");
            let nc = d.div_exact(&a).expect("gcd divides");
            if a.deg() > 0 {
                out.push((a, k));
            }
            d = &nc - &nb.derivative();
            b = nb;
            k += 1;
        }
        out
    }

    /// Exact resultant by the subresultant remainder sequence.
    pub fn resultant(&self, other: &IntPoly) -> Result<BigInt> {
        if self.is_zero() || other.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        let mut s = BigInt::one();
        if a.deg() < b.deg() {
            std::mem::swap(&mut a, &mut b);
            if a.deg() % 2 == 1 && b.deg() % 2 == 1 {
                s = -s;
            }
        }
        if b.deg() == 0 {
            return Ok(s * Pow::pow(&b.leading(), a.deg()));
        }
        let (ca, cb) = (a.content(), b.content());
        let t = Pow::pow(&ca, b.deg()) * Pow::pow(&cb, a.deg());
        a = a.primitive_part().scale(&sign_of(&a.leading()));
        b = b.primitive_part().scale(&sign_of(&b.leading()));
        let mut g = BigInt::one();
        let mut h = BigInt::one();
        loop {
            let delta = a.deg() - b.deg();
            if a.deg() % 2 == 1 && b.deg() % 2 == 1 {
                s = -s;
            }
            let r = a.pseudo_rem(&b)?;
            a = b;
            if r.is_zero() {
                return Ok(BigInt::zero());
            }
            let den = &g * Pow::pow(&h, delta);
            b = IntPoly::new(r.coeffs.iter().map(|c| c / &den).collect());
            g = a.leading();
            h = if delta == 0 {
                h
            } else {
                Pow::pow(&g, delta) / Pow::pow(&h, delta - 1)
            };
            if b.deg() == 0 {
                break;
            }
        }
        let da = a.deg();
        let hh = Pow::pow(&b.leading(), da) / Pow::pow(&h, da - 1);
        Ok(s * t * hh)
    }

    /// Human-readable form such as `X^2 + 7*X + 1`.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for k in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[k];
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match k {
                0 => String::new(),
                1 => "X".into(),
                _ => format!("X^{k}"),
            };
            if mono.is_empty() {
                out.push_str(&a.to_string());
            } else if a.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{a}*{mono}"));
            }
        }
        out
    }
}

fn sign_of(x: &BigInt) -> BigInt {
    match x.sign() {
        Sign::Minus => -BigInt::one(),
        _ => BigInt::one(),
    }
}

trait Pow {
    fn pow(&self, e: usize) -> BigInt;
}

impl Pow for BigInt {
    fn pow(&self, e: usize) -> BigInt {
        num_traits::pow::pow(self.clone(), e)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        IntPoly::new(out)
    }
}

impl<'a> std::iter::Product<&'a IntPoly> for IntPoly {
    fn product<I: Iterator<Item = &'a IntPoly>>(iter: I) -> IntPoly {
        iter.fold(IntPoly::one(), |acc, p| &acc * p)
    }
}

impl std::iter::Product<IntPoly> for IntPoly {
    fn product<I: Iterator<Item = IntPoly>>(iter: I) -> IntPoly {
        iter.fold(IntPoly::one(), |acc, p| &acc * &p)
    }
}

/// True iff `n >= 0` and `n` is the square of an integer (Newton square root).
pub fn is_perfect_square(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let r = n.sqrt();
    &r * &r == *n
}

/// The cyclotomic polynomial `Phi_m`.
///
/// Built from `Phi_1 = X - 1` by `Phi_{np}(X) = Phi_n(X^p) / Phi_n(X)` over the
/// primes `p | m` (exact division), then `Phi_m(X) = Phi_rad(X^(m/rad))`.
pub fn cyclotomic(m: u64) -> IntPoly {
    assert!(m >= 1, "cyclotomic index must be positive");
    let mut phi = IntPoly::from_i64s(&[-1, 1]);
    let mut rad = 1u64;
    for (p, _) in arith::factor_u64(m) {
        let lifted = phi.compose_power(p as usize);
        phi = lifted.div_exact(&phi).expect("Phi_n divides Phi_n(X^p)");
        rad *= p;
    }
    phi.compose_power((m / rad) as usize)
}

/// Searches `m` with `Phi_m = p`; candidates satisfy `phi(m) = deg p <= 2 deg^2`.
pub fn cyclotomic_index(p: &IntPoly) -> Option<u64> {
    let d = p.degree()? as u64;
    if !p.is_monic() || d == 0 {
        return None;
    }
    let bound = 2 * d * d + 6;
    (1..=bound)
        .filter(|&m| arith::euler_phi(m) == d)
        .find(|&m| cyclotomic(m) == *p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn trims_and_degrees() {
        assert_eq!(p(&[1, 2, 0, 0]).degree(), Some(1));
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(IntPoly::zero().eval_i64(5), BigInt::zero());
    }

    #[test]
    fn reciprocal_and_symmetry() {
        assert_eq!(p(&[5, -3, 1]).reciprocal().unwrap(), p(&[1, -3, 5]));
        assert_eq!(p(&[1, 7, 1]).reciprocal().unwrap(), p(&[1, 7, 1]));
        assert_eq!(p(&[0, 1, 1]).reciprocal(), Err(Error::ZeroConstantTerm));
        assert!(!p(&[-1, 1]).is_symmetric());
        assert!(!p(&[0, 1, 1]).is_symmetric());
        assert_eq!(cyclotomic(14).reciprocal().unwrap(), cyclotomic(14));
    }

    #[test]
    fn cyclotomic_small() {
        assert_eq!(cyclotomic(1), p(&[-1, 1]));
        assert_eq!(cyclotomic(2), p(&[1, 1]));
        assert_eq!(cyclotomic(14), p(&[1, -1, 1, -1, 1, -1, 1]));
        assert_eq!(cyclotomic(12), p(&[1, 0, -1, 0, 1]));
        assert_eq!(cyclotomic(147).degree(), Some(84));
        assert_eq!(cyclotomic(147), cyclotomic(21).compose_power(7));
    }

    #[test]
    fn cyclotomic_index_recovers() {
        for m in [3u64, 7, 12, 14, 21, 30, 105] {
            assert_eq!(cyclotomic_index(&cyclotomic(m)), Some(m));
        }
        assert_eq!(cyclotomic_index(&p(&[1, 7, 1])), None);
    }

    #[test]
    fn division_and_gcd() {
        let a = p(&[1, 1, 1]);
        let sq = &a * &a;
        assert_eq!(sq.div_exact(&a), Some(a.clone()));
        assert_eq!(sq.div_exact(&p(&[1, 1])), None);
        assert_eq!(sq.gcd(&sq.derivative()), a);
        assert!(!sq.squarefree_check());
        assert!(cyclotomic(21).squarefree_check());
        let dec = (&sq * &p(&[-2, 1])).squarefree_decomposition();
        assert_eq!(dec, vec![(p(&[-2, 1]), 1), (a, 2)]);
    }

    #[test]
    fn perfect_squares() {
        assert!(is_perfect_square(&BigInt::from(49)));
        assert!(is_perfect_square(&BigInt::from(0)));
        assert!(is_perfect_square(&BigInt::from(169)));
        assert!(!is_perfect_square(&BigInt::from(168)));
        assert!(!is_perfect_square(&BigInt::from(-1)));
    }

    #[test]
    fn resultant_small() {
        // Res(X - a, X - b) = a - b with the convention prod f(beta) * (-1)^...
        assert_eq!(p(&[-2, 1]).resultant(&p(&[-5, 1])).unwrap(), BigInt::from(-3));
        assert_eq!(p(&[1, 0, 1]).resultant(&p(&[-1, 1])).unwrap(), BigInt::from(2));
        assert_eq!(p(&[3]).resultant(&p(&[1, 0, 1])).unwrap(), BigInt::from(9));
        assert_eq!(cyclotomic(3).resultant(&cyclotomic(6)).unwrap(), BigInt::from(4));
        assert_eq!(cyclotomic(3).resultant(&(&cyclotomic(3) * &cyclotomic(5))).unwrap(), BigInt::zero());
    }

    #[test]
    fn text_form() {
        assert_eq!(p(&[1, 7, 1]).to_text(), "X^2 + 7*X + 1");
        assert_eq!(p(&[-1, 0, -3]).to_text(), "-3*X^2 - 1");
        assert_eq!(IntPoly::zero().to_text(), "0");
    }
}
