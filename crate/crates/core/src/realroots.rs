//! Exact counting of roots off the unit circle through the trace polynomial
//! `f(x) = x^n g(x + 1/x)` and integer Sturm chains.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::intpoly::IntPoly;

/// The trace polynomial `g` of a symmetric polynomial `f` of degree `2n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TracePoly {
    pub g: IntPoly,
    pub source: IntPoly,
}

/// Sturm chain with integer coefficients; consecutive members follow the
/// negated-remainder recurrence up to positive factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SturmChain {
    pub polys: Vec<IntPoly>,
}

/// Computes `g` with `f(x) = x^n g(x + 1/x)` using `x^k + x^-k = T_k(x + 1/x)`,
/// `T_0 = 2`, `T_1 = Y`, `T_(k+1) = Y T_k - T_(k-1)`.
pub fn trace_polynomial(f: &IntPoly) -> Result<TracePoly> {
    if !f.is_symmetric() || f.leading().is_negative() {
        return Err(Error::NotSymmetric);
    }
    let n = f.deg() / 2;
    let y = IntPoly::x();
    let mut g = IntPoly::constant(f.coeff(n));
    let mut t_prev = IntPoly::constant(BigInt::from(2));
    let mut t_cur = y.clone();
    for k in 1..=n {
        g = &g + &t_cur.scale(&f.coeff(n + k));
        let next = &(&y * &t_cur) - &t_prev;
        t_prev = t_cur;
        t_cur = next;
    }
    let tp = TracePoly { g, source: f.clone() };
    if expand_trace(&tp.g, n) != *f {
        return Err(Error::NotSymmetric);
    }
    Ok(tp)
}

/// Expands `x^n g(x + 1/x)` back to a polynomial in `x`.
pub fn expand_trace(g: &IntPoly, n: usize) -> IntPoly {
    // (x^2 + 1)^k x^(n - k) for each coefficient of Y^k
    let x2p1 = IntPoly::from_i64s(&[1, 0, 1]);
    let mut out = IntPoly::zero();
    let mut pw = IntPoly::one();
    for k in 0..=g.deg().min(n) {
        if k > 0 {
            pw = &pw * &x2p1;
        }
        let c = g.coeff(k);
        if !c.is_zero() {
            let shifted = &pw * &IntPoly::monomial(c, n - k);
            out = &out + &shifted;
        }
    }
    out
}

impl SturmChain {
    /// Chain of a squarefree polynomial `g`.
    pub fn new(g: &IntPoly) -> Self {
        let mut polys = vec![g.clone()];
        let d = g.derivative();
        if d.is_zero() {
            return SturmChain { polys };
        }
        polys.push(d);
        loop {
            let n = polys.len();
            let (a, b) = (&polys[n - 2], &polys[n - 1]);
            let r = a.pseudo_rem(b).expect("nonzero divisor");
            if r.is_zero() {
                break;
            }
            let delta = a.deg() - b.deg();
            let factor_positive = !b.leading().is_negative() || (delta + 1) % 2 == 0;
            let next = if factor_positive { -&r } else { r };
            let c = next.content();
            polys.push(IntPoly::new(next.coeffs().iter().map(|x| x / &c).collect()));
        }
        SturmChain { polys }
    }

    /// Sign changes of the chain at the rational point `x`, zeros skipped.
    pub fn variations(&self, x: &BigRational) -> usize {
        let (u, v) = (x.numer(), x.denom());
        let mut last = 0i8;
        let mut count = 0;
        for p in &self.polys {
            let val = p.eval_homogeneous(u, v);
            let s = if val.is_positive() {
                1
            } else if val.is_negative() {
                -1
            } else {
                0
            };
            if s != 0 {
                if last != 0 && s != last {
                    count += 1;
                }
                last = s;
            }
        }
        count
    }
}

/// Number of distinct real roots of `g` in `(a, b]`; `g` is replaced by its
/// squarefree part first.
pub fn sturm_count_interval(g: &IntPoly, a: &BigRational, b: &BigRational) -> usize {
    if g.deg() == 0 || a >= b {
        return 0;
    }
    let sqf = squarefree_part(g);
    let chain = SturmChain::new(&sqf);
    chain.variations(a) - chain.variations(b)
}

fn squarefree_part(g: &IntPoly) -> IntPoly {
    let g = g.primitive_part();
    g.div_exact(&g.gcd(&g.derivative())).expect("gcd divides")
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Number of roots `z` of a symmetric `f` with `|z| > 1`, with multiplicity.
pub fn m_of_factor(f: &IntPoly) -> Result<usize> {
    let tp = trace_polynomial(f)?;
    let n = f.deg() / 2;
    if tp.g.eval_i64(2).is_zero() || tp.g.eval_i64(-2).is_zero() {
        return Err(Error::BoundaryRoot);
    }
    let (lo, hi) = (rat(-2), rat(2));
    let inside: usize = tp
        .g
        .squarefree_decomposition()
        .iter()
        .map(|(h, k)| k * sturm_count_interval(h, &lo, &hi))
        .sum();
    Ok(n - inside)
}

/// Number of conjugate root pairs of `f` on the unit circle.
pub fn unit_circle_pairs(f: &IntPoly) -> Result<usize> {
    Ok(f.deg() / 2 - m_of_factor(f)?)
}

/// Convenience for rational endpoints `num / den`.
pub fn rational(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::intpoly::cyclotomic;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn trace_examples() {
        assert_eq!(trace_polynomial(&p(&[1, 7, 1])).unwrap().g, p(&[7, 1]));
        assert_eq!(trace_polynomial(&cyclotomic(12)).unwrap().g, p(&[-3, 0, 1]));
        assert_eq!(trace_polynomial(&cyclotomic(7)).unwrap().g, p(&[-1, -2, 1, 1]));
        assert_eq!(trace_polynomial(&p(&[1, 2])), Err(Error::NotSymmetric));
    }

    #[test]
    fn sturm_examples() {
        let (a, b) = (rat(-2), rat(2));
        assert_eq!(sturm_count_interval(&p(&[-3, 0, 1]), &a, &b), 2);
        assert_eq!(sturm_count_interval(&p(&[-3, 1]), &a, &b), 0);
        assert_eq!(sturm_count_interval(&p(&[-5, 0, 1]), &a, &b), 0);
        // endpoints: Y^2 - 4 has roots -2 (excluded) and 2 (included)
        assert_eq!(sturm_count_interval(&p(&[-4, 0, 1]), &a, &b), 1);
        assert_eq!(sturm_count_interval(&(&p(&[-3, 0, 1]) * &p(&[-3, 0, 1])), &a, &b), 2);
    }

    #[test]
    fn m_examples() {
        assert_eq!(m_of_factor(&p(&[1, -3, 1])).unwrap(), 1);
        assert_eq!(m_of_factor(&cyclotomic(7)).unwrap(), 0);
        assert_eq!(unit_circle_pairs(&cyclotomic(21)).unwrap(), 6);
        assert_eq!(unit_circle_pairs(&cyclotomic(147)).unwrap(), 42);
        // (X - 1)^2 gives g = Y - 2
        assert_eq!(m_of_factor(&p(&[1, -2, 1])), Err(Error::BoundaryRoot));
    }
}
