//! Independent oracles shared by the integration tests.

#![allow(dead_code)]

use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use rand::Rng;
use unimod_core::IntPoly;

/// Determinant of the Sylvester matrix by fraction-free elimination.
pub fn sylvester_resultant(f: &IntPoly, g: &IntPoly) -> BigInt {
    let m = f.deg();
    let n = g.deg();
    let size = m + n;
    let mut a = vec![vec![BigInt::zero(); size]; size];
    for row in 0..n {
        for k in 0..=m {
            a[row][row + k] = f.coeff(m - k);
        }
    }
    for row in 0..m {
        for k in 0..=n {
            a[n + row][row + k] = g.coeff(n - k);
        }
    }
    bareiss(a)
}

fn bareiss(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    let mut sign = 1;
    let mut prev = BigInt::from(1);
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    a[n - 1][n - 1].clone() * sign
}

/// Legendre symbol by listing the squares modulo `p`.
pub fn legendre_by_squares(a: i64, p: u64) -> i8 {
    let r = a.rem_euclid(p as i64) as u64;
    if r == 0 {
        return 0;
    }
    if (1..p).any(|x| x * x % p == r) {
        1
    } else {
        -1
    }
}

/// Whether the powers of `p` modulo `m` reach `m - 1`, by listing them.
pub fn powers_reach_minus_one(m: u64, p: u64) -> bool {
    let mut seen = Vec::new();
    let mut x = p % m;
    while !seen.contains(&x) {
        seen.push(x);
        x = x * (p % m) % m;
    }
    seen.contains(&(m - 1))
}

/// Whether monic `c` (ascending, over `F_p`) equals its monic reciprocal.
pub fn fp_self_reciprocal(c: &[u64], p: u64) -> bool {
    let d = c.len() - 1;
    let c0 = c[0];
    c0 != 0 && (0..=d).all(|i| (c[d - i] as u128 * c0 as u128 % p as u128) as u64 == c[i] % p)
}

/// Roots of modulus greater than one, from the eigenvalues of the companion
/// matrix. `None` when some root lies too close to the unit circle to tell.
pub fn companion_m(f: &IntPoly) -> Option<usize> {
    let n = f.deg();
    let mut c = DMatrix::<f64>::zeros(n, n);
    for i in 1..n {
        c[(i, i - 1)] = 1.0;
    }
    for i in 0..n {
        c[(i, n - 1)] = -f.coeff(i).to_f64().unwrap();
    }
    let mut count = 0;
    for z in c.complex_eigenvalues().iter() {
        let r = z.norm();
        let d = (r - 1.0).abs();
        if d > 1e-7 && d < 1e-3 {
            return None;
        }
        if r > 1.0 + 1e-3 {
            count += 1;
        }
    }
    Some(count)
}

/// Random monic palindromic polynomial of degree `2n` with small coefficients.
pub fn random_palindromic<R: Rng>(rng: &mut R, n: usize) -> IntPoly {
    let mut c = vec![0i64; 2 * n + 1];
    c[0] = 1;
    c[2 * n] = 1;
    for i in 1..=n {
        let v = rng.gen_range(-6..=6);
        c[i] = v;
        c[2 * n - i] = v;
    }
    IntPoly::from_i64s(&c)
}

/// Signature of the `(p, q)` torus knot and its negative pairs split by the
/// order of the corresponding root of unity.
pub fn torus_signature(p: u64, q: u64) -> (i64, Vec<(u64, usize)>) {
    let mut sigma = 0i64;
    let mut neg: std::collections::BTreeMap<u64, usize> = Default::default();
    for i in 1..p {
        for j in 1..q {
            let num = i * q + j * p;
            let den = p * q;
            let order = den / num.gcd(&den);
            if 2 * num > den && 2 * num < 3 * den {
                sigma -= 1;
                *neg.entry(order).or_default() += 1;
            } else {
                sigma += 1;
            }
        }
    }
    (sigma, neg.into_iter().map(|(d, k)| (d, k / 2)).collect())
}
