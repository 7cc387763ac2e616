//! Elementary number theory on machine integers and big naturals: primality,
//! integer factorization, Euler's totient and multiplicative orders.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

const MR_BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Default bound for trial division in [`prime_divisors`].
pub const DEFAULT_TRIAL_LIMIT: u64 = 1_000_000;
/// Default iteration budget per Pollard rho attempt.
pub const DEFAULT_RHO_ROUNDS: u64 = 200_000;

pub(crate) fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    r
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &MR_BASES {
        if n % p == 0 {
            return n == p;
        }
    }
    let d_shift = (n - 1).trailing_zeros();
    let d = (n - 1) >> d_shift;
    'base: for &a in &MR_BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..d_shift {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'base;
            }
        }
        return false;
    }
    true
}

/// Miller-Rabin on big naturals with the first twelve primes as bases.
/// Deterministic below 3.3e24, probabilistic beyond.
pub fn is_probable_prime(n: &BigUint) -> bool {
    if let Some(small) = n.to_u64() {
        return is_prime_u64(small);
    }
    let one = BigUint::one();
    let n1 = n - &one;
    let s = n1.trailing_zeros().unwrap_or(0);
    let d = &n1 >> s;
    'base: for &a in &MR_BASES {
        let a = BigUint::from(a);
        if (n % &a).is_zero() {
            return false;
        }
        let mut x = a.modpow(&d, n);
        if x == one || x == n1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n1 {
                continue 'base;
            }
        }
        return false;
    }
    true
}

/// Prime factorization of a machine integer by trial division.
pub fn factor_u64(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Euler's totient.
pub fn euler_phi(m: u64) -> u64 {
    factor_u64(m)
        .iter()
        .fold(m, |acc, &(p, _)| acc / p * (p - 1))
}

/// Positive divisors in increasing order.
pub fn divisors(m: u64) -> Vec<u64> {
    let mut ds = vec![1u64];
    for (p, e) in factor_u64(m) {
        let cur = ds.clone();
        let mut pk = 1;
        for _ in 0..e {
            pk *= p;
            ds.extend(cur.iter().map(|d| d * pk));
        }
    }
    ds.sort_unstable();
    ds
}

/// Product of the distinct primes dividing `m`.
pub fn radical(m: u64) -> u64 {
    factor_u64(m).iter().map(|&(p, _)| p).product()
}

/// If `n = p^k` with `p` prime and `k >= 1`, returns `p`.
pub fn prime_power_base(n: u64) -> Option<u64> {
    match factor_u64(n).as_slice() {
        [(p, _)] => Some(*p),
        _ => None,
    }
}

/// Order of `a` in `(Z/mZ)^*`; `None` when `gcd(a, m) != 1`.
pub fn multiplicative_order(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(1);
    }
    if a.gcd(&m) != 1 {
        return None;
    }
    let mut x = a % m;
    let mut k = 1;
    while x != 1 {
        x = mul_mod(x, a, m);
        k += 1;
    }
    Some(k)
}

/// Distinct prime divisors of a natural number.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeDivisors {
    /// Primes found, increasing.
    pub primes: Vec<BigUint>,
    /// A composite cofactor that resisted factorization.
    pub unresolved: Option<BigUint>,
}

/// Distinct prime divisors of `n > 0` by trial division up to `trial_limit`
/// followed by Pollard rho (Brent) with `rho_rounds` iterations per attempt.
pub fn prime_divisors(n: &BigUint, trial_limit: u64, rho_rounds: u64) -> PrimeDivisors {
    let mut primes = Vec::new();
    let mut rest = n.clone();
    if rest.is_zero() {
        return PrimeDivisors { primes, unresolved: None };
    }
    let mut d = 2u64;
    while d <= trial_limit && !rest.is_one() {
        let db = BigUint::from(d);
        if &db * &db > rest {
            break;
        }
        if (&rest % &db).is_zero() {
            primes.push(db.clone());
            while (&rest % &db).is_zero() {
                rest /= &db;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    let mut unresolved = None;
    let mut stack = vec![rest];
    while let Some(c) = stack.pop() {
        if c.is_one() {
            continue;
        }
        let bound = BigUint::from(d);
        if &bound * &bound > c || is_probable_prime(&c) {
            primes.push(c);
            continue;
        }
        let r = c.sqrt();
        if &r * &r == c {
            stack.push(r);
            continue;
        }
        match pollard_brent(&c, rho_rounds) {
            Some(f) => {
                let g = &c / &f;
                stack.push(f);
                stack.push(g);
            }
            None => {
                unresolved = Some(match unresolved {
                    None => c,
                    Some(u) => u * c,
                });
            }
        }
    }
    primes.sort();
    primes.dedup();
    PrimeDivisors { primes, unresolved }
}

fn pollard_brent(n: &BigUint, rounds: u64) -> Option<BigUint> {
    let one = BigUint::one();
    for c in 1u64..=4 {
        let c = BigUint::from(c);
        let step = |x: &BigUint| (x * x + &c) % n;
        let mut y = BigUint::from(2u32);
        let mut r = 1u64;
        let mut q = one.clone();
        let mut g = one.clone();
        let mut x = y.clone();
        let mut ys = y.clone();
        let mut used = 0u64;
        let batch = 64u64;
        while g.is_one() && used < rounds {
            x = y.clone();
            for _ in 0..r {
                y = step(&y);
            }
            let mut k = 0;
            while k < r && g.is_one() {
                ys = y.clone();
                for _ in 0..batch.min(r - k) {
                    y = step(&y);
                    let diff = if x > y { &x - &y } else { &y - &x };
                    q = (q * diff) % n;
                }
                g = q.gcd(n);
                k += batch;
            }
            used += r;
            r *= 2;
        }
        if g == *n {
            loop {
                ys = step(&ys);
                let diff = if x > ys { &x - &ys } else { &ys - &x };
                g = diff.gcd(n);
                if !g.is_one() {
                    break;
                }
            }
        }
        if !g.is_one() && g != *n {
            return Some(g);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality_matches_sieve() {
        let n = 5000usize;
        let mut sieve = vec![true; n];
        sieve[0] = false;
        sieve[1] = false;
        for i in 2..n {
            if sieve[i] {
                for j in (i * i..n).step_by(i) {
                    sieve[j] = false;
                }
            }
        }
        for (i, &p) in sieve.iter().enumerate() {
            assert_eq!(is_prime_u64(i as u64), p, "{i}");
            assert_eq!(is_probable_prime(&BigUint::from(i)), p, "{i}");
        }
    }

    #[test]
    fn totient_and_divisors() {
        assert_eq!(euler_phi(147), 84);
        assert_eq!(euler_phi(9317), 7260);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(radical(9317), 77);
        assert_eq!(prime_power_base(27), Some(3));
        assert_eq!(prime_power_base(21), None);
        assert_eq!(multiplicative_order(2, 7), Some(3));
        assert_eq!(multiplicative_order(7, 121), Some(110));
    }

    #[test]
    fn prime_divisors_large() {
        let p = BigUint::from(1_000_000_007u64);
        let q = BigUint::from(998_244_353u64);
        let n = &p * &q * BigUint::from(169u32);
        let pd = prime_divisors(&n, DEFAULT_TRIAL_LIMIT, DEFAULT_RHO_ROUNDS);
        assert_eq!(pd.primes, vec![BigUint::from(13u32), q, p]);
        assert!(pd.unresolved.is_none());
    }

    #[test]
    fn prime_divisors_squares_and_big_prime() {
        let p = BigUint::parse_bytes(b"170141183460469231731687303715884105727", 10).unwrap();
        let pd = prime_divisors(&(&p * &p), 1000, 1000);
        assert_eq!(pd.primes, vec![p]);
        let pd = prime_divisors(&BigUint::one(), 1000, 1000);
        assert!(pd.primes.is_empty());
    }
}
