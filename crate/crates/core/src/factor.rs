//! Prime factorization for `2 <= n < 2^63`, plus the divisor and totient
//! helpers the graph modules are built on.
//!
//! Small factors are removed by trial division; whatever remains is split with
//! Brent's variant of Pollard rho, using a deterministic Miller-Rabin test that
//! is exact on the whole 64-bit range.

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Largest accepted modulus (exclusive).
pub const N_LIMIT: u64 = 1 << 63;

const TRIAL_BOUND: u64 = 1024;

/// Bases that make Miller-Rabin deterministic below 2^64 (Jaeschke / Sinclair).
const MR_BASES: [u64; 7] = [2, 325, 9375, 28178, 450775, 9780504, 1795265022];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimePower {
    pub p: u64,
    pub e: u32,
}

/// `n` together with its prime-power decomposition, primes strictly increasing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Factorization {
    n: u64,
    factors: Vec<PrimePower>,
}

/// A divisor of `n` with its exponent vector over the primes of `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Divisor {
    pub value: u64,
    pub exponents: Vec<u32>,
}

impl Factorization {
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn factors(&self) -> &[PrimePower] {
        &self.factors
    }

    /// Number of distinct primes.
    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Smallest prime factor.
    pub fn smallest_prime(&self) -> u64 {
        self.factors[0].p
    }

    pub fn exponents(&self) -> Vec<u32> {
        self.factors.iter().map(|f| f.e).collect()
    }

    pub fn is_square_free(&self) -> bool {
        self.factors.iter().all(|f| f.e == 1)
    }

    pub fn is_prime(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].e == 1
    }

    /// Euler's totient of `n`.
    pub fn phi(&self) -> u64 {
        let zero = vec![0; self.factors.len()];
        self.phi_of_quotient(&zero)
    }

    /// `φ(n / d)` where `d` is given by its exponent vector.
    pub fn phi_of_quotient(&self, d_exponents: &[u32]) -> u64 {
        self.factors
            .iter()
            .zip(d_exponents)
            .filter(|(f, &v)| v < f.e)
            .map(|(f, &v)| f.p.pow(f.e - v - 1) * (f.p - 1))
            .product()
    }

    /// Number of divisors, `∏(α_i + 1)`.
    pub fn divisor_count(&self) -> u64 {
        self.factors.iter().map(|f| f.e as u64 + 1).product()
    }

    /// All divisors in increasing order.
    pub fn divisors(&self) -> Vec<Divisor> {
        let mut out = vec![Divisor {
            value: 1,
            exponents: vec![0; self.factors.len()],
        }];
        for (i, f) in self.factors.iter().enumerate() {
            let base = out.len();
            for j in 0..base {
                let mut value = out[j].value;
                for e in 1..=f.e {
                    value *= f.p;
                    let mut exponents = out[j].exponents.clone();
                    exponents[i] = e;
                    out.push(Divisor { value, exponents });
                }
            }
        }
        out.sort_unstable_by_key(|d| d.value);
        out
    }

    /// Exponent vector of `gcd(x, n)`.
    pub fn gcd_exponents(&self, x: u64) -> Vec<u32> {
        self.factors
            .iter()
            .map(|f| {
                let mut x = x;
                let mut v = 0;
                while v < f.e && x.is_multiple_of(f.p) {
                    x /= f.p;
                    v += 1;
                }
                v
            })
            .collect()
    }
}

/// Factors `n`. Rejects `n < 2` (Z_1 has no nonzero elements) and `n >= 2^63`.
pub fn factorize(n: u64) -> Result<Factorization> {
    if n < 2 {
        return Err(Error::Domain(format!(
            "no zero-divisor graph defined for n = {n}"
        )));
    }
    if n >= N_LIMIT {
        return Err(Error::Domain(format!("n = {n} is not below 2^63")));
    }
    let mut primes = Vec::new();
    let mut m = n;
    let mut d = 2;
    while d < TRIAL_BOUND && d * d <= m {
        while m.is_multiple_of(d) {
            primes.push(d);
            m /= d;
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if m > 1 {
        split(m, &mut primes);
    }
    primes.sort_unstable();

    let mut factors: Vec<PrimePower> = Vec::new();
    for p in primes {
        match factors.last_mut() {
            Some(last) if last.p == p => last.e += 1,
            _ => factors.push(PrimePower { p, e: 1 }),
        }
    }
    Ok(Factorization { n, factors })
}

fn split(m: u64, out: &mut Vec<u64>) {
    if m == 1 {
        return;
    }
    if is_prime(m) {
        out.push(m);
        return;
    }
    let d = pollard_brent(m);
    split(d, out);
    split(m / d, out);
}

/// Returns a nontrivial factor of the odd composite `m`.
fn pollard_brent(m: u64) -> u64 {
    if m.is_multiple_of(2) {
        return 2;
    }
    for c in 1u64.. {
        let f = |x: u64| (mul_mod(x, x, m) + c) % m;
        let mut y = 2u64;
        let mut x = y;
        let mut q = 1u64;
        let mut g = 1u64;
        let mut r = 1u64;
        let mut ys = y;
        const BATCH: u64 = 128;
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = f(y);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..BATCH.min(r - k) {
                    y = f(y);
                    q = mul_mod(q, x.abs_diff(y), m);
                }
                g = gcd(q, m);
                k += BATCH;
            }
            r *= 2;
        }
        if g == m {
            // batch overshot: backtrack one step at a time
            loop {
                ys = f(ys);
                g = gcd(x.abs_diff(ys), m);
                if g > 1 {
                    break;
                }
            }
        }
        if g != m {
            return g;
        }
    }
    unreachable!()
}

#[inline]
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Deterministic primality test for all `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'bases: for &a in &MR_BASES {
        let a = a % n;
        if a == 0 {
            continue;
        }
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

/// Euler's totient; `euler_phi(1) == 1`.
pub fn euler_phi(m: u64) -> Result<u64> {
    if m == 1 {
        return Ok(1);
    }
    Ok(factorize(m)?.phi())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn pp(v: &[(u64, u32)]) -> Vec<PrimePower> {
        v.iter().map(|&(p, e)| PrimePower { p, e }).collect()
    }

    #[test]
    fn factorize_examples() {
        assert_eq!(
            factorize(420).unwrap().factors(),
            pp(&[(2, 2), (3, 1), (5, 1), (7, 1)])
        );
        assert_eq!(factorize(97).unwrap().factors(), pp(&[(97, 1)]));
        assert_eq!(
            factorize(196000).unwrap().factors(),
            pp(&[(2, 5), (5, 3), (7, 2)])
        );
    }

    #[test]
    fn rejects_small_and_huge() {
        assert!(matches!(factorize(0), Err(Error::Domain(_))));
        assert!(matches!(factorize(1), Err(Error::Domain(_))));
        assert!(matches!(factorize(1 << 63), Err(Error::Domain(_))));
    }

    #[test]
    fn large_inputs() {
        // product of two primes near 2^31
        let n = 2147483647u64 * 2147483629;
        assert_eq!(
            factorize(n).unwrap().factors(),
            pp(&[(2147483629, 1), (2147483647, 1)])
        );
        let n = (1u64 << 63) - 25; // largest prime below 2^63
        assert!(is_prime(n));
        assert!(factorize(n).unwrap().is_prime());
        let n = 1u64 << 62;
        assert_eq!(factorize(n).unwrap().factors(), pp(&[(2, 62)]));
        // 3037000493^2 < 2^63, a square of a prime above the trial bound
        let p = 3037000493u64;
        assert!(is_prime(p));
        assert_eq!(factorize(p * p).unwrap().factors(), pp(&[(p, 2)]));
    }

    #[test]
    fn primality_against_sieve() {
        let limit = 100_000;
        let mut sieve = vec![true; limit];
        sieve[0] = false;
        sieve[1] = false;
        for i in 2..limit {
            if sieve[i] {
                for j in (i * i..limit).step_by(i) {
                    sieve[j] = false;
                }
            }
        }
        for (i, &p) in sieve.iter().enumerate() {
            assert_eq!(is_prime(i as u64), p, "{i}");
        }
        // strong pseudoprimes to several small bases
        for c in [3215031751u64, 2152302898747, 3474749660383, 341550071728321] {
            assert!(!is_prime(c), "{c}");
        }
    }

    #[test]
    fn phi_examples() {
        assert_eq!(euler_phi(1).unwrap(), 1);
        assert_eq!(euler_phi(6).unwrap(), 2);
        assert_eq!(euler_phi(12).unwrap(), 4);
    }

    #[test]
    fn phi_matches_coprime_count() {
        for n in 1..=10_000u64 {
            let brute = (1..=n).filter(|&x| gcd(x, n) == 1).count() as u64;
            assert_eq!(euler_phi(n).unwrap(), brute, "n = {n}");
        }
    }

    #[test]
    fn phi_divisor_sum_is_n() {
        for n in 2..=10_000u64 {
            let f = factorize(n).unwrap();
            let sum: u64 = f
                .divisors()
                .iter()
                .map(|d| f.phi_of_quotient(&d.exponents))
                .sum();
            assert_eq!(sum, n);
        }
    }

    #[test]
    fn divisor_examples() {
        let vals = |n| {
            factorize(n)
                .unwrap()
                .divisors()
                .into_iter()
                .map(|d| d.value)
                .collect::<Vec<_>>()
        };
        assert_eq!(vals(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(vals(8), vec![1, 2, 4, 8]);
        assert_eq!(vals(101), vec![1, 101]);
    }

    #[test]
    fn round_trip_to_a_million() {
        for n in 2..=1_000_000u64 {
            let f = factorize(n).unwrap();
            let prod: u64 = f.factors().iter().map(|f| f.p.pow(f.e)).product();
            assert_eq!(prod, n);
        }
    }

    proptest! {
        #[test]
        fn factorization_invariants(n in 2u64..N_LIMIT) {
            let f = factorize(n).unwrap();
            let prod: u128 = f.factors().iter().map(|f| (f.p as u128).pow(f.e)).product();
            prop_assert_eq!(prod, n as u128);
            prop_assert!(f.factors().windows(2).all(|w| w[0].p < w[1].p));
            prop_assert!(f.factors().iter().all(|f| is_prime(f.p) && f.e >= 1));
        }

        #[test]
        fn divisors_complete(n in 2u64..200_000) {
            let f = factorize(n).unwrap();
            let divs = f.divisors();
            prop_assert_eq!(divs.len() as u64, f.divisor_count());
            let brute: Vec<u64> = (1..=n).filter(|d| n % d == 0).collect();
            prop_assert_eq!(divs.iter().map(|d| d.value).collect::<Vec<_>>(), brute);
            for d in &divs {
                prop_assert_eq!(&f.gcd_exponents(d.value), &d.exponents);
            }
        }
    }
}
