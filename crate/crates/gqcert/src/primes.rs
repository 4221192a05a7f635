//! Primality, prime sieving, and prime powers q = p^f.

use crate::int::Int;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ArithError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("argument must be positive")]
    NotPositive,
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("value out of supported range: {0}")]
    OutOfRange(String),
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1u64;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, m);
        }
        a = mul_mod(a, a, m);
        e >>= 1;
    }
    r
}

/// Deterministic Miller-Rabin for u64.
pub fn is_prime(n: u64) -> bool {
    const SMALL: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for p in SMALL {
        if n % p == 0 {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for a in SMALL {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// All primes up to and including `limit`.
pub fn sieve_primes(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let n = limit as usize;
    let mut composite = vec![false; n + 1];
    let mut primes = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            primes.push(i as u64);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    primes
}

/// A prime power q = p^f. Construction validates the invariants.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PrimePower {
    q: u64,
    p: u64,
    f: u32,
}

impl PrimePower {
    pub fn new(p: u64, f: u32) -> Result<PrimePower, ArithError> {
        if !is_prime(p) {
            return Err(ArithError::NotPrime(p));
        }
        if f == 0 {
            return Err(ArithError::NotPositive);
        }
        let mut q: u64 = 1;
        for _ in 0..f {
            q = q
                .checked_mul(p)
                .ok_or_else(|| ArithError::OutOfRange(format!("{}^{}", p, f)))?;
        }
        Ok(PrimePower { q, p, f })
    }

    /// Recognizes q as p^f, or fails if q is not a prime power.
    pub fn from_value(q: u64) -> Result<PrimePower, ArithError> {
        if q < 2 {
            return Err(ArithError::NotPrimePower(q));
        }
        if is_prime(q) {
            return Ok(PrimePower { q, p: q, f: 1 });
        }
        let mut d = 2u64;
        while d * d <= q {
            if q % d == 0 {
                let mut f = 0u32;
                let mut rest = q;
                while rest % d == 0 {
                    rest /= d;
                    f += 1;
                }
                return if rest == 1 {
                    Ok(PrimePower { q, p: d, f })
                } else {
                    Err(ArithError::NotPrimePower(q))
                };
            }
            d += 1;
        }
        unreachable!("composite q has a divisor at most sqrt(q)")
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn f(&self) -> u32 {
        self.f
    }

    pub fn is_odd(&self) -> bool {
        self.p != 2
    }

    pub fn int(&self) -> Int {
        Int::from(self.q)
    }

    /// Odd prime exponents r with q = q0^r; drives the type (f) subgroup rows.
    pub fn subfield_power_decompositions(&self) -> Vec<(PrimePower, u64)> {
        let mut out = Vec::new();
        for r in 3..=self.f {
            if self.f % r == 0 && r % 2 == 1 && is_prime(r as u64) {
                let q0 = PrimePower::new(self.p, self.f / r).expect("divisor exponent");
                out.push((q0, r as u64));
            }
        }
        out
    }
}

impl std::fmt::Display for PrimePower {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.q)
    }
}

/// All prime powers q in `[lo, hi]`, ascending. An empty range is fine.
pub fn enumerate_prime_powers(lo: u64, hi: u64) -> Vec<PrimePower> {
    if hi < 2 || hi < lo {
        return Vec::new();
    }
    let lo = lo.max(2);
    let mut out = Vec::new();
    for p in sieve_primes(hi) {
        let mut q = p;
        let mut f = 1u32;
        loop {
            if q >= lo {
                out.push(PrimePower { q, p, f });
            }
            match q.checked_mul(p) {
                Some(next) if next <= hi => {
                    q = next;
                    f += 1;
                }
                _ => break,
            }
        }
    }
    out.sort();
    out
}

/// Prime powers in `[lo, hi]` satisfying a predicate (residue/parity style filters).
pub fn enumerate_prime_powers_where(
    lo: u64,
    hi: u64,
    pred: impl Fn(&PrimePower) -> bool,
) -> Vec<PrimePower> {
    enumerate_prime_powers(lo, hi).into_iter().filter(|pp| pred(pp)).collect()
}

/// The mu-part of n: the highest power of the prime mu dividing n.
pub fn p_part(n: &Int, mu: u64) -> Result<Int, ArithError> {
    if !n.is_positive() {
        return Err(ArithError::NotPositive);
    }
    if !is_prime(mu) {
        return Err(ArithError::NotPrime(mu));
    }
    let m = Int::from(mu);
    let mut part = Int::ONE;
    let mut rest = n.clone();
    loop {
        let (q, r) = rest.div_rem(&m);
        if !r.is_zero() {
            return Ok(part);
        }
        part = &part * &m;
        rest = q;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn miller_rabin_matches_trial_division_below_100k() {
        let primes = sieve_primes(100_000);
        let mut idx = 0;
        for n in 0..=100_000u64 {
            let in_sieve = idx < primes.len() && primes[idx] == n;
            if in_sieve {
                idx += 1;
            }
            assert_eq!(is_prime(n), in_sieve, "disagreement at {}", n);
        }
    }

    // (6048, 3) -> 27, frozen from a trial-division factorization oracle:
    // 6048 = 2^5 * 3^3 * 7.
    #[test]
    fn p_part_examples() {
        assert_eq!(p_part(&Int::from(6048u64), 3).unwrap(), Int::from(27u64));
        assert_eq!(p_part(&Int::from(7u64), 5).unwrap(), Int::ONE);
        assert_eq!(p_part(&Int::from(16u64), 2).unwrap(), Int::from(16u64));
        assert_eq!(p_part(&Int::ZERO, 3), Err(ArithError::NotPositive));
        assert_eq!(p_part(&Int::ONE, 4), Err(ArithError::NotPrime(4)));
    }

    #[test]
    fn p_part_is_multiplicative() {
        for m in 1..60i128 {
            for n in 1..60i128 {
                for mu in [2u64, 3, 5, 7] {
                    let lhs = p_part(&Int::from(m * n), mu).unwrap();
                    let rhs = &p_part(&Int::from(m), mu).unwrap() * &p_part(&Int::from(n), mu).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    // (3, 10) -> [3,4,5,7,8,9] and (24, 26) -> [25], frozen from a sieve oracle.
    #[test]
    fn enumerate_examples() {
        let qs: Vec<u64> = enumerate_prime_powers(3, 10).iter().map(|p| p.q()).collect();
        assert_eq!(qs, vec![3, 4, 5, 7, 8, 9]);
        let qs: Vec<u64> = enumerate_prime_powers(24, 26).iter().map(|p| p.q()).collect();
        assert_eq!(qs, vec![25]);
        let qs = enumerate_prime_powers_where(11, 11, |pp| pp.q() % 3 == 2);
        assert_eq!(qs.len(), 1);
        assert_eq!(qs[0].q(), 11);
        assert!(enumerate_prime_powers(10, 3).is_empty());
    }

    // Cross-check against an independent primality + perfect-power test for n <= 10^5.
    #[test]
    fn enumerate_agrees_with_perfect_power_oracle() {
        let listed: std::collections::HashSet<u64> =
            enumerate_prime_powers(2, 100_000).iter().map(|p| p.q()).collect();
        for n in 2..=100_000u64 {
            let mut oracle = false;
            for f in 1..=17u32 {
                let root = (n as f64).powf(1.0 / f as f64).round() as u64;
                for cand in root.saturating_sub(1)..=root + 1 {
                    if cand >= 2 && is_prime(cand) && cand.checked_pow(f) == Some(n) {
                        oracle = true;
                    }
                }
            }
            assert_eq!(listed.contains(&n), oracle, "disagreement at {}", n);
        }
    }

    #[test]
    fn prime_power_recognition() {
        assert_eq!(PrimePower::from_value(6048), Err(ArithError::NotPrimePower(6048)));
        let q = PrimePower::from_value(729).unwrap();
        assert_eq!((q.p(), q.f()), (3, 6));
        let q = PrimePower::new(2, 9).unwrap();
        assert_eq!(q.q(), 512);
        let decomp = q.subfield_power_decompositions();
        assert_eq!(decomp.len(), 1);
        assert_eq!((decomp[0].0.q(), decomp[0].1), (8, 3));
        // f = 15 has both r = 3 and r = 5.
        let q = PrimePower::new(2, 15).unwrap();
        let rs: Vec<u64> = q.subfield_power_decompositions().iter().map(|d| d.1).collect();
        assert_eq!(rs, vec![3, 5]);
    }
}
