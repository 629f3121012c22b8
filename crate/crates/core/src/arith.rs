//! Small integer and summation helpers shared by the counting and
//! constant modules.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Floor of the square root of a non-negative integer.
pub fn isqrt_u128(n: u128) -> u128 {
    n.isqrt()
}

pub fn is_prime(p: u64) -> bool {
    if p < 4 {
        return p >= 2;
    }
    if p.is_multiple_of(2) {
        return false;
    }
    (3..).step_by(2).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// Primes `<= n` by the sieve of Eratosthenes.
pub fn primes_up_to(n: u64) -> Vec<u64> {
    let n = n as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            out.push(i as u64);
            (i * i..=n).step_by(i).for_each(|j| composite[j] = true);
        }
    }
    out
}

pub(crate) fn ensure_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

/// p-adic valuation of a nonzero integer; `None` for zero (valuation +inf).
pub fn valuation_i64(n: i64, p: u64) -> Option<u32> {
    if n == 0 {
        return None;
    }
    let p = p as u128;
    let mut m = n.unsigned_abs() as u128;
    let mut v = 0;
    while m.is_multiple_of(p) {
        m /= p;
        v += 1;
    }
    Some(v)
}

pub fn valuation_big(n: &BigInt, p: u64) -> Option<u32> {
    if n.is_zero() {
        return None;
    }
    let pb = BigInt::from(p);
    let mut m = n.abs();
    let mut v = 0;
    loop {
        let (q, r) = m.div_rem(&pb);
        if !r.is_zero() {
            return Some(v);
        }
        m = q;
        v += 1;
    }
}

/// Valuation of a nonzero rational; `None` for zero.
pub fn valuation_rat(q: &BigRational, p: u64) -> Option<i64> {
    let vn = valuation_big(q.numer(), p)?;
    let vd = valuation_big(q.denom(), p).unwrap_or(0);
    Some(vn as i64 - vd as i64)
}

/// p^e as an exact rational, for any integer exponent.
pub fn pow_rat(p: u64, e: i64) -> BigRational {
    let base = BigInt::from(p).pow(e.unsigned_abs() as u32);
    if e >= 0 {
        BigRational::from_integer(base)
    } else {
        BigRational::new(BigInt::one(), base)
    }
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_to_f64(q: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    q.to_f64().unwrap_or(f64::NAN)
}

/// Distinct prime factors of `n` by trial division (inputs here are small
/// denominators or loop indices).
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Squarefree divisors of a number given by its distinct primes, paired with
/// the Möbius sign of each divisor.
pub fn signed_squarefree_divisors(primes: &[u64]) -> Vec<(i64, i64)> {
    let mut divs = vec![(1i64, 1i64)];
    for &p in primes {
        let len = divs.len();
        for i in 0..len {
            let (d, s) = divs[i];
            divs.push((d * p as i64, -s));
        }
    }
    divs
}

/// Number of integers in `[lo, hi]` coprime to the number whose distinct
/// primes are `primes`.
pub fn count_coprime_in(lo: i64, hi: i64, divisors: &[(i64, i64)]) -> i64 {
    if hi < lo {
        return 0;
    }
    divisors.iter().map(|&(d, s)| s * (Integer::div_floor(&hi, &d) - Integer::div_floor(&(lo - 1), &d))).sum()
}

/// Smallest-prime-factor table, used to factor every loop index up to `n`.
pub struct SpfTable {
    spf: Vec<u32>,
}

impl SpfTable {
    pub fn new(n: usize) -> Self {
        let mut spf = vec![0u32; n + 1];
        for i in 2..=n {
            if spf[i] == 0 {
                let mut j = i;
                while j <= n {
                    if spf[j] == 0 {
                        spf[j] = i as u32;
                    }
                    j += i;
                }
            }
        }
        SpfTable { spf }
    }

    pub fn limit(&self) -> usize {
        self.spf.len() - 1
    }

    pub fn distinct_primes(&self, mut n: usize) -> Vec<u64> {
        let mut out = Vec::new();
        while n > 1 {
            let p = self.spf[n] as usize;
            out.push(p as u64);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        out
    }
}

/// Neumaier-compensated summation.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum {
    sum: f64,
    comp: f64,
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

impl std::iter::FromIterator<f64> for CompensatedSum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut s = CompensatedSum::new();
        for x in iter {
            s.add(x);
        }
        s
    }
}

/// Rounds to 12 significant digits; reports print floats through this so
/// repeated runs produce identical text.
pub fn sig12(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{x:.11e}").parse().unwrap_or(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_integer::gcd;

    #[test]
    fn coprime_interval_count_matches_gcd_loop() {
        let spf = SpfTable::new(200);
        for n in 1..=200usize {
            let divs = signed_squarefree_divisors(&spf.distinct_primes(n));
            for (lo, hi) in [(-37i64, 41i64), (0, 0), (5, 4), (-200, -3), (1, 199)] {
                let brute = (lo..=hi).filter(|&k| gcd(k, n as i64) == 1).count() as i64;
                assert_eq!(count_coprime_in(lo, hi, &divs), brute, "n={n} [{lo},{hi}]");
            }
        }
    }

    #[test]
    fn valuations() {
        assert_eq!(valuation_i64(12, 2), Some(2));
        assert_eq!(valuation_i64(0, 5), None);
        assert_eq!(valuation_rat(&rat(3, 50), 5), Some(-2));
        assert_eq!(pow_rat(3, -2), rat(1, 9));
    }

    #[test]
    fn compensated_sum_recovers_small_terms() {
        let s: CompensatedSum = [1e16, 1.0, -1e16, 1.0].into_iter().collect();
        assert_eq!(s.value(), 2.0);
    }

    #[test]
    #[allow(clippy::approx_constant)]
    fn sig12_is_stable() {
        assert_eq!(sig12(std::f64::consts::PI), 3.14159265359);
        assert_eq!(sig12(sig12(1.0 / 3.0)), sig12(1.0 / 3.0));
    }
}
