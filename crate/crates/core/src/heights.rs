//! The anticanonical height, computed exactly. Every comparison against a
//! bound goes through squared heights.

use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::{pow_rat, prime_factors, valuation_rat};
use crate::error::{Error, Result};
use crate::geometry::{GroupPoint, ProjPoint};

/// A height bound `B`, kept as the exact rational `B^2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeightBound {
    b_squared: BigRational,
}

impl HeightBound {
    pub fn from_b_squared(b_squared: BigRational) -> Result<Self> {
        if !b_squared.is_positive() {
            return Err(Error::InvalidHeight(format!("B^2 = {b_squared} must be positive")));
        }
        Ok(HeightBound { b_squared })
    }

    pub fn from_b_squared_int(n: u64) -> Result<Self> {
        Self::from_b_squared(BigRational::from_integer(BigInt::from(n)))
    }

    /// `B` from a positive integer.
    pub fn from_b(b: u64) -> Self {
        Self::from_b_squared_int(b * b).expect("positive")
    }

    /// Parses `B` as a plain decimal string ("1.8", "30", "0.5").
    pub fn parse_decimal(s: &str) -> Result<Self> {
        let b = parse_decimal(s)?;
        Self::from_b_squared(&b * &b)
    }

    pub fn b_squared(&self) -> &BigRational {
        &self.b_squared
    }

    /// `floor(B^2)`: an integer squared norm `n` satisfies `n <= B^2` iff
    /// `n <= floor(B^2)`.
    pub fn floor_b_squared(&self) -> u64 {
        self.b_squared.floor().to_integer().to_u64().unwrap_or(u64::MAX)
    }

    pub fn admits(&self, h2: &BigRational) -> bool {
        h2 <= &self.b_squared
    }

    pub fn b_f64(&self) -> f64 {
        self.b_squared.to_f64().unwrap_or(f64::NAN).sqrt()
    }
}

impl FromStr for HeightBound {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::parse_decimal(s)
    }
}

fn parse_decimal(s: &str) -> Result<BigRational> {
    let bad = || Error::InvalidHeight(format!("not a positive decimal: {s:?}"));
    let s = s.trim();
    let (int, frac) = s.split_once('.').unwrap_or((s, ""));
    if int.is_empty() && frac.is_empty() {
        return Err(bad());
    }
    if !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let digits = format!("{int}{frac}");
    let numer: BigInt = if digits.is_empty() { BigInt::zero() } else { digits.parse().map_err(|_| bad())? };
    let denom = BigInt::from(10u32).pow(frac.len() as u32);
    let q = BigRational::new(numer, denom);
    if q.is_zero() {
        return Err(bad());
    }
    Ok(q)
}

/// `|q|_p = p^(-v_p(q))`, and `|0|_p = 0`.
pub fn padic_abs(q: &BigRational, p: u64) -> BigRational {
    match valuation_rat(q, p) {
        None => BigRational::zero(),
        Some(v) => pow_rat(p, -v),
    }
}

/// Squared Euclidean norm of the primitive representative.
pub fn height_proj(t: &ProjPoint) -> BigInt {
    t.coords().iter().map(|x| x * x).sum()
}

/// Squared height `H_∞^2 · ∏_p H_p^2` of a group point through the adelic
/// formula with `H_p = max{1, |x|_p, |y|_p, |xy − y³|_p}`.
pub fn height_affine(g: &GroupPoint) -> BigRational {
    let z = g.z();
    let coords = [&g.x, &g.y, &z];
    let arch = BigRational::one() + coords.iter().map(|c| *c * *c).fold(BigRational::zero(), |a, b| a + b);
    let denoms = g.x.denom() * g.y.denom();
    let primes = prime_factors(denoms.to_u64().expect("denominators of test-size inputs fit in u64"));
    let mut h2 = arch;
    for p in primes {
        let local = coords.iter().map(|c| padic_abs(c, p)).fold(BigRational::one(), |m, v| if v > m { v } else { m });
        h2 = h2 * &local * &local;
    }
    h2
}

/// The height of `(1, t1, t2, t3)` computed place by place; for a primitive
/// integer vector with `t0 = 1` this is just the Euclidean norm.
pub fn height_chart_t0(t: &ProjPoint) -> Option<BigRational> {
    let [t0, rest @ ..] = t.coords();
    if t0.is_zero() {
        return None;
    }
    let q: Vec<BigRational> = rest.iter().map(|v| BigRational::new(v.clone(), t0.clone())).collect();
    let arch = BigRational::one() + q.iter().map(|c| c * c).fold(BigRational::zero(), |a, b| a + b);
    let den = q.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let mut h2 = arch;
    for p in prime_factors(den.to_u64()?) {
        let local = q.iter().map(|c| padic_abs(c, p)).fold(BigRational::one(), |m, v| if v > m { v } else { m });
        h2 = h2 * &local * &local;
    }
    Some(h2)
}
