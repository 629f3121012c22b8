//! The leading constant of `N(V;B) ~ c B^2`, as a lattice series and as a sum
//! of Tamagawa volumes of the lines.

use std::f64::consts::PI;

use num_integer::Integer;
use num_rational::BigRational;
use rayon::prelude::*;

use crate::arith::{rat, CompensatedSum};
use crate::error::{Error, Result};
use crate::geometry::{param_line_raw, LineIndex};
use crate::quadrature::{integrate_with_breaks, Integral};

pub fn zeta2() -> f64 {
    PI * PI / 6.0
}

/// Apéry's constant ζ(3), correctly rounded.
pub const ZETA3: f64 = 1.202_056_903_159_594_2;

pub fn zeta3() -> f64 {
    ZETA3
}

pub fn zeta_const(n: u32) -> Result<f64> {
    match n {
        2 => Ok(zeta2()),
        3 => Ok(zeta3()),
        _ => Err(Error::OutOfRange(format!("zeta({n}) is not provided"))),
    }
}

/// The numerical invariants entering the constant of each line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BtInvariants {
    pub a_l: BigRational,
    pub beta_l: BigRational,
    pub delta_l: BigRational,
    pub gamma_l: BigRational,
}

impl Default for BtInvariants {
    fn default() -> Self {
        BtInvariants { a_l: rat(2, 1), beta_l: rat(1, 1), delta_l: rat(1, 1), gamma_l: rat(1, 2) }
    }
}

impl BtInvariants {
    /// `γ δ / (a (β − 1)!)`, the factor multiplying the Tamagawa volume.
    pub fn line_factor(&self) -> f64 {
        // (β − 1)! = 0! = 1 for β = 1
        crate::arith::rat_to_f64(&(&self.gamma_l * &self.delta_l / &self.a_l))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, serde::Serialize)]
pub struct SeriesResult {
    pub value: f64,
    pub tail_bound: f64,
    pub truncation: u64,
}

/// `sum 1/sqrt(f(λ, μ))` over primitive pairs with `1 <= μ <= T`, `|λ| <= T`.
///
/// Omitted pairs have `max(|λ|, μ) = r > T`, at most `8r` of them per `r`, each
/// term at most `r^-3`, so the tail is below `8/T`.
pub fn series_s_half(t: u64) -> Result<SeriesResult> {
    if t == 0 {
        return Err(Error::OutOfRange("series truncation must be >= 1".into()));
    }
    let ti = t as i64;
    let rows: Vec<f64> = (1..=ti)
        .into_par_iter()
        .map(|mu| {
            let mut s = CompensatedSum::new();
            for lambda in -ti..=ti {
                if lambda.gcd(&mu) == 1 {
                    let f = LineIndex { lambda, mu }.discriminant_f() as f64;
                    s.add(1.0 / f.sqrt());
                }
            }
            s.value()
        })
        .collect();
    let value = rows.into_iter().collect::<CompensatedSum>().value();
    Ok(SeriesResult { value, tail_bound: 8.0 / t as f64, truncation: t })
}

#[derive(Clone, Copy, Debug, PartialEq, serde::Serialize)]
pub struct PredictedConstant {
    /// `(π / (2ζ(2))) · S`, with `S` the half series.
    pub c_derived: f64,
    /// `(π / (2ζ(2))) · 2S`, the prefactor applied to both sign classes.
    pub c_printed: f64,
    pub tail_derived: f64,
    pub tail_printed: f64,
    pub series: SeriesResult,
}

pub fn predicted_constant(t: u64) -> Result<PredictedConstant> {
    let series = series_s_half(t)?;
    let k = PI / (2.0 * zeta2());
    Ok(PredictedConstant {
        c_derived: k * series.value,
        c_printed: 2.0 * k * series.value,
        tail_derived: k * series.tail_bound,
        tail_printed: 2.0 * k * series.tail_bound,
        series,
    })
}

/// `2π / sqrt(det)`, the closed form attached to the line's archimedean volume,
/// with `det` the determinant of the line's height form.
pub fn omega_inf_closed(y: LineIndex) -> f64 {
    2.0 * PI / (y.line_discriminant() as f64).sqrt()
}

/// `∫_R du / Q(u)` with `Q(u) = C u^2 + 2 B2 u + A`, integrated on `[-U, U]`
/// around the vertex; the rest is below `2/(C U)` and is added to the error.
pub fn omega_inf_quad(y: LineIndex, tol: f64) -> Result<Integral> {
    if !(tol > 0.0) {
        return Err(Error::OutOfRange(format!("tolerance must be positive, got {tol}")));
    }
    let q = y.quad_form();
    let (a, b2, c) = (q.a as f64, q.b2 as f64, q.c as f64);
    let u0 = -b2 / c;
    let width = ((a * c - b2 * b2).sqrt() / c).max(1e-300);
    let big_u = u0.abs() + 4.0 / (c * tol);
    // geometric breakpoints resolve the peak and the long shoulders alike
    let mut breaks = vec![u0];
    let mut r = width / 8.0;
    while u0 + r < big_u || u0 - r > -big_u {
        breaks.push((u0 + r).min(big_u));
        breaks.push((u0 - r).max(-big_u));
        r *= 2.0;
    }
    breaks.push(big_u);
    breaks.push(-big_u);
    breaks.sort_by(f64::total_cmp);
    breaks.dedup();
    let f = |u: f64| 1.0 / (c * u * u + 2.0 * b2 * u + a);
    let body = integrate_with_breaks(f, &breaks, tol / 4.0)?;
    // both tails: ∫_{|u|>U} du/Q <= 2/(C (U - |u0|)) since Q >= C (u - u0)^2
    let tail = 2.0 / (c * (big_u - u0.abs()));
    Ok(Integral { value: body.value, error: body.error + tail })
}

/// `#P^1(F_p)/p`, the same for every line.
pub fn local_density(p: u64) -> Result<BigRational> {
    crate::arith::ensure_prime(p)?;
    Ok(rat(p as i64 + 1, p as i64))
}

/// Counts the distinct points of the line `y` reduced mod `p`, by listing the
/// images of all nonzero `(tau0, tau1)` mod `p` in `P^3(F_p)`.
pub fn count_line_points_mod_p(y: LineIndex, p: u64) -> Result<u64> {
    crate::arith::ensure_prime(p)?;
    let p = p as i128;
    let mut seen = std::collections::HashSet::new();
    for tau0 in 0..p {
        for tau1 in 0..p {
            if tau0 == 0 && tau1 == 0 {
                continue;
            }
            let raw = param_line_raw(y, tau0 as i64, tau1 as i64).map(|v| v.rem_euclid(p));
            let Some(lead) = raw.iter().find(|&&v| v != 0) else {
                return Err(Error::OutOfRange(format!("line {y} degenerates mod {p}")));
            };
            let inv = mod_inverse(*lead, p);
            seen.insert(raw.map(|v| v * inv % p));
        }
    }
    Ok(seen.len() as u64)
}

fn mod_inverse(a: i128, p: i128) -> i128 {
    let e = a.extended_gcd(&p);
    e.x.rem_euclid(p)
}

/// `∏_{p <= p_max} (1 − p^-2)` with a bound for the omitted factors: the tail
/// product lies in `[1 − 1/p_max, 1]`.
#[derive(Clone, Copy, Debug, PartialEq, serde::Serialize)]
pub struct EulerProduct {
    pub value: f64,
    pub tail: f64,
    pub p_max: u64,
}

pub fn euler_product_inv_zeta2(p_max: u64) -> EulerProduct {
    let mut log = CompensatedSum::new();
    for p in crate::arith::primes_up_to(p_max) {
        let p = p as f64;
        log.add((-1.0 / (p * p)).ln_1p());
    }
    let value = log.value().exp();
    EulerProduct { value, tail: value / p_max.max(1) as f64, p_max }
}

#[derive(Clone, Copy, Debug, PartialEq, serde::Serialize)]
pub struct TamagawaLine {
    pub value: f64,
    pub tail: f64,
}

/// `ω_∞ · ∏_{p <= p_max} (1 − 1/p) · #X_y(F_p)/p`.
pub fn tamagawa_line(y: LineIndex, p_max: u64) -> Result<TamagawaLine> {
    if p_max < 2 {
        return Err(Error::OutOfRange(format!("p_max must be >= 2, got {p_max}")));
    }
    let e = euler_product_inv_zeta2(p_max);
    let w = omega_inf_closed(y);
    Ok(TamagawaLine { value: w * e.value, tail: w * e.tail })
}

#[derive(Clone, Copy, Debug, PartialEq, serde::Serialize)]
pub struct BtConstant {
    pub value: f64,
    pub tail_series: f64,
    pub tail_euler: f64,
}

/// `sum_y γ δ τ(V_y) / a` over normalized lines with `max(|λ|, μ) <= T`.
pub fn bt_constant(t: u64, p_max: u64) -> Result<BtConstant> {
    if t == 0 {
        return Err(Error::OutOfRange("truncation must be >= 1".into()));
    }
    if p_max < 2 {
        return Err(Error::OutOfRange(format!("p_max must be >= 2, got {p_max}")));
    }
    let inv = BtInvariants::default();
    let factor = inv.line_factor();
    let e = euler_product_inv_zeta2(p_max);
    let ti = t as i64;
    let rows: Vec<f64> = (1..=ti)
        .into_par_iter()
        .map(|mu| {
            let mut s = CompensatedSum::new();
            for lambda in -ti..=ti {
                if lambda.gcd(&mu) == 1 {
                    s.add(omega_inf_closed(LineIndex { lambda, mu }));
                }
            }
            s.value()
        })
        .collect();
    let omega_sum = rows.into_iter().collect::<CompensatedSum>().value();
    let value = factor * e.value * omega_sum;
    // the omitted lines add at most 2π · (8/T) to omega_sum
    let tail_series = factor * e.value * 2.0 * PI * 8.0 / t as f64;
    Ok(BtConstant { value, tail_series, tail_euler: value / p_max as f64 })
}
