//! The characters `a = (0, m)` assembled into the constant, and the lattice
//! identity that ties it back to the series over lines.

use std::f64::consts::PI;

use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use super::archimedean::{hhat_inf_reduced, i_integral};
use super::padic::hhat_p_closed;
use crate::arith::{pow_rat, prime_factors, rat_to_f64, valuation_i64, CompensatedSum};
use crate::constants::{series_s_half, zeta2, zeta3, SeriesResult};
use crate::error::{Error, Result};
use crate::geometry::sextic_f;

/// `σ_{−2}(m) = sum_{d | m} d^-2`, and `ζ(2)` at `m = 0`.
#[derive(Clone, Debug, PartialEq)]
pub enum SigmaMinus2 {
    Rational(BigRational),
    /// Not rational; only available as a float.
    Zeta2(f64),
}

impl SigmaMinus2 {
    pub fn to_f64(&self) -> f64 {
        match self {
            SigmaMinus2::Rational(q) => rat_to_f64(q),
            SigmaMinus2::Zeta2(z) => *z,
        }
    }
}

pub fn sigma_minus2(m: i64) -> SigmaMinus2 {
    if m == 0 {
        return SigmaMinus2::Zeta2(zeta2());
    }
    let n = m.unsigned_abs();
    let mut s = BigRational::one();
    for p in prime_factors(n) {
        // 1 + p^-2 + ... + p^(-2e)
        let e = valuation_i64(m, p).expect("m != 0");
        let mut f = BigRational::zero();
        for k in 0..=e {
            f += pow_rat(p, -2 * k as i64);
        }
        s *= f;
    }
    SigmaMinus2::Rational(s)
}

#[derive(Clone, Copy, Debug, PartialEq, serde::Serialize)]
pub struct EmValue {
    /// `σ_{−2}(m) Ĥ_∞(2; 0, m) / (ζ(2) ζ(3))` (for `m = 0`: `Ĥ_∞/ζ(3)`).
    pub closed: f64,
    /// `Ĥ_∞ · ∏_{p <= p_max} Ĥ_p(2; 0, m)(1 − 1/p)`.
    pub euler: f64,
    /// Relative bound for the omitted primes.
    pub euler_tail: f64,
    pub agree: bool,
}

/// `E_m(2)` by the closed formula and by the regularized Euler product.
pub fn e_m(m: i64, p_max: u64, tol: f64) -> Result<EmValue> {
    if p_max < 2 {
        return Err(Error::OutOfRange(format!("p_max must be >= 2, got {p_max}")));
    }
    let h_inf = hhat_inf_reduced(m, tol)?.re;
    let closed = match m {
        0 => h_inf / zeta3(),
        _ => sigma_minus2(m).to_f64() * h_inf / (zeta2() * zeta3()),
    };
    let mut log = CompensatedSum::new();
    for p in crate::arith::primes_up_to(p_max) {
        let alpha = valuation_i64(m, p);
        let factor = hhat_p_closed(p, alpha)? * (BigRational::one() - pow_rat(p, -1));
        log.add(rat_to_f64(&factor).ln());
    }
    let euler = h_inf * log.value().exp();
    // each omitted factor is (1 − p^-3)(1 − p^-2) for p ∤ m: Σ_{p>P} 2p^-2 <= 2/P
    let euler_tail = 2.0 / p_max as f64;
    let agree = (closed - euler).abs() <= closed.abs() * euler_tail + 1e-12;
    if !agree {
        log::warn!("E_{m}(2): closed {closed} and Euler product {euler} disagree");
    }
    Ok(EmValue { closed, euler, euler_tail, agree })
}

#[derive(Clone, Debug, PartialEq, serde::Serialize)]
pub struct PoissonConstant {
    pub value: f64,
    pub m_max: u64,
    /// `I(m)` for `m = 0..=M`.
    pub i_values: Vec<f64>,
    /// `|σ_{−2}(M) I(M)|` scaled like the sum, the empirical tail.
    pub last_term: f64,
    pub quadrature_error: f64,
}

fn i_table(m_max: u64, tol: f64) -> Result<Vec<crate::quadrature::Integral>> {
    (0..=m_max as i64).into_par_iter().map(|m| i_integral(m, tol)).collect()
}

/// `(1/ζ(3)) (ζ(2) I(0) + 2 sum_{m=1}^M σ_{−2}(m) I(m))`.
fn character_sum(table: &[crate::quadrature::Integral]) -> (f64, f64, f64) {
    let mut s = CompensatedSum::new();
    let mut err = 0.0;
    let mut last = 0.0;
    for (m, i) in table.iter().enumerate() {
        let sigma = sigma_minus2(m as i64).to_f64();
        let w = if m == 0 { sigma } else { 2.0 * sigma };
        s.add(w * i.value);
        err += w * i.error;
        last = (w * i.value).abs();
    }
    (s.value() / zeta3(), err / zeta3(), last / zeta3())
}

/// `(π/(ζ(2)ζ(3))) sum_{|m| <= M} σ_{−2}(m) I(m)`.
pub fn poisson_constant(m_max: u64, tol: f64) -> Result<PoissonConstant> {
    let table = i_table(m_max, tol)?;
    let (sum, err, last) = character_sum(&table);
    let k = PI / zeta2();
    Ok(PoissonConstant {
        value: k * sum,
        m_max,
        i_values: table.iter().map(|i| i.value).collect(),
        last_term: k * last,
        quadrature_error: k * err,
    })
}

#[derive(Clone, Debug, PartialEq, serde::Serialize)]
pub struct IdentityCheck {
    pub lhs: f64,
    pub rhs_printed: f64,
    pub rhs_derived: f64,
    pub ratio_printed: f64,
    pub ratio_derived: f64,
    pub series: SeriesResult,
    pub m_max: u64,
    pub last_term: f64,
}

/// Compares `(1/ζ(3)) sum_m σ_{−2}(m) I(m)` with half and with a quarter of
/// the full series over primitive pairs (the full series is twice the
/// normalized one).
pub fn poisson_identity_check(t: u64, m_max: u64) -> Result<IdentityCheck> {
    let table = i_table(m_max, 1e-13)?;
    let (lhs, _, last) = character_sum(&table);
    let series = series_s_half(t)?;
    let full = 2.0 * series.value;
    let rhs_printed = 0.5 * full;
    let rhs_derived = 0.25 * full;
    Ok(IdentityCheck {
        lhs,
        rhs_printed,
        rhs_derived,
        ratio_printed: lhs / rhs_printed,
        ratio_derived: lhs / rhs_derived,
        series,
        m_max,
        last_term: last,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, serde::Serialize)]
pub struct LatticeOrdering {
    /// `sum_{1 <= v <= N, |n| <= N} f(v, n)^-1/2`.
    pub sum_vn: f64,
    /// The same with the arguments of `f` exchanged.
    pub sum_nv: f64,
    /// `2 sum_{λ, μ >= 1} f(λ, μ)^-1/2 + sum_{v <= N} v^-3`.
    pub combined: f64,
    pub truncation: u64,
}

impl LatticeOrdering {
    pub fn max_discrepancy(&self) -> f64 {
        (self.sum_vn - self.sum_nv).abs().max((self.sum_vn - self.combined).abs())
    }
}

/// The two orderings of the sextic give the same lattice sum over
/// `v >= 1, n ∈ Z`; both equal twice the positive-quadrant sum plus `ζ(3)`
/// (truncated).
pub fn lattice_ordering_identity(n: u64) -> LatticeOrdering {
    let ni = n as i128;
    let rows: Vec<(f64, f64, f64)> = (1..=ni)
        .into_par_iter()
        .map(|v| {
            let (mut a, mut b, mut q) = (CompensatedSum::new(), CompensatedSum::new(), CompensatedSum::new());
            for k in -ni..=ni {
                a.add(1.0 / (sextic_f(v, k) as f64).sqrt());
                b.add(1.0 / (sextic_f(k, v) as f64).sqrt());
                if k >= 1 {
                    q.add(1.0 / (sextic_f(v, k) as f64).sqrt());
                }
            }
            (a.value(), b.value(), q.value())
        })
        .collect();
    let sum_vn = rows.iter().map(|r| r.0).collect::<CompensatedSum>().value();
    let sum_nv = rows.iter().map(|r| r.1).collect::<CompensatedSum>().value();
    let quadrant = rows.iter().map(|r| r.2).collect::<CompensatedSum>().value();
    let zeta3_partial = (1..=n).map(|v| (v as f64).powi(-3)).collect::<CompensatedSum>().value();
    LatticeOrdering { sum_vn, sum_nv, combined: 2.0 * quadrant + zeta3_partial, truncation: n }
}
