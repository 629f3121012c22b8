//! `Ĥ_p(s; a) = ∫_{Q_p^2} H_p(x,y)^-s e(a1 x + a2 y) dx dy`.
//!
//! Three evaluations: the closed forms at `s = 2` (and their five components),
//! a level-by-level sum over annuli `|x| = p^j1`, `|y| = p^j2` built from unit
//! integrals, and a brute-force grid sum that shares nothing with either.

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::CharIndex;
use crate::arith::{ensure_prime, pow_rat, rat, valuation_i64};
use crate::error::{Error, Result};

fn unit_case(v: Option<u32>, j: i64) -> u8 {
    match v {
        None => 0,
        Some(v) => match j - v as i64 {
            d if d <= 0 => 0,
            1 => 1,
            _ => 2,
        },
    }
}

/// `∫_{U_p} e(c x / p^j) dx`: `1 − 1/p`, `−1/p` or `0` as `j − v_p(c)` is
/// `<= 0`, `1` or `>= 2` (`c = 0` counts as infinite valuation).
pub fn unit_integral(c: i64, j: i64, p: u64) -> Result<BigRational> {
    ensure_prime(p)?;
    Ok(unit_exact(valuation_i64(c, p), j, p))
}

fn unit_exact(v: Option<u32>, j: i64, p: u64) -> BigRational {
    let p = p as i64;
    match unit_case(v, j) {
        0 => rat(p - 1, p),
        1 => rat(-1, p),
        _ => BigRational::zero(),
    }
}

fn unit_f64(v: Option<u32>, j: i64, p: u64) -> f64 {
    let p = p as f64;
    match unit_case(v, j) {
        0 => 1.0 - 1.0 / p,
        1 => -1.0 / p,
        _ => 0.0,
    }
}

/// `p^j · ∫_{U_p} e(c x/p^j) dx` for `j >= 1`, which is an integer.
fn unit_scaled(v: Option<u32>, j: i64, p: u64) -> f64 {
    let pj = (p as f64).powi(j as i32);
    match unit_case(v, j) {
        0 => pj - pj / p as f64,
        1 => -pj / p as f64,
        _ => 0.0,
    }
}

/// `∫_{T(h)} e(a2 y / p^j2) dx dy` over the unit pairs with
/// `|x − y²|_p = p^-h`; `alpha = v_p(a2)`, `None` for `a2 = 0`.
pub fn t_h_integral(h: u32, j2: i64, alpha: Option<u32>, p: u64) -> Result<BigRational> {
    ensure_prime(p)?;
    Ok(t_h_exact(h, j2, alpha, p))
}

fn t_h_exact(h: u32, j2: i64, alpha: Option<u32>, p: u64) -> BigRational {
    // (δ − 1/p) is exactly the unit integral of the y-character
    let delta_minus = unit_exact(alpha, j2, p);
    let pi = p as i64;
    if h == 0 {
        delta_minus * rat(pi - 2, pi)
    } else {
        delta_minus * rat(pi - 1, pi) * pow_rat(p, -(h as i64))
    }
}

/// `(1 + 1/p + 1/p²)(1 − p^(−2−2α))`, the value at `s = 2` for `a = (0, a2)`.
pub fn hhat_p_closed(p: u64, alpha: Option<u32>) -> Result<BigRational> {
    ensure_prime(p)?;
    let base = BigRational::one() + pow_rat(p, -1) + pow_rat(p, -2);
    Ok(match alpha {
        None => base,
        Some(a) => base * (BigRational::one() - pow_rat(p, -2 - 2 * a as i64)),
    })
}

/// The five pieces of `Ĥ_p(2; 0, a2) − 1`: the families `j1 > 2j2` (`s1`),
/// `j1 < 2j2` (`s2`) and the three parts of `j1 = 2j2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PadicComponents {
    pub s1: BigRational,
    pub s2: BigRational,
    pub a: BigRational,
    pub b: BigRational,
    pub c: BigRational,
}

impl PadicComponents {
    pub fn total(&self) -> BigRational {
        BigRational::one() + &self.s1 + &self.s2 + &self.a + &self.b + &self.c
    }
}

pub fn hhat_p_components(p: u64, alpha: Option<u32>) -> Result<PadicComponents> {
    ensure_prime(p)?;
    let one = BigRational::one;
    let pw = |e: i64| pow_rat(p, e);
    // x_k = p^(−kα), which vanishes for α = ∞
    let x = |k: i64| match alpha {
        None => BigRational::zero(),
        Some(a) => pw(-k * a as i64),
    };
    let q = one() - pw(-1);
    let s1 = (one() - pw(-3) * x(3)) * (one() - pw(-4)) / (pw(1) * (one() - pw(-3)));
    let s2 = -pw(-5) * x(3) + &q * (one() - x(3)) / (pw(4) * (one() - pw(-3)));
    let a = -pw(-3) * x(2) + &q * (one() - x(2)) / (pw(2) * (one() - pw(-2)));
    let b = -pw(-4) * x(2) * (one() - x(1))
        + pw(-3) * &q * ((one() - x(2)) / (one() - pw(-2)) - (one() - x(3)) / (one() - pw(-3)));
    let c = (one() - rat(2, p as i64)) * pw(-3) * (-pw(-1) * x(3) + &q * (one() - x(3)) / (one() - pw(-3)));
    Ok(PadicComponents { s1, s2, a, b, c })
}

/// Level cutoffs for the annulus sum: `j1, j2 <= j` and `h <= h`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct PadicTruncation {
    pub j: u32,
    pub h: u32,
}

impl PadicTruncation {
    pub fn new(j: u32, h: u32) -> Result<Self> {
        if j == 0 || h == 0 {
            return Err(Error::OutOfRange("truncation levels must be >= 1".into()));
        }
        Ok(PadicTruncation { j, h })
    }

    /// Smallest `J` past which every unit integral in the sum is constant, so
    /// that the omitted families are exact geometric series.
    pub fn required_j(a: CharIndex, p: u64) -> u32 {
        let lvl = |v: Option<u32>| v.map_or(1, |v| v + 2);
        lvl(a.v1(p)).max(lvl(a.alpha(p)))
    }

    /// `J = 3α + 9` (and at least `2 v_p(a1) + 3`), `H = 2J`.
    pub fn for_char(a: CharIndex, p: u64) -> Self {
        let al = a.alpha(p).unwrap_or(0);
        let v1 = a.v1(p).unwrap_or(0);
        let j = (3 * al + 9).max(2 * v1 + 3);
        PadicTruncation { j, h: 2 * j }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AnnulusValue {
    pub value: Complex64,
    /// Bound on the floating-point error; the omitted levels are summed in
    /// closed form and contribute nothing beyond rounding.
    pub tail: f64,
    /// Cells with `|x|, |y| <= 1`.
    pub lump: f64,
    pub s1: f64,
    pub s2: f64,
    pub s3: Complex64,
    pub terms: usize,
}

#[derive(Default)]
struct Acc {
    s1: f64,
    s2: f64,
    s3: Complex64,
    abs: f64,
    n: usize,
}

impl Acc {
    fn add1(&mut self, t: f64) {
        self.s1 += t;
        self.abs += t.abs();
        self.n += 1;
    }
    fn add2(&mut self, t: f64) {
        self.s2 += t;
        self.abs += t.abs();
        self.n += 1;
    }
    fn add3(&mut self, t: Complex64) {
        self.s3 += t;
        self.abs += t.norm();
        self.n += 1;
    }
}

/// `∫_{U_p} e(a1 y²/p^(2j) + a2 y/p^j) dy` as an exact finite sum over
/// `y mod p^(2j)`.
fn quadratic_unit_sum(p: u64, a: CharIndex, j: u32) -> Result<Complex64> {
    let m = (p as u128)
        .checked_pow(2 * j)
        .filter(|&m| m <= 100_000_000)
        .ok_or_else(|| Error::OutOfRange(format!("quadratic sum modulo {p}^{} is too large", 2 * j)))?
        as i128;
    let pj = (p as i128).pow(j);
    let a1 = (a.a1 as i128).rem_euclid(m);
    let a2 = (a.a2 as i128 * pj).rem_euclid(m);
    let mut counts = vec![0u64; m as usize];
    for y in 0..m {
        if y % p as i128 == 0 {
            continue;
        }
        let ph = (a1 * (y * y % m) + a2 * y) % m;
        counts[ph as usize] += 1;
    }
    let mut s = Complex64::new(0.0, 0.0);
    for (ph, &c) in counts.iter().enumerate() {
        if c > 0 {
            let t = 2.0 * std::f64::consts::PI * ph as f64 / m as f64;
            s += Complex64::new(t.cos(), t.sin()) * c as f64;
        }
    }
    Ok(s / m as f64)
}

/// Sums `Ĥ_p(s; a)` over the annuli `|x| = p^j1`, `|y| = p^j2`.
///
/// Writing `E` for `log_p H_p` on a cell, the cells split as
/// `j1, j2 <= 0` (`E = 0`, total mass 1), `j1 > 2j2` (`E = max(j1, j1 + j2)`),
/// `j1 < 2j2` (`E = 3j2`) and `j1 = 2j2`, where `E` depends on
/// `h = v_p(x' − y'²)`. Levels up to the truncation are added term by term;
/// beyond it every unit integral is constant and the remaining families are
/// summed as geometric series.
pub fn hhat_p_annulus(p: u64, a: CharIndex, s: f64, trunc: PadicTruncation) -> Result<AnnulusValue> {
    ensure_prime(p)?;
    if !(s > 1.0) {
        return Err(Error::OutOfRange(format!("the annulus sum needs s > 1, got {s}")));
    }
    let required = PadicTruncation::required_j(a, p);
    if trunc.j < required {
        return Err(Error::TruncationTooSmall { given: trunc.j, required });
    }
    if trunc.h < trunc.j {
        return Err(Error::OutOfRange(format!("H = {} must be >= J = {}", trunc.h, trunc.j)));
    }
    let (v1, al) = (a.v1(p), a.alpha(p));
    let jj = trunc.j as i64;
    let hh = trunc.h as i64;
    let pf = p as f64;
    let pw = |e: f64| pf.powf(e);
    let u1 = |j: i64| unit_f64(v1, j, p);
    let u2 = |j: i64| unit_f64(al, j, p);
    let (u1c, u2c) = (u1(jj + 1), u2(jj + 1));
    let r = pw(1.0 - s);
    let geo = |x: f64, from: i64| x.powi(from as i32) / (1.0 - x);
    let mut acc = Acc::default();

    // j1 > 2j2, y integral over Z_p (j2 <= 0)
    for j1 in 1..=jj {
        acc.add1(r.powi(j1 as i32) * u1(j1));
    }
    acc.add1(u1c * geo(r, jj + 1));
    // j1 > 2j2 >= 2
    for j2 in 1..=jj {
        let w2 = pw(j2 as f64 * (1.0 - s)) * u2(j2);
        for j1 in (2 * j2 + 1)..=jj {
            acc.add1(w2 * r.powi(j1 as i32) * u1(j1));
        }
        acc.add1(w2 * u1c * geo(r, jj.max(2 * j2) + 1));
    }
    acc.add1(u1c * u2c * r / (1.0 - r) * geo(r.powi(3), jj + 1));

    // j1 < 2j2: the x integral over |x| <= p^(2j2 − 1)
    let mut prefix = vec![1.0f64];
    for j1 in 1..=jj {
        let last = *prefix.last().unwrap();
        prefix.push(last + unit_scaled(v1, j1, p));
    }
    let geo_p = |from: i64, to: i64| (pf.powi(to as i32 + 1) - pf.powi(from as i32)) / (pf - 1.0);
    for j2 in 1..=jj {
        let top = 2 * j2 - 1;
        let mut inner = prefix[top.min(jj) as usize];
        if top > jj {
            inner += u1c * geo_p(jj + 1, top);
        }
        acc.add2(pw(j2 as f64 * (1.0 - 3.0 * s)) * u2(j2) * inner);
    }
    {
        let k0 = prefix[jj as usize] - u1c * pf.powi(jj as i32 + 1) / (pf - 1.0);
        let s_a = geo(pw(1.0 - 3.0 * s), jj + 1);
        let s_b = geo(pw(3.0 - 3.0 * s), jj + 1);
        acc.add2(u2c * (k0 * s_a + u1c / (pf - 1.0) * s_b));
    }

    // j1 = 2j2
    let e_of = |h: i64, j2: i64| if h <= j2 { 3 * j2 - h } else { 2 * j2 };
    for j2 in 1..=jj {
        let cell = |h: i64| pw(3.0 * j2 as f64 - e_of(h, j2) as f64 * s);
        match v1 {
            None => {
                for h in 0..=hh {
                    let t = crate::arith::rat_to_f64(&t_h_exact(h as u32, j2, al, p));
                    acc.add3(Complex64::new(cell(h) * t, 0.0));
                }
                let rest = cell(hh + 1) * u2(j2) * pf.powi(-(hh as i32) - 1);
                acc.add3(Complex64::new(rest, 0.0));
            }
            // the h-strata cancel once j2 > v_p(a1)
            Some(v) if j2 > v as i64 => {}
            Some(v) => {
                let g = quadratic_unit_sum(p, a, j2 as u32)?;
                let ind = if v as i64 >= 2 * j2 - 1 { 1.0 } else { 0.0 };
                let t0 = Complex64::new(u1(2 * j2) * u2(j2), 0.0) - g * (ind / pf);
                acc.add3(t0 * cell(0));
                for h in 1..=hh {
                    acc.add3(g * (cell(h) * pf.powi(-(h as i32)) * u1(2 * j2 - h)));
                }
                acc.add3(g * (cell(hh + 1) * pf.powi(-(hh as i32) - 1)));
            }
        }
    }
    if v1.is_none() {
        let q = pw(s - 1.0);
        let (rho, kappa) = (pw(3.0 * (1.0 - s)), pw(2.0 * (1.0 - s)));
        let mid = (1.0 - 1.0 / pf) * q / (q - 1.0);
        let c_rho = (1.0 - 2.0 / pf) - mid;
        let c_kappa = mid + 1.0 / pf;
        acc.add3(Complex64::new(u2c * (c_rho * geo(rho, jj + 1) + c_kappa * geo(kappa, jj + 1)), 0.0));
    }

    let lump = 1.0;
    let value = Complex64::new(lump + acc.s1 + acc.s2, 0.0) + acc.s3;
    let tail = (acc.n as f64 + 10.0) * f64::EPSILON * (acc.abs + lump);
    Ok(AnnulusValue { value, tail, lump, s1: acc.s1, s2: acc.s2, s3: acc.s3, terms: acc.n })
}

/// Grid resolution for [`hhat_p_grid_oracle`]: the region `p^-J Z_p` in each
/// variable, cut into cells `n/p^J + p^K Z_p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct GridParams {
    pub j: u32,
    pub k: u32,
    /// Only permutes the order in which rows are visited.
    pub seed: u64,
}

impl GridParams {
    /// Resolutions measured to stay within `1e-2` of the exact values.
    pub fn default_for(p: u64) -> Self {
        let (j, k) = match p {
            2 => (8, 3),
            3 => (4, 2),
            _ => (2, 1),
        };
        GridParams { j, k, seed: 0 }
    }
}

fn vp_capped(mut n: i128, p: i128, cap: u32) -> u32 {
    if n == 0 {
        return cap;
    }
    let mut v = 0;
    while n % p == 0 && v < cap {
        n /= p;
        v += 1;
    }
    v
}

/// Heuristic oracle: sums `H_p^-s e(a·(x,y))` over every cell of a finite grid,
/// evaluating `H_p` at the cell representative. Cells near `x = y²` at large
/// `|y|` are misjudged and the region outside `|x|, |y| <= p^J` is dropped, so
/// agreement is only expected to about `1e-2`.
pub fn hhat_p_grid_oracle(p: u64, a: CharIndex, s: f64, params: GridParams) -> Result<Complex64> {
    ensure_prime(p)?;
    let GridParams { j, k, seed } = params;
    let cells = (p as f64).powi(2 * (j + k) as i32);
    if cells > 4.0e9 {
        return Err(Error::OutOfRange(format!("grid with {cells:e} cells is too large")));
    }
    let pi = p as i128;
    let n = pi.pow(j + k);
    let pj = pi.pow(j);
    let vmod = pi.pow(3 * j);
    let (a1, a2) = ((a.a1 as i128).rem_euclid(pj), (a.a2 as i128).rem_euclid(pj));
    let jv = j as i64;
    let vx: Vec<u32> = (0..n).map(|x| vp_capped(x, pi, j + k + 1)).collect();
    let n_e = (3 * j + 1) as usize;
    let n_ph = pj as usize;

    let mut rows: Vec<i128> = (0..n).collect();
    rows.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    // integer counts per (exponent, phase): the result cannot depend on order
    let counts = rows
        .par_chunks(64)
        .map(|chunk| {
            let mut c = vec![0u64; n_e * n_ph];
            for &y in chunk {
                let ey = jv - vp_capped(y, pi, j + k + 1) as i64;
                let y3 = y * y * y;
                for x in 0..n {
                    let ex = jv - vx[x as usize] as i64;
                    let z = (x * y * pj - y3).rem_euclid(vmod);
                    let ez = 3 * jv - vp_capped(z, pi, 3 * j) as i64;
                    let e = ex.max(ey).max(ez).max(0) as usize;
                    let ph = ((a1 * x + a2 * y) % pj) as usize;
                    c[e * n_ph + ph] += 1;
                }
            }
            c
        })
        .reduce(
            || vec![0u64; n_e * n_ph],
            |mut l, r| {
                l.iter_mut().zip(r).for_each(|(a, b)| *a += b);
                l
            },
        );
    let cell = (p as f64).powi(-2 * k as i32);
    let mut total = Complex64::new(0.0, 0.0);
    for e in 0..n_e {
        let w = cell * (p as f64).powf(-(e as f64) * s);
        for ph in 0..n_ph {
            let c = counts[e * n_ph + ph];
            if c > 0 {
                let t = 2.0 * std::f64::consts::PI * ph as f64 / pj as f64;
                total += Complex64::new(t.cos(), t.sin()) * (w * c as f64);
            }
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat_to_f64;

    #[test]
    fn unit_integral_cases() {
        assert_eq!(unit_integral(1, 2, 5).unwrap(), rat(0, 1));
        assert_eq!(unit_integral(1, 1, 5).unwrap(), rat(-1, 5));
        assert_eq!(unit_integral(5, 1, 5).unwrap(), rat(4, 5));
        assert_eq!(unit_integral(0, 40, 3).unwrap(), rat(2, 3));
        assert_eq!(unit_integral(7, -3, 7).unwrap(), rat(6, 7));
        assert!(unit_integral(1, 1, 4).is_err());
    }

    #[test]
    fn t_h_cases() {
        assert_eq!(t_h_integral(1, 0, Some(0), 3).unwrap(), rat(4, 27));
        assert_eq!(t_h_integral(1, 2, Some(2), 3).unwrap(), rat(4, 27));
        assert_eq!(t_h_integral(0, 1, Some(0), 5).unwrap(), rat(-3, 25));
        for h in 0..5 {
            assert_eq!(t_h_integral(h, 3, Some(1), 7).unwrap(), rat(0, 1));
        }
    }

    #[test]
    fn t_h_total_measure() {
        for p in [2u64, 3, 5, 7] {
            // sum over h of the measures of T(h), closing the geometric tail
            let mut total = BigRational::zero();
            let hmax = 40;
            for h in 0..=hmax {
                total += t_h_integral(h, 1, Some(3), p).unwrap();
            }
            let q = rat(p as i64 - 1, p as i64);
            total += &q * &q * pow_rat(p, -(hmax as i64)) / rat(p as i64 - 1, 1);
            assert_eq!(total, &q * &q, "p={p}");
        }
        assert_eq!(t_h_integral(0, 1, None, 2).unwrap(), rat(0, 1));
    }

    #[test]
    fn closed_examples() {
        assert_eq!(hhat_p_closed(2, Some(0)).unwrap(), rat(21, 16));
        assert_eq!(hhat_p_closed(3, Some(1)).unwrap(), rat(13, 9) * rat(80, 81));
        assert_eq!(hhat_p_closed(5, None).unwrap(), rat(31, 25));
    }

    #[test]
    fn component_examples() {
        let c = hhat_p_components(3, Some(0)).unwrap();
        assert_eq!(c.s1, (BigRational::one() - pow_rat(3, -4)) / rat(3, 1));
        assert_eq!(c.s2, -pow_rat(3, -5));
        assert_eq!(c.total(), rat(104, 81));
    }

    #[test]
    fn components_sum_to_closed_form() {
        for p in [2u64, 3, 5, 7, 11, 13] {
            for alpha in [Some(0), Some(1), Some(2), Some(3), Some(7), None] {
                let c = hhat_p_components(p, alpha).unwrap();
                assert_eq!(c.total(), hhat_p_closed(p, alpha).unwrap(), "p={p} α={alpha:?}");
            }
        }
    }

    #[test]
    fn annulus_matches_closed_forms() {
        for p in [2u64, 3, 5, 7] {
            for a2 in [0i64, 1, p as i64, (p * p) as i64, 6] {
                let a = CharIndex::new(0, a2);
                let r = hhat_p_annulus(p, a, 2.0, PadicTruncation::for_char(a, p)).unwrap();
                let exact = rat_to_f64(&hhat_p_closed(p, a.alpha(p)).unwrap());
                assert!((r.value.re - exact).abs() <= r.tail.max(1e-14), "p={p} a2={a2}: {r:?} vs {exact}");
                assert!(r.tail < 1e-10);
                assert_eq!(r.value.im, 0.0);
            }
        }
        let a = CharIndex::new(0, 25);
        let r = hhat_p_annulus(5, a, 2.0, PadicTruncation::new(15, 30).unwrap()).unwrap();
        assert!((r.value.re - 31.0 / 25.0 * (1.0 - 5f64.powi(-6))).abs() < 1e-10);
    }

    #[test]
    fn annulus_families_match_components() {
        for p in [2u64, 3, 5] {
            for alpha in [0u32, 1, 2] {
                let a = CharIndex::new(0, (p as i64).pow(alpha));
                let r = hhat_p_annulus(p, a, 2.0, PadicTruncation::for_char(a, p)).unwrap();
                let c = hhat_p_components(p, Some(alpha)).unwrap();
                assert!((r.s1 - rat_to_f64(&c.s1)).abs() < 1e-14, "S1 p={p} α={alpha}");
                assert!((r.s2 - rat_to_f64(&c.s2)).abs() < 1e-14, "S2 p={p} α={alpha}");
                let s3 = rat_to_f64(&(&c.a + &c.b + &c.c));
                assert!((r.s3.re - s3).abs() < 1e-14, "S3 p={p} α={alpha}");
            }
        }
    }

    #[test]
    fn s1_family_for_unit_a1() {
        for (p, a) in [(3u64, CharIndex::new(1, 0)), (2, CharIndex::new(1, 1)), (5, CharIndex::new(7, 10))] {
            for s in [2.0, 2.5, 3.0] {
                let r = hhat_p_annulus(p, a, s, PadicTruncation::for_char(a, p)).unwrap();
                assert!((r.s1 + (p as f64).powf(-s)).abs() < 1e-15, "p={p} {a:?} s={s}: {}", r.s1);
            }
        }
        let r = hhat_p_annulus(3, CharIndex::new(1, 0), 2.0, PadicTruncation::new(9, 18).unwrap()).unwrap();
        assert!((r.s1 + 1.0 / 9.0).abs() < 1e-16);
    }

    #[test]
    fn truncation_too_small() {
        let a = CharIndex::new(0, 8);
        let err = hhat_p_annulus(2, a, 2.0, PadicTruncation::new(3, 6).unwrap()).unwrap_err();
        assert_eq!(err, Error::TruncationTooSmall { given: 3, required: 5 });
    }

    #[test]
    fn grid_oracle_small() {
        // coarse grid, only a gross-error check here; the acceptance suite
        // runs the full resolution
        let g = hhat_p_grid_oracle(2, CharIndex::new(0, 1), 2.0, GridParams { j: 5, k: 3, seed: 1 }).unwrap();
        assert!((g.re - 21.0 / 16.0).abs() < 0.05, "{g}");
        let g2 = hhat_p_grid_oracle(2, CharIndex::new(0, 1), 2.0, GridParams { j: 5, k: 3, seed: 99 }).unwrap();
        assert_eq!(g, g2);
    }
}
