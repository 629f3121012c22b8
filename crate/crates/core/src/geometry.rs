//! Exact algebra of the Cayley ruled cubic
//! `W: t0*t1*t2 - t0^2*t3 - t1^3 = 0`, its desingularisation by the cubic
//! scroll, the ruling by lines, and the additive group acting on it.
//!
//! Nothing in this module uses floating point.

use std::fmt;
use std::ops::{Add, Neg};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// A rational point of P^3, stored as the primitive integer vector whose
/// first nonzero coordinate is positive.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjPoint {
    t: [BigInt; 4],
}

impl ProjPoint {
    /// Normalizes any nonzero integer vector to its projective representative.
    pub fn new(t: [BigInt; 4]) -> Result<Self> {
        let g = t.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        if g.is_zero() {
            return Err(Error::ZeroVector);
        }
        let lead_negative = t.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative());
        let g = if lead_negative { -g } else { g };
        Ok(ProjPoint { t: t.map(|x| x / &g) })
    }

    pub fn from_i64(t: [i64; 4]) -> Result<Self> {
        Self::new(t.map(BigInt::from))
    }

    /// Clears denominators of a rational vector.
    pub fn from_rationals(q: [BigRational; 4]) -> Result<Self> {
        let l = q.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        Self::new(q.map(|x| (x * &l).to_integer()))
    }

    pub fn coords(&self) -> &[BigInt; 4] {
        &self.t
    }

    pub fn to_i64(&self) -> Option<[i64; 4]> {
        Some([self.t[0].to_i64()?, self.t[1].to_i64()?, self.t[2].to_i64()?, self.t[3].to_i64()?])
    }

    pub fn cubic_form(&self) -> BigInt {
        cubic_form(&self.t)
    }
}

impl fmt::Debug for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.t[0], self.t[1], self.t[2], self.t[3])
    }
}

/// `t0*t1*t2 - t0^2*t3 - t1^3`, exact.
pub fn cubic_form(t: &[BigInt; 4]) -> BigInt {
    &t[0] * &t[1] * &t[2] - &t[0] * &t[0] * &t[3] - &t[1] * &t[1] * &t[1]
}

/// Machine-integer version for the counting loops; `None` on overflow.
pub fn cubic_form_i64(t: [i64; 4]) -> Option<i128> {
    let [t0, t1, t2, t3] = t.map(i128::from);
    let a = t0.checked_mul(t1)?.checked_mul(t2)?;
    let b = t0.checked_mul(t0)?.checked_mul(t3)?;
    let c = t1.checked_mul(t1)?.checked_mul(t1)?;
    a.checked_sub(b)?.checked_sub(c)
}

pub fn is_on_w(t: &ProjPoint) -> bool {
    t.cubic_form().is_zero()
}

/// On the surface and off the double line `t0 = t1 = 0`.
pub fn is_on_v(t: &ProjPoint) -> bool {
    is_on_w(t) && !(t.t[0].is_zero() && t.t[1].is_zero())
}

/// A point of the scroll `X ⊂ P^2 × P^1` cut out by `x1*y2 = x2*y1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScrollPoint {
    pub x: [BigRational; 3],
    pub y: [BigRational; 2],
}

impl ScrollPoint {
    pub fn new(x: [BigRational; 3], y: [BigRational; 2]) -> Result<Self> {
        if x.iter().all(Zero::is_zero) || y.iter().all(Zero::is_zero) {
            return Err(Error::InvalidScrollPoint("zero factor".into()));
        }
        if &x[1] * &y[1] != &x[2] * &y[0] {
            return Err(Error::InvalidScrollPoint(format!(
                "x1*y2 != x2*y1 for ({}, {}, {}; {}, {})",
                x[0], x[1], x[2], y[0], y[1]
            )));
        }
        Ok(ScrollPoint { x, y })
    }

    pub fn from_i64(x: [i64; 3], y: [i64; 2]) -> Result<Self> {
        Self::new(x.map(int_rat), y.map(int_rat))
    }

    /// Equality as a point of `P^2 × P^1`.
    pub fn same_point(&self, other: &ScrollPoint) -> bool {
        proportional(&self.x, &other.x) && proportional(&self.y, &other.y)
    }
}

fn int_rat(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn proportional<const N: usize>(a: &[BigRational; N], b: &[BigRational; N]) -> bool {
    (0..N).all(|i| (0..N).all(|j| &a[i] * &b[j] == &a[j] * &b[i]))
}

/// The desingularisation `X → W`.
pub fn phi(s: &ScrollPoint) -> Result<ProjPoint> {
    let [x0, x1, x2] = &s.x;
    let [y1, y2] = &s.y;
    let img = [x1 * y1, x1 * y2, x0 * y1 + x2 * y2, x0 * y2];
    ProjPoint::from_rationals(img)
}

/// Inverse of `phi` over `V`, landing in the chart `x1 = y1 = 1`.
pub fn phi_inverse_on_v(t: &ProjPoint) -> Result<ScrollPoint> {
    if !is_on_v(t) {
        return Err(Error::NotOnV(t.to_string()));
    }
    let [t0, t1, t2, _] = t.coords();
    let r1 = BigRational::new(t1.clone(), t0.clone());
    let r2 = BigRational::new(t2.clone(), t0.clone());
    let x0 = &r2 - &r1 * &r1;
    ScrollPoint::new([x0, BigRational::one(), r1.clone()], [BigRational::one(), r1])
}

/// A line `V_y` of the ruling, `y = (lambda : mu)` with `mu >= 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub struct LineIndex {
    pub lambda: i64,
    pub mu: i64,
}

impl LineIndex {
    pub fn new(lambda: i64, mu: i64) -> Result<Self> {
        if mu < 1 || lambda.gcd(&mu) != 1 {
            return Err(Error::InvalidLineIndex { lambda, mu });
        }
        Ok(LineIndex { lambda, mu })
    }

    /// Normalized representative of `(lambda : mu)` for any pair with `mu != 0`.
    pub fn normalized(lambda: i64, mu: i64) -> Result<Self> {
        if mu == 0 {
            return Err(Error::InvalidLineIndex { lambda, mu });
        }
        let g = lambda.gcd(&mu) * mu.signum();
        Self::new(lambda / g, mu / g)
    }

    /// The sextic `f(lambda, mu) = λ^6 + 2λ^4μ^2 + λ^2μ^4 + μ^6`.
    pub fn discriminant_f(&self) -> i128 {
        sextic_f(self.lambda as i128, self.mu as i128)
    }

    /// The exact squared norm of `param_line` as a binary quadratic form in
    /// `(tau0, tau1)`.
    pub fn quad_form(&self) -> LineQuadForm {
        let (l, m) = (self.lambda as i128, self.mu as i128);
        let (l2, m2) = (l * l, m * m);
        LineQuadForm { a: l2 * l2 + l2 * m2 + m2 * m2, b2: l2 * m, c: l2 + m2 }
    }

    /// Determinant of [`LineIndex::quad_form`]; equals `f(mu, lambda)`.
    pub fn line_discriminant(&self) -> i128 {
        self.quad_form().det()
    }

    /// Both defining equations `λt0 − μt1` and `λμt2 − λ²t1 − μ²t3`.
    pub fn equations(&self, t: &ProjPoint) -> (BigInt, BigInt) {
        let (l, m) = (BigInt::from(self.lambda), BigInt::from(self.mu));
        let [t0, t1, t2, t3] = t.coords();
        let e1 = &l * t0 - &m * t1;
        let e2 = &l * &m * t2 - &l * &l * t1 - &m * &m * t3;
        (e1, e2)
    }
}

impl fmt::Display for LineIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.lambda, self.mu)
    }
}

pub fn sextic_f(l: i128, m: i128) -> i128 {
    let (l2, m2) = (l * l, m * m);
    l2 * l2 * l2 + 2 * l2 * l2 * m2 + l2 * m2 * m2 + m2 * m2 * m2
}

/// `Q(tau0, tau1) = a*tau0^2 + 2*b2*tau0*tau1 + c*tau1^2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LineQuadForm {
    pub a: i128,
    pub b2: i128,
    pub c: i128,
}

impl LineQuadForm {
    pub fn eval(&self, tau0: i128, tau1: i128) -> i128 {
        self.a * tau0 * tau0 + 2 * self.b2 * tau0 * tau1 + self.c * tau1 * tau1
    }

    pub fn det(&self) -> i128 {
        self.a * self.c - self.b2 * self.b2
    }
}

/// Coordinates `(tau0, tau1)` on a line, primitive with `tau0 >= 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LineParam {
    pub tau0: i64,
    pub tau1: i64,
}

impl LineParam {
    pub fn new(tau0: i64, tau1: i64) -> Result<Self> {
        if tau0 == 0 || tau0.gcd(&tau1) != 1 {
            return Err(Error::InvalidLineParam { tau0, tau1 });
        }
        let s = tau0.signum();
        Ok(LineParam { tau0: s * tau0, tau1: s * tau1 })
    }
}

/// The point with parameters `tau` on the line `y`.
pub fn param_line(y: LineIndex, tau: LineParam) -> ProjPoint {
    let raw = param_line_raw(y, tau.tau0, tau.tau1);
    ProjPoint::new(raw.map(BigInt::from)).expect("tau0 != 0 and mu != 0 give t0 != 0")
}

/// `(μ²τ0, λμτ0, λ²τ0 + μτ1, λτ1)` without normalization.
pub fn param_line_raw(y: LineIndex, tau0: i64, tau1: i64) -> [i128; 4] {
    let (l, m) = (y.lambda as i128, y.mu as i128);
    let (t0, t1) = (tau0 as i128, tau1 as i128);
    [m * m * t0, l * m * t0, l * l * t0 + m * t1, l * t1]
}

/// The unique line of the ruling through a point of `V`.
pub fn line_of_point(t: &ProjPoint) -> Result<LineIndex> {
    if !is_on_v(t) {
        return Err(Error::NotOnV(t.to_string()));
    }
    let [t0, t1, ..] = t.coords();
    let g = t0.gcd(t1);
    let lambda = (t1 / &g).to_i64().ok_or_else(|| Error::Overflow(t.to_string()))?;
    let mu = (t0 / &g).to_i64().ok_or_else(|| Error::Overflow(t.to_string()))?;
    LineIndex::normalized(lambda, mu)
}

/// Recovers `(y, tau)` with `param_line(y, tau) = t`.
pub fn line_param_of_point(t: &ProjPoint) -> Result<(LineIndex, LineParam)> {
    let y = line_of_point(t)?;
    let [t0, _, t2, _] = t.coords();
    let (l, m) = (BigInt::from(y.lambda), BigInt::from(y.mu));
    let tau0 = t0 / (&m * &m);
    let tau1 = (t2 - &l * &l * &tau0) / &m;
    let conv = |v: BigInt| v.to_i64().ok_or_else(|| Error::Overflow(t.to_string()));
    let tau = LineParam::new(conv(tau0)?, conv(tau1)?)?;
    Ok((y, tau))
}

/// A point of `G ≅ G_a^2`, written in the coordinates of the action.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupPoint {
    pub x: BigRational,
    pub y: BigRational,
}

impl GroupPoint {
    pub fn new(x: BigRational, y: BigRational) -> Self {
        GroupPoint { x, y }
    }

    pub fn from_i64(x: i64, y: i64) -> Self {
        GroupPoint::new(int_rat(x), int_rat(y))
    }

    pub fn identity() -> Self {
        GroupPoint::from_i64(0, 0)
    }

    /// `xy − y³`, the third affine coordinate of the embedded point.
    pub fn z(&self) -> BigRational {
        &self.x * &self.y - &self.y * &self.y * &self.y
    }
}

/// Composition compatible with [`group_act`]: `(x,y)+(x',y') = (x+x'+3yy', y+y')`.
pub fn group_add(g: &GroupPoint, h: &GroupPoint) -> GroupPoint {
    let three = int_rat(3);
    GroupPoint { x: &g.x + &h.x + three * &g.y * &h.y, y: &g.y + &h.y }
}

pub fn group_neg(g: &GroupPoint) -> GroupPoint {
    let three = int_rat(3);
    GroupPoint { x: -&g.x + three * &g.y * &g.y, y: -&g.y }
}

impl Add for &GroupPoint {
    type Output = GroupPoint;
    fn add(self, rhs: &GroupPoint) -> GroupPoint {
        group_add(self, rhs)
    }
}

impl Neg for &GroupPoint {
    type Output = GroupPoint;
    fn neg(self) -> GroupPoint {
        group_neg(self)
    }
}

/// `(x,y)·t = (t0, t1+y t0, t2+x t0+3y t1, t3+x t1+y t2+(xy−y³) t0)`.
pub fn group_act(g: &GroupPoint, t: &ProjPoint) -> Result<ProjPoint> {
    if !is_on_w(t) {
        return Err(Error::NotOnSurface(t.to_string()));
    }
    let [t0, t1, t2, t3] = t.coords().clone().map(BigRational::from_integer);
    let three = int_rat(3);
    let img = [
        t0.clone(),
        &t1 + &g.y * &t0,
        &t2 + &g.x * &t0 + three * &g.y * &t1,
        &t3 + &g.x * &t1 + &g.y * &t2 + g.z() * &t0,
    ];
    ProjPoint::from_rationals(img)
}

fn base_point() -> ProjPoint {
    ProjPoint::from_i64([1, 0, 0, 0]).unwrap()
}

/// The orbit map `g ↦ g·(1:0:0:0)`, a bijection `G(Q) → V(Q)`.
pub fn embed_group_point(g: &GroupPoint) -> ProjPoint {
    group_act(g, &base_point()).expect("base point lies on W")
}
