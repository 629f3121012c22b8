//! Exact counts of points of `V` with height at most `B`.
//!
//! Two independent algorithms: a direct search over coordinate boxes (the
//! slow oracle) and a sum over the lines of the ruling, where each line is a
//! primitive-lattice-point count inside an ellipse.

use std::collections::BTreeMap;
use std::io::Write;
use std::str::FromStr;
use std::sync::mpsc::{sync_channel, Receiver};
use std::thread::JoinHandle;

use num_integer::{Integer, Roots};
use rayon::prelude::*;

use crate::arith::{count_coprime_in, signed_squarefree_divisors, CompensatedSum, SpfTable};
use crate::error::{Error, Result};
use crate::geometry::{param_line_raw, LineIndex, LineParam, ProjPoint};
use crate::heights::HeightBound;

/// Largest `B^2` the direct search accepts unless a cap is passed explicitly.
pub const DEFAULT_DIRECT_CAP: u64 = 10_000;

/// One enumerated point with its line coordinates. The derived order is
/// `(h2, t0, t1, t2, t3)`, the order used for CSV dumps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PointRecord {
    pub h2: u64,
    pub t: [i64; 4],
    pub line: LineIndex,
    pub tau: LineParam,
}

impl PointRecord {
    fn on_line(y: LineIndex, tau: LineParam) -> Self {
        let t = param_line_raw(y, tau.tau0, tau.tau1).map(|v| v as i64);
        let h2 = t.iter().map(|&v| (v as i128 * v as i128) as u64).sum();
        PointRecord { h2, t, line: y, tau }
    }

    pub fn to_proj(&self) -> ProjPoint {
        ProjPoint::from_i64(self.t).expect("enumerated points are nonzero")
    }
}

fn check_cap(b: &HeightBound, cap: u64) -> Result<u64> {
    let n = b.floor_b_squared();
    if n > cap {
        return Err(Error::DirectCapExceeded { b_squared: b.b_squared().to_string(), cap });
    }
    Ok(n)
}

/// All primitive `t` with `t0 >= 1` on `W` and `|t|^2 <= n`, for one value of `t0`.
fn direct_stripe(t0: i64, n: i64, mut emit: impl FnMut([i64; 4])) {
    let r0 = n - t0 * t0;
    let m1 = r0.sqrt();
    let t00 = t0 * t0;
    for t1 in -m1..=m1 {
        let r1 = r0 - t1 * t1;
        let m2 = r1.sqrt();
        for t2 in -m2..=m2 {
            let num = t0 * t1 * t2 - t1 * t1 * t1;
            if num % t00 != 0 {
                continue;
            }
            let t3 = num / t00;
            if t3 * t3 > r1 - t2 * t2 {
                continue;
            }
            if t0.gcd(&t1).gcd(&t2).gcd(&t3) == 1 {
                emit([t0, t1, t2, t3]);
            }
        }
    }
}

pub fn count_direct(b: &HeightBound) -> Result<u64> {
    count_direct_with_cap(b, DEFAULT_DIRECT_CAP)
}

pub fn count_direct_with_cap(b: &HeightBound, cap: u64) -> Result<u64> {
    let n = check_cap(b, cap)? as i64;
    Ok((1..=n.sqrt())
        .into_par_iter()
        .map(|t0| {
            let mut c = 0u64;
            direct_stripe(t0, n, |_| c += 1);
            c
        })
        .sum())
}

/// The points counted by [`count_direct`], in `(t0, t1, t2)` order.
pub fn enumerate_direct(b: &HeightBound) -> Result<Vec<ProjPoint>> {
    let n = check_cap(b, DEFAULT_DIRECT_CAP)? as i64;
    let stripes: Vec<Vec<[i64; 4]>> = (1..=n.sqrt())
        .into_par_iter()
        .map(|t0| {
            let mut v = Vec::new();
            direct_stripe(t0, n, |t| v.push(t));
            v
        })
        .collect();
    Ok(stripes.into_iter().flatten().map(|t| ProjPoint::from_i64(t).expect("nonzero")).collect())
}

/// Shared state for scanning many lines at one height bound.
struct LineScan {
    n: i128,
    spf: SpfTable,
}

impl LineScan {
    fn new(b: &HeightBound) -> Self {
        let n = b.floor_b_squared();
        LineScan { n: n as i128, spf: SpfTable::new(n.sqrt() as usize + 1) }
    }

    /// Calls `visit(tau0, lo, hi)` for every `tau0 >= 1` whose `tau1`-interval
    /// `[lo, hi]` is nonempty.
    fn intervals(&self, y: LineIndex, mut visit: impl FnMut(i64, i64, i64)) {
        let q = y.quad_form();
        let det = q.det();
        let mut tau0: i128 = 1;
        loop {
            // |C tau1 + B2 tau0| <= sqrt(C n - det tau0^2)
            let d = q.c * self.n - det * tau0 * tau0;
            if d < 0 {
                break;
            }
            let s = d.sqrt();
            let lo = Integer::div_ceil(&(-s - q.b2 * tau0), &q.c);
            let hi = Integer::div_floor(&(s - q.b2 * tau0), &q.c);
            if lo <= hi {
                visit(tau0 as i64, lo as i64, hi as i64);
            }
            tau0 += 1;
        }
    }

    fn count(&self, y: LineIndex) -> u64 {
        let mut total = 0i64;
        self.intervals(y, |tau0, lo, hi| {
            let divs = signed_squarefree_divisors(&self.spf.distinct_primes(tau0 as usize));
            total += count_coprime_in(lo, hi, &divs);
        });
        total as u64
    }

    fn params(&self, y: LineIndex, mut emit: impl FnMut(LineParam)) {
        self.intervals(y, |tau0, lo, hi| {
            for tau1 in lo..=hi {
                if tau0.gcd(&tau1) == 1 {
                    emit(LineParam { tau0, tau1 });
                }
            }
        });
    }
}

/// Number of points of height `<= B` on the line `y`.
pub fn count_line(y: LineIndex, b: &HeightBound) -> u64 {
    LineScan::new(b).count(y)
}

/// The line parameters of those points, ordered by `(tau0, tau1)`.
pub fn enumerate_line(y: LineIndex, b: &HeightBound) -> Vec<LineParam> {
    let mut out = Vec::new();
    LineScan::new(b).params(y, |tau| out.push(tau));
    out
}

/// Every line that can carry a point of height `<= B`, in `(lambda, mu)` order.
///
/// Both cutoffs are exact: `lambda^4, mu^4 <= B^2` and
/// `det <= B^2 (lambda^2 + mu^2)` (the minimum of the norm on `tau0 = 1`).
pub fn candidate_lines(b: &HeightBound) -> Vec<LineIndex> {
    let n = b.floor_b_squared() as i128;
    let r = (n.sqrt()).sqrt() as i64;
    let mut out = Vec::new();
    for lambda in -r..=r {
        for mu in 1..=r {
            if lambda.gcd(&mu) != 1 {
                continue;
            }
            let y = LineIndex { lambda, mu };
            let q = y.quad_form();
            if q.det() <= n * q.c {
                out.push(y);
            }
        }
    }
    out
}

/// `N(V;B)` as a sum over lines.
pub fn count_by_lines(b: &HeightBound) -> u64 {
    let scan = LineScan::new(b);
    candidate_lines(b).par_iter().map(|&y| scan.count(y)).sum()
}

/// Per-line counts, nonzero only, in `(lambda, mu)` order.
pub fn line_counts(b: &HeightBound) -> Vec<(LineIndex, u64)> {
    let scan = LineScan::new(b);
    let counts: Vec<(LineIndex, u64)> = candidate_lines(b).par_iter().map(|&y| (y, scan.count(y))).collect();
    counts.into_iter().filter(|&(_, c)| c > 0).collect()
}

/// Points of height `<= B` streamed line by line from a producer thread.
///
/// The channel is bounded, so a slow consumer throttles the producer; dropping
/// the stream stops it.
pub struct PointStream {
    rx: Receiver<PointRecord>,
    handle: Option<JoinHandle<()>>,
}

impl Iterator for PointStream {
    type Item = PointRecord;
    fn next(&mut self) -> Option<PointRecord> {
        match self.rx.recv() {
            Ok(p) => Some(p),
            Err(_) => {
                if let Some(h) = self.handle.take() {
                    let _ = h.join();
                }
                None
            }
        }
    }
}

pub fn stream_points(b: &HeightBound, capacity: usize) -> PointStream {
    let (tx, rx) = sync_channel(capacity.max(1));
    let b = b.clone();
    let handle = std::thread::spawn(move || {
        let scan = LineScan::new(&b);
        for y in candidate_lines(&b) {
            let mut stop = false;
            scan.params(y, |tau| {
                if !stop && tx.send(PointRecord::on_line(y, tau)).is_err() {
                    stop = true;
                }
            });
            if stop {
                return;
            }
        }
    });
    PointStream { rx, handle: Some(handle) }
}

/// All points of height `<= B`, sorted by `(h2, t)`.
pub fn enumerate_by_lines(b: &HeightBound) -> Vec<PointRecord> {
    let scan = LineScan::new(b);
    let mut pts: Vec<PointRecord> = candidate_lines(b)
        .par_iter()
        .flat_map_iter(|&y| {
            let mut v = Vec::new();
            scan.params(y, |tau| v.push(PointRecord::on_line(y, tau)));
            v
        })
        .collect();
    pts.sort_unstable();
    pts
}

/// CSV with columns `t0,t1,t2,t3,lambda,mu,tau0,tau1,h2`.
pub fn write_csv<W: Write>(points: &[PointRecord], out: W) -> std::io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["t0", "t1", "t2", "t3", "lambda", "mu", "tau0", "tau1", "h2"])?;
    for p in points {
        let [t0, t1, t2, t3] = p.t;
        w.serialize((t0, t1, t2, t3, p.line.lambda, p.line.mu, p.tau.tau0, p.tau.tau1, p.h2))?;
    }
    w.flush()
}

/// Number of points of each squared height `<= B^2`.
pub fn height_histogram(b: &HeightBound) -> BTreeMap<u64, u64> {
    let scan = LineScan::new(b);
    let partial: Vec<BTreeMap<u64, u64>> = candidate_lines(b)
        .par_iter()
        .map(|&y| {
            let q = y.quad_form();
            let mut m = BTreeMap::new();
            scan.params(y, |tau| {
                *m.entry(q.eval(tau.tau0 as i128, tau.tau1 as i128) as u64).or_insert(0) += 1;
            });
            m
        })
        .collect();
    let mut out = BTreeMap::new();
    for m in partial {
        for (h2, c) in m {
            *out.entry(h2).or_insert(0) += c;
        }
    }
    out
}

/// `sum H(P)^-s` over the points with `H(P) <= B`.
pub fn z_partial(s: f64, b: &HeightBound) -> Result<f64> {
    if !(s > 2.0) {
        return Err(Error::OutOfRange(format!("z_partial needs s > 2, got {s}")));
    }
    let mut sum = CompensatedSum::new();
    for (h2, c) in height_histogram(b) {
        sum.add(c as f64 * (h2 as f64).powf(-s / 2.0));
    }
    Ok(sum.value())
}

/// The two affine integral models of `V`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum AffineModel {
    /// `xyz = x^2 + y^3`
    M1,
    /// `xy = x^2 z + y^3`
    M2,
}

impl FromStr for AffineModel {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "m1" => Ok(AffineModel::M1),
            "m2" => Ok(AffineModel::M2),
            _ => Err(Error::OutOfRange(format!("unknown model {s:?} (expected m1 or m2)"))),
        }
    }
}

pub const AFFINE_MAX_B: u64 = 100_000;

/// Integer solutions `(x, y, z) ∈ [-B, B]^3` of the chosen model.
pub fn count_affine_integers(model: AffineModel, b: u64) -> Result<u64> {
    if b > AFFINE_MAX_B {
        return Err(Error::OutOfRange(format!("B = {b} exceeds {AFFINE_MAX_B}")));
    }
    let b = b as i64;
    let count = (-b..=b)
        .into_par_iter()
        .map(|x| {
            let mut c = 0u64;
            for y in -b..=b {
                let (num, den) = match model {
                    AffineModel::M1 => (x * x + y * y * y, x * y),
                    AffineModel::M2 => (x * y - y * y * y, x * x),
                };
                if den == 0 {
                    // the whole z-range solves it iff the constant term vanishes
                    if num == 0 {
                        c += (2 * b + 1) as u64;
                    }
                } else if num % den == 0 && (num / den).abs() <= b {
                    c += 1;
                }
            }
            c
        })
        .sum();
    Ok(count)
}
