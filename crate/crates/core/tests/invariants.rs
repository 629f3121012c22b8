//! Exhaustive cross-module invariants over small heights.

use std::collections::HashMap;

use cayley::constants::series_s_half;
use cayley::enumeration::{
    count_by_lines, count_direct, count_line, enumerate_by_lines, enumerate_direct, line_counts, stream_points,
    z_partial,
};
use cayley::geometry::{line_of_point, line_param_of_point, param_line, phi, phi_inverse_on_v};
use cayley::heights::height_proj;
use cayley::local_zeta::{hhat_inf, CharIndex};
use cayley::HeightBound;

#[test]
fn points_up_to_height_30_round_trip() {
    for r in enumerate_by_lines(&HeightBound::from_b(30)) {
        let t = r.to_proj();
        assert_eq!(phi(&phi_inverse_on_v(&t).unwrap()).unwrap(), t);
        let (y, tau) = line_param_of_point(&t).unwrap();
        assert_eq!((y, tau), (r.line, r.tau));
        assert_eq!(param_line(y, tau), t);
        assert_eq!(height_proj(&t), r.h2.into());
    }
}

#[test]
fn direct_points_partition_by_line() {
    let b = HeightBound::from_b_squared_int(900).unwrap();
    let mut by_line: HashMap<_, u64> = HashMap::new();
    for t in enumerate_direct(&b).unwrap() {
        *by_line.entry(line_of_point(&t).unwrap()).or_default() += 1;
    }
    let per_line = line_counts(&b);
    assert_eq!(per_line.len(), by_line.len());
    for (y, n) in &per_line {
        assert_eq!(by_line[y], *n, "line {y}");
        assert_eq!(count_line(*y, &b), *n);
    }
    assert_eq!(per_line.iter().map(|p| p.1).sum::<u64>(), count_by_lines(&b));
    assert_eq!(count_direct(&b).unwrap(), count_by_lines(&b));
}

#[test]
fn stream_yields_every_point_once() {
    let b = HeightBound::from_b(40);
    let mut streamed: Vec<_> = stream_points(&b, 64).collect();
    streamed.sort();
    assert_eq!(streamed, enumerate_by_lines(&b));
}

#[test]
fn growth_is_quadratic() {
    for b in (10..=1000).step_by(10) {
        let r = count_by_lines(&HeightBound::from_b(b)) as f64 / (b * b) as f64;
        assert!(r < 10.0, "B = {b}: {r}");
    }
}

#[test]
fn zeta_partial_matches_line_decomposition() {
    let b = HeightBound::from_b_squared_int(900).unwrap();
    let from_lines: f64 = enumerate_by_lines(&b).iter().map(|r| (r.h2 as f64).powf(-1.5)).sum();
    let z = z_partial(3.0, &b).unwrap();
    assert!(z <= 1.0 + from_lines);
    assert!((z - from_lines).abs() < 1e-12);
}

#[test]
fn series_is_monotone_with_valid_tail() {
    let mut prev = series_s_half(50).unwrap();
    for t in [100u64, 200, 400, 800] {
        let cur = series_s_half(t).unwrap();
        assert!(cur.value >= prev.value);
        assert!(cur.value - prev.value <= prev.tail_bound);
        prev = cur;
    }
}

#[test]
fn archimedean_transform_decays() {
    let tol = 1e-6;
    let mags: Vec<f64> = (1..=8).map(|k| hhat_inf(2.0, CharIndex::new(k, k), tol).unwrap().value().norm()).collect();
    for w in mags.windows(2) {
        assert!(w[1] <= w[0] + 2.0 * tol, "{mags:?}");
    }
    let near = hhat_inf(2.0, CharIndex::new(1, 1), tol).unwrap().value().norm();
    let far = hhat_inf(2.0, CharIndex::new(5, 5), tol).unwrap().value().norm();
    assert!(far < near);
}
