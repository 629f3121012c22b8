//! Points per line against `π / (2ζ(2) sqrt(f))`.
//!
//! cargo run --example line_densities -- 500 10

use cayley::enumeration::count_line;
use cayley::report::{cmd_lines, line_prediction, RunOptions};
use cayley::{HeightBound, LineIndex};

fn main() -> cayley::Result<()> {
    let mut args = std::env::args().skip(1);
    let b: u64 = args.next().map_or(500, |s| s.parse().expect("B must be an integer"));
    let top: usize = args.next().map_or(10, |s| s.parse().expect("N must be an integer"));
    let bound = HeightBound::from_b(b);

    println!("{:>5} {:>4} {:>6} {:>9} {:>10} {:>10} {:>7}", "λ", "μ", "f", "count", "count/B²", "predicted", "ratio");
    for r in cmd_lines(&bound, top, &RunOptions::default())?.rows {
        println!(
            "{:>5} {:>4} {:>6} {:>9} {:>10.6} {:>10.6} {:>7.4}",
            r.lambda, r.mu, r.f, r.count, r.density, r.prediction, r.ratio
        );
    }

    // the base line converges like B^-1
    let y = LineIndex::new(0, 1)?;
    for b in [250u64, 500, 1000, 2000] {
        let n = count_line(y, &HeightBound::from_b(b));
        println!("(0,1) at B = {b:>4}: ratio {:.5}", n as f64 / (b * b) as f64 / line_prediction(y));
    }
    Ok(())
}
