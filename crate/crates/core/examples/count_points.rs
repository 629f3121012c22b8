//! Count points of bounded height two ways and list the smallest ones.
//!
//! cargo run --example count_points -- 30

use cayley::enumeration::{count_by_lines, count_direct, enumerate_by_lines, height_histogram, z_partial};
use cayley::geometry::{is_on_v, line_of_point};
use cayley::heights::height_proj;
use cayley::HeightBound;

fn main() -> cayley::Result<()> {
    let b: HeightBound = std::env::args().nth(1).as_deref().unwrap_or("30").parse()?;

    let lines = count_by_lines(&b);
    println!("N(V; B) with B^2 = {}: {lines}", b.b_squared());
    if b.floor_b_squared() <= 900 {
        let direct = count_direct(&b)?;
        println!("direct search agrees: {}", direct == lines);
    }
    println!("N / B^2 = {:.6}", lines as f64 / b.b_f64().powi(2));

    println!("\nlowest points:");
    for r in enumerate_by_lines(&HeightBound::from_b(2)).iter().take(8) {
        let t = r.to_proj();
        assert!(is_on_v(&t) && line_of_point(&t)? == r.line);
        println!("  {t}  H^2 = {}  line {}  tau = ({}, {})", height_proj(&t), r.line, r.tau.tau0, r.tau.tau1);
    }

    let small = HeightBound::from_b(5);
    println!("\nheight multiplicities up to H^2 = 25:");
    for (h2, n) in height_histogram(&small) {
        print!(" {h2}:{n}");
    }
    println!("\nsum of H^-3 over those points: {:.9}", z_partial(3.0, &small)?);
    Ok(())
}
