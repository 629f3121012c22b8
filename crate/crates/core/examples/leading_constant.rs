//! The leading constant from the lattice series, from Tamagawa volumes, and
//! the empirical count it should predict.
//!
//! cargo run --release --example leading_constant

use cayley::constants::{bt_constant, euler_product_inv_zeta2, predicted_constant, zeta2};
use cayley::enumeration::count_by_lines;
use cayley::report::{adjudicate, ADJUDICATION_THRESHOLD};
use cayley::HeightBound;

fn main() -> cayley::Result<()> {
    let pc = predicted_constant(2000)?;
    println!("half series S(2000) = {:.8} (tail < {:.1e})", pc.series.value, pc.series.tail_bound);
    println!("c_derived = {:.6}", pc.c_derived);
    println!("c_printed = {:.6}", pc.c_printed);

    let e = euler_product_inv_zeta2(100_000);
    println!("prod (1 - p^-2), p <= 1e5 = {:.9}  vs 1/ζ(2) = {:.9}", e.value, 1.0 / zeta2());
    let bt = bt_constant(2000, 100_000)?;
    println!("sum of line Tamagawa volumes = {:.6}", bt.value);

    let b = 1000u64;
    let r = count_by_lines(&HeightBound::from_b(b)) as f64 / (b * b) as f64;
    println!("N(V; {b}) / {b}^2 = {r:.6}");
    println!("verdict: {:?}", adjudicate(r, pc.c_derived, pc.c_printed, ADJUDICATION_THRESHOLD));
    Ok(())
}
