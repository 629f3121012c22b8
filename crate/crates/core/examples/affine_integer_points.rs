//! Integral points on the two affine models, for growing boxes.
//!
//! cargo run --release --example affine_integer_points

use cayley::enumeration::{count_affine_integers, AffineModel};

fn main() -> cayley::Result<()> {
    for model in [AffineModel::M1, AffineModel::M2] {
        let mut prev = None;
        for b in [10u64, 100, 1000, 10_000] {
            let n = count_affine_integers(model, b)?;
            let growth = prev.map_or(String::new(), |p: u64| format!("  x{:.2}", n as f64 / p as f64));
            println!("{model:?} B = {b:>5}: {n:>8}{growth}");
            prev = Some(n);
        }
    }
    Ok(())
}
