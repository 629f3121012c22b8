//! The real Fourier transform of the height: the one-dimensional cosine
//! integrals and the full two-dimensional quadrature.
//!
//! cargo run --release --example archimedean_transform

use cayley::local_zeta::{hhat_inf, hhat_inf_2d, i_integral};
use cayley::CharIndex;

fn main() -> cayley::Result<()> {
    for m in 0..8 {
        let i = i_integral(m, 1e-13)?;
        println!("I({m}) = {:>22.15e}  ± {:.1e}", i.value, i.error);
    }

    for a2 in 0..=2 {
        let a = CharIndex::new(0, a2);
        let one = hhat_inf(2.0, a, 1e-10)?;
        let two = hhat_inf_2d(2.0, a, 1e-6)?;
        println!("Ĥ_∞(2; 0, {a2}): {} {:.10}, {} {:.10}", one.method, one.re, two.method, two.re);
    }

    for k in 1..=4 {
        let v = hhat_inf(2.0, CharIndex::new(k, k), 1e-6)?;
        println!("|Ĥ_∞(2; {k}, {k})| = {:.3e}", v.value().norm());
    }

    let v = hhat_inf(3.0, CharIndex::new(0, 0), 1e-6)?;
    println!("Ĥ_∞(3; 0, 0) = {:.8}", v.re);
    Ok(())
}
