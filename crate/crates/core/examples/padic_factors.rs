//! The p-adic Fourier transform of the height by every available method.
//!
//! cargo run --release --example padic_factors

use cayley::local_zeta::{
    hhat_p_annulus, hhat_p_closed, hhat_p_components, hhat_p_grid_oracle, sigma_minus2, GridParams, PadicTruncation,
};
use cayley::CharIndex;

fn main() -> cayley::Result<()> {
    for p in [2u64, 3, 5] {
        for alpha in 0..=2u32 {
            let a = CharIndex::new(0, p.pow(alpha) as i64);
            let exact = hhat_p_closed(p, Some(alpha))?;
            let parts = hhat_p_components(p, Some(alpha))?;
            assert_eq!(parts.total(), exact);
            let ann = hhat_p_annulus(p, a, 2.0, PadicTruncation::for_char(a, p))?;
            println!(
                "p={p} α={alpha}: closed {exact:<16} annulus {:.12} (±{:.0e})   S1 = {}",
                ann.value.re, ann.tail, parts.s1
            );
        }
    }

    // a character that is nontrivial in both variables
    let a = CharIndex::new(1, 1);
    for p in [2u64, 3] {
        let ann = hhat_p_annulus(p, a, 2.0, PadicTruncation::for_char(a, p))?;
        let grid = hhat_p_grid_oracle(p, a, 2.0, GridParams::default_for(p))?;
        println!("p={p} a=(1,1): annulus {:.10}, grid oracle {:.6}", ann.value.re, grid.re);
    }

    // general s only numerically
    let a = CharIndex::new(0, 1);
    for s in [2.0, 2.5, 3.0] {
        let v = hhat_p_annulus(2, a, s, PadicTruncation::for_char(a, 2))?;
        println!("p=2 a=(0,1) s={s}: {:.12}", v.value.re);
    }

    println!("σ_-2(12) = {:?}", sigma_minus2(12));
    Ok(())
}
