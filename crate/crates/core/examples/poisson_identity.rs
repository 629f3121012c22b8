//! The constant as a sum over characters, and the identity relating it to
//! the series over lines.
//!
//! cargo run --release --example poisson_identity

use cayley::local_zeta::{e_m, lattice_ordering_identity, poisson_constant, poisson_identity_check};

fn main() -> cayley::Result<()> {
    for m in [0, 1, 2, 6] {
        let e = e_m(m, 100_000, 1e-12)?;
        println!("E_{m}(2): closed {:.12e}, Euler product {:.12e}", e.closed, e.euler);
    }

    let c = poisson_constant(50, 1e-12)?;
    println!("Poisson constant (M = 50) = {:.9}, last term {:.1e}", c.value, c.last_term);

    let id = poisson_identity_check(2000, 50)?;
    println!("lhs = {:.10}", id.lhs);
    println!("half the full series    = {:.10}  ratio {:.5}", id.rhs_printed, id.ratio_printed);
    println!("quarter the full series = {:.10}  ratio {:.5}", id.rhs_derived, id.ratio_derived);

    let l = lattice_ordering_identity(300);
    println!(
        "lattice sums at N = 300: f(v,n) {:.10}, f(n,v) {:.10}, 2·quadrant + ζ(3) {:.10}",
        l.sum_vn, l.sum_nv, l.combined
    );
    Ok(())
}
