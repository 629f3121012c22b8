//! The additive group acting on the surface, its orbit of `(1:0:0:0)`, and
//! heights read off in group coordinates.

use cayley::geometry::{embed_group_point, group_act, phi, phi_inverse_on_v};
use cayley::heights::{height_affine, height_proj};
use cayley::{GroupPoint, ProjPoint};
use num_rational::BigRational;

fn show(g: &GroupPoint) -> String {
    format!("({}, {})", g.x, g.y)
}

fn main() -> cayley::Result<()> {
    let g = GroupPoint::from_i64(1, 2);
    let h = GroupPoint::from_i64(3, 4);
    println!("{} + {} = {}", show(&g), show(&h), show(&(&g + &h)));
    println!("-{} = {}", show(&g), show(&-&g));

    let t = ProjPoint::from_i64([4, 2, 3, 1])?;
    let gh_t = group_act(&g, &group_act(&h, &t)?)?;
    assert_eq!(gh_t, group_act(&(&g + &h), &t)?);
    println!("g·(h·{t}) = {gh_t}");

    let q = GroupPoint::new(BigRational::new(1.into(), 2.into()), BigRational::new((-1).into(), 3.into()));
    let e = embed_group_point(&q);
    println!("orbit point of {}: {e}, H^2 = {} = {}", show(&q), height_proj(&e), height_affine(&q));

    let s = phi_inverse_on_v(&e)?;
    assert_eq!(phi(&s)?, e);
    println!("on the scroll: x = ({}:{}:{}), y = ({}:{})", s.x[0], s.x[1], s.x[2], s.y[0], s.y[1]);
    Ok(())
}
