//! Randomized invariants across the geometry, height and counting layers.

use cayley::enumeration::{count_by_lines, count_direct_with_cap};
use cayley::geometry::{
    cubic_form, embed_group_point, group_act, group_add, group_neg, is_on_v, is_on_w, line_of_point,
    line_param_of_point, param_line, phi, phi_inverse_on_v, sextic_f,
};
use cayley::heights::{height_affine, height_proj};
use cayley::{GroupPoint, HeightBound, LineIndex, LineParam, ProjPoint, ScrollPoint};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;

fn q() -> impl Strategy<Value = BigRational> {
    (-1000i64..=1000, 1i64..=1000).prop_map(|(n, d)| BigRational::new(n.into(), d.into()))
}

fn group_point() -> impl Strategy<Value = GroupPoint> {
    (q(), q()).prop_map(|(x, y)| GroupPoint::new(x, y))
}

fn line() -> impl Strategy<Value = LineIndex> {
    (-40i64..=40, 1i64..=40)
        .prop_filter("coprime", |(l, m)| l.gcd(m) == 1)
        .prop_map(|(l, m)| LineIndex::new(l, m).unwrap())
}

fn tau() -> impl Strategy<Value = LineParam> {
    (-500i64..=500, -500i64..=500)
        .prop_filter("primitive, tau0 != 0", |(a, b)| *a != 0 && a.gcd(b) == 1)
        .prop_map(|(a, b)| LineParam::new(a, b).unwrap())
}

/// Points of `W`: orbit points, plus points of the double line `t0 = t1 = 0`.
fn point_on_w() -> impl Strategy<Value = ProjPoint> {
    prop_oneof![
        4 => group_point().prop_map(|g| embed_group_point(&g)),
        1 => (-50i64..=50, -50i64..=50)
            .prop_filter("nonzero", |(a, b)| *a != 0 || *b != 0)
            .prop_map(|(a, b)| ProjPoint::from_i64([0, 0, a, b]).unwrap()),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn phi_lands_on_w(x0 in q(), c in q(), y1 in q(), y2 in q()) {
        prop_assume!(!(y1.is_zero() && y2.is_zero()));
        prop_assume!(!(x0.is_zero() && c.is_zero()));
        let s = ScrollPoint::new([x0, &c * &y1, &c * &y2], [y1, y2]).unwrap();
        let t = phi(&s).unwrap();
        prop_assert!(cubic_form(t.coords()).is_zero());
    }

    #[test]
    fn group_axioms(g in group_point(), h in group_point(), k in group_point()) {
        prop_assert_eq!(group_add(&group_add(&g, &h), &k), group_add(&g, &group_add(&h, &k)));
        prop_assert_eq!(group_add(&g, &h), group_add(&h, &g));
        prop_assert_eq!(group_add(&g, &GroupPoint::identity()), g.clone());
        prop_assert_eq!(group_add(&g, &group_neg(&g)), GroupPoint::identity());
    }

    #[test]
    fn action_axioms(g in group_point(), h in group_point(), t in point_on_w()) {
        let gh_t = group_act(&g, &group_act(&h, &t).unwrap()).unwrap();
        prop_assert_eq!(&gh_t, &group_act(&group_add(&g, &h), &t).unwrap());
        prop_assert!(is_on_w(&gh_t));
        prop_assert_eq!(group_act(&GroupPoint::identity(), &t).unwrap(), t);
    }

    #[test]
    fn embedding_is_injective(g in group_point(), h in group_point()) {
        prop_assert_eq!(g == h, embed_group_point(&g) == embed_group_point(&h));
    }

    #[test]
    fn product_formula(g in group_point()) {
        let t = embed_group_point(&g);
        prop_assert_eq!(height_affine(&g), BigRational::from_integer(height_proj(&t)));
    }

    #[test]
    fn sign_normalization_keeps_height(t in prop::array::uniform4(-1000i64..=1000)) {
        prop_assume!(t.iter().any(|&v| v != 0));
        let p = ProjPoint::from_i64(t).unwrap();
        let n = ProjPoint::from_i64(t.map(|v| -v)).unwrap();
        prop_assert_eq!(&p, &n);
        prop_assert_eq!(height_proj(&p), height_proj(&n));
    }

    #[test]
    fn v_is_the_chart_t0_nonzero(t in point_on_w()) {
        prop_assert_eq!(is_on_v(&t), !t.coords()[0].is_zero());
    }

    #[test]
    fn scroll_round_trip(g in group_point()) {
        let t = embed_group_point(&g);
        prop_assert_eq!(phi(&phi_inverse_on_v(&t).unwrap()).unwrap(), t);
    }

    #[test]
    fn line_bijection(y in line(), tau in tau()) {
        let t = param_line(y, tau);
        prop_assert!(is_on_v(&t));
        prop_assert_eq!(line_of_point(&t).unwrap(), y);
        prop_assert_eq!(line_param_of_point(&t).unwrap(), (y, tau));
        // primitive τ gives a primitive vector: the height is the raw norm
        let raw = cayley::geometry::param_line_raw(y, tau.tau0, tau.tau1);
        let norm: BigInt = raw.iter().map(|&v| BigInt::from(v) * BigInt::from(v)).sum();
        prop_assert_eq!(height_proj(&t), norm);
    }

    #[test]
    fn quad_form_is_the_height(y in line(), a in -300i64..=300, b in -300i64..=300) {
        let raw = cayley::geometry::param_line_raw(y, a, b);
        let norm: i128 = raw.iter().map(|v| v * v).sum();
        prop_assert_eq!(y.quad_form().eval(a as i128, b as i128), norm);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn counters_agree_on_rational_bounds(num in 1u64..=4000, den in 1u64..=20) {
        prop_assume!(num <= 200 * den);
        let b = HeightBound::from_b_squared(BigRational::new(num.into(), den.into())).unwrap();
        prop_assert_eq!(count_direct_with_cap(&b, 200).unwrap(), count_by_lines(&b));
    }

    #[test]
    fn counting_is_monotone(a in 1u64..=5000, d in 0u64..=500) {
        let lo = HeightBound::from_b_squared_int(a).unwrap();
        let hi = HeightBound::from_b_squared_int(a + d).unwrap();
        prop_assert!(count_by_lines(&lo) <= count_by_lines(&hi));
    }
}

#[test]
fn quad_form_determinant_box() {
    for l in -50i64..=50 {
        for m in 1i64..=50 {
            if l.gcd(&m) != 1 {
                continue;
            }
            let y = LineIndex::new(l, m).unwrap();
            let qf = y.quad_form();
            assert_eq!(qf.a * qf.c - qf.b2 * qf.b2, sextic_f(m as i128, l as i128), "({l}, {m})");
            assert_eq!(y.line_discriminant(), qf.det());
        }
    }
}
