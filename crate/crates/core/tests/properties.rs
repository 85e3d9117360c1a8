mod common;

use std::collections::HashSet;

use horolab::actions::{
    build_ball, extension_choice, quasi_axis, stable_translation_length, Geometry, GroupAction, Isometry, Ray,
};
use horolab::dynamics::{free_semigroup_certificate, north_south_probe, pnai_certificate, BoundarySample};
use horolab::graph::BallLimits;
use horolab::horo::{axis_projection_of_patch, equivariance_sides, finite_difference, horofunction_of_point};
use horolab::projection::{build_complex, chain_family, power_chain};
use num_rational::Ratio;
use proptest::prelude::*;

fn word(max: usize) -> impl Strategy<Value = String> {
    proptest::collection::vec(prop::sample::select(vec!['a', 'A', 'b', 'B']), 0..=max)
        .prop_map(|v| common::reduce(&v.into_iter().collect::<String>()))
}

fn nonempty(max: usize) -> impl Strategy<Value = String> {
    word(max).prop_filter("nontrivial", |w| !w.is_empty())
}

fn f2() -> GroupAction {
    GroupAction::f2()
}

fn iso(a: &GroupAction, w: &str) -> Isometry {
    a.parse(&common::compress(w)).unwrap()
}

fn pt(a: &GroupAction, w: &str) -> horolab::actions::Point {
    a.orbit(&iso(a, w))
}

/// `w` is cyclically reduced and not a proper power.
fn primitive_cyclic(w: &str) -> bool {
    let n = w.len();
    n > 0
        && common::inv_letter(w.chars().next().unwrap()) != w.chars().last().unwrap()
        && (1..n).filter(|&d| n.is_multiple_of(d)).all(|d| w[..d].repeat(n / d) != w)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn metric_matches_the_tree(x in word(8), y in word(8), z in word(8)) {
        let a = f2();
        let (px, py, pz) = (pt(&a, &x), pt(&a, &y), pt(&a, &z));
        prop_assert_eq!(a.dist(&px, &py), common::dist(&x, &y));
        prop_assert!(a.dist(&px, &pz) <= a.dist(&px, &py) + a.dist(&py, &pz));
        let g = a.gromov(&px, &py, &pz);
        prop_assert_eq!(g.doubled(), common::gromov2(&x, &y, &z));
        prop_assert!(g.doubled() >= 0);
        prop_assert!(g.doubled() <= 2 * a.dist(&px, &pz).min(a.dist(&py, &pz)) as i64);
    }

    #[test]
    fn gromov_product_is_distance_to_geodesic(x in word(8), y in word(8)) {
        let a = f2();
        let (px, py, o) = (pt(&a, &x), pt(&a, &y), a.origin());
        let to_geo = a.geodesic(&px, &py).iter().map(|p| a.dist(&o, p)).min().unwrap();
        prop_assert_eq!(a.gromov(&px, &py, &o).doubled(), 2 * to_geo as i64);
    }

    #[test]
    fn guards_are_additive(w in word(6), x in word(6), z in word(6)) {
        let a = f2();
        let (pw, px, pz) = (pt(&a, &w), pt(&a, &x), pt(&a, &z));
        if a.is_guard(&pw, &px, &pz) {
            prop_assert_eq!(a.dist(&px, &pz), a.dist(&px, &pw) + a.dist(&pw, &pz));
        }
        // In a tree every point on the geodesic is a guard.
        for p in a.geodesic(&px, &pz) {
            prop_assert!(a.is_guard(&p, &px, &pz));
        }
    }

    #[test]
    fn action_composes(g in word(6), h in word(6), p in word(6)) {
        let a = f2();
        let (ig, ih, pp) = (iso(&a, &g), iso(&a, &h), pt(&a, &p));
        prop_assert_eq!(a.act(&ig, &a.act(&ih, &pp)), a.act(&a.mul(&ig, &ih), &pp));
        prop_assert_eq!(a.act(&a.inverse(&ig), &a.act(&ig, &pp)), pp);
    }

    #[test]
    fn translation_length_scales(g in nonempty(5), k in 1u32..4) {
        let a = f2().with_radius(200);
        let ig = iso(&a, &g);
        let l = stable_translation_length(&a, &ig, 12).unwrap();
        let lk = stable_translation_length(&a, &a.pow(&ig, k as i64), 12).unwrap();
        // Exact in a tree once N exceeds the conjugator length.
        prop_assert!(lk * Ratio::from_integer(12) >= l * Ratio::from_integer(12 * k as u64) - Ratio::from_integer(2 * 5));
        prop_assert!(lk <= l * Ratio::from_integer(k as u64) + Ratio::new(10, 12));
    }

    #[test]
    fn extensions_are_quasi_geodesic(g in nonempty(4), h in nonempty(4)) {
        let a = f2().with_radius(60);
        let fam: Vec<Isometry> = ["a", "b", "ab", "aB"].iter().map(|w| a.parse(w).unwrap()).collect();
        let ch = extension_choice(&a, &fam, &iso(&a, &g), &iso(&a, &h), Ratio::from_integer(2)).unwrap();
        prop_assert!(ch.c <= Ratio::from_integer(2));
    }

    #[test]
    fn busemann_functions_are_equivariant(p in word(3), u in nonempty(3), g in word(3), y in word(3)) {
        prop_assume!(primitive_cyclic(&u));
        let a = f2();
        let terms: Vec<_> = (0..24).map(|n| pt(&a, &common::mul(&p, &u.repeat(n)))).collect();
        let (lhs, rhs) = equivariance_sides(&a, &iso(&a, &g), &terms, &pt(&a, &y), 3).unwrap();
        prop_assert_eq!(lhs, rhs);
        let (l2, r2) = horolab::horo::projection::basepoint_change_sides(&a, &terms, &pt(&a, &y), &pt(&a, &g), 3).unwrap();
        prop_assert_eq!(l2, r2);
    }

    #[test]
    fn point_horofunctions_are_lipschitz_in_the_point(y in word(4), z in word(4)) {
        let a = f2();
        let ball = build_ball(&a, 4, BallLimits::default()).unwrap();
        let vy = ball.vertex(&common::compress(&y)).unwrap();
        let vz = ball.vertex(&common::compress(&z)).unwrap();
        let d = finite_difference(&horofunction_of_point(&ball, vy).unwrap(), &horofunction_of_point(&ball, vz).unwrap()).unwrap();
        prop_assert!(d.lower_bound <= 2 * common::dist(&y, &z));
        let oracle = common::ball(4)
            .iter()
            .map(|x| {
                (common::dist(x, &y) as i64 - common::dist(x, &z) as i64 - common::len(&y) as i64 + common::len(&z) as i64).unsigned_abs()
            })
            .max()
            .unwrap();
        prop_assert_eq!(d.lower_bound as u64, oracle);
    }

    #[test]
    fn point_projects_to_itself(k in -1i64..=1) {
        let a = f2();
        let ball = build_ball(&a, 4, BallLimits::default()).unwrap();
        let h = a.parse("ab").unwrap();
        let axis = quasi_axis(&a, &h, -3, 3).unwrap();
        let x = a.orbit(&a.pow(&h, k));
        let patch = horofunction_of_point(&ball, ball.vertex_of(&x).unwrap()).unwrap();
        let pr = axis_projection_of_patch(&ball, &patch, &[x.clone(), x.clone()], &axis, 1, 2).unwrap();
        prop_assert_eq!(pr.points, vec![x]);
    }

    #[test]
    fn chain_projections(p in 2u32..5, u in 0usize..4, v in 0usize..4, w in 0usize..4, x in 0usize..4) {
        let a = f2().with_radius(80);
        let fam = chain_family(&a, p, 4).unwrap();
        prop_assume!(u != v && u != w && u != x);
        prop_assert_eq!(fam.kappa(), 0);
        prop_assert_eq!(fam.d(u, v, w), fam.d(u, w, v));
        if v != x && w != x {
            prop_assert!(fam.d(u, v, w) <= fam.d(u, v, x) + fam.d(u, x, w));
        }
    }

    #[test]
    fn intervals_shrink_and_define_the_complex(p in 2u32..5, k in 0u32..4) {
        let a = f2().with_radius(80);
        let fam = chain_family(&a, p, 4).unwrap();
        let pc = build_complex(&fam, k).unwrap();
        for v in 0..fam.len() {
            for w in 0..fam.len() {
                if v == w { continue; }
                let big = fam.interval_set(v, w, k).unwrap();
                let small = fam.interval_set(v, w, k + 1).unwrap();
                prop_assert!(small.iter().all(|i| big.contains(i)));
                prop_assert_eq!(pc.adjacent(v, w), big.is_empty());
            }
        }
    }

    #[test]
    fn tree_families_have_kappa_zero(h in nonempty(3), f in nonempty(2)) {
        prop_assume!(primitive_cyclic(&f));
        let a = f2().with_radius(80);
        if let Ok(fam) = power_chain(&a, &iso(&a, &h), &iso(&a, &f), 3, 2) {
            prop_assert_eq!(fam.kappa(), 0);
        }
    }

    #[test]
    fn cones_shortcut_cosets(x in 0i64..3, k in -4i64..=4, which in prop::bool::ANY) {
        let c = GroupAction::z_z3().with_geometry(Geometry::ConedOff).unwrap();
        let base = GroupAction::z_z3();
        let g = c.parse(["e", "s", "as"][x as usize]).unwrap();
        let step = c.pow(&c.parse(if which { "a" } else { "s" }).unwrap(), k);
        let y = c.mul(&g, &step);
        let bd = base.dist(&base.orbit(&g), &base.orbit(&y));
        prop_assert!(c.dist(&c.orbit(&g), &c.orbit(&y)) <= bd.min(2));
    }

    #[test]
    fn n0_is_monotone_in_the_resolution(u in nonempty(3)) {
        prop_assume!(primitive_cyclic(&u));
        let a = f2().with_radius(64);
        let g = iso(&a, &u);
        let base = BoundarySample::enumerate(&a, 3, 30, 1, Some(&Ray::repeller(&a, &g))).unwrap();
        let mut last = 0;
        for t in 1..=4 {
            let s = BoundarySample::new(base.rays.clone(), t, 24).unwrap();
            let n0 = north_south_probe(&a, &g, &s, 8).unwrap().n0.unwrap_or(u32::MAX);
            prop_assert!(n0 >= last);
            last = n0;
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn conjugated_basis_generates_free_semigroups(w in word(3)) {
        let a = f2().with_radius(60);
        let gens: Vec<Isometry> = ["a", "b"].iter().map(|x| a.conjugate(&a.parse(x).unwrap(), &iso(&a, &w))).collect();
        let (f, cert) = free_semigroup_certificate(&a, &gens, 4, 6).unwrap();
        let fw = common::expand(&a.format(&f));
        let letters: Vec<String> = gens.iter().map(|g| common::mul(&common::expand(&a.format(g)), &fw)).collect();
        let mut seen = HashSet::new();
        let mut layer = vec![String::new()];
        for _ in 0..6 {
            layer = layer.iter().flat_map(|x| letters.iter().map(move |y| common::mul(x, y))).collect();
            for x in &layer {
                prop_assert!(seen.insert(x.clone()));
            }
        }
        prop_assert_eq!(cert.products, seen.len() as u64);
    }

    #[test]
    fn bases_have_no_relations(k in 1i64..4, flip in prop::bool::ANY, w in word(2)) {
        let a = f2();
        let (x, y) = if flip { ("a".to_string(), format!("b{}", "a".repeat(k as usize))) } else { (format!("{}b", "a".repeat(k as usize)), "b".to_string()) };
        let c = iso(&a, &w);
        let x = a.conjugate(&iso(&a, &common::reduce(&x)), &c);
        let y = a.conjugate(&iso(&a, &common::reduce(&y)), &c);
        prop_assert!(pnai_certificate(&a, &x, &y, 5).is_ok());
    }
}
