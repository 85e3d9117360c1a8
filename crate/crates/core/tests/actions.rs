mod common;

use horolab::actions::probes::{acylindricity_probe, compose_monotone, extension_choice, kernel_sample, weakly_independent};
use horolab::actions::{classify, quasi_axis, stable_translation_length, Classification, Geometry, GroupAction, Ray};
use num_rational::Ratio;

#[test]
fn products_reduce() {
    let g = GroupAction::f2();
    let x = g.mul(&g.parse("ab").unwrap(), &g.parse("B").unwrap());
    assert_eq!(g.format(&x), "a");
    for (u, v) in [("abA", "aB"), ("bbA", "ab"), ("BA", "ab")] {
        let p = g.mul(&g.parse(u).unwrap(), &g.parse(v).unwrap());
        assert_eq!(g.word_length(&p), common::len(&format!("{u}{v}")));
    }
}

#[test]
fn torsion_is_elliptic() {
    let g = GroupAction::z3_z4().with_geometry(Geometry::ConedOff).unwrap();
    let s = g.parse("s").unwrap();
    assert_eq!(stable_translation_length(&g, &s, 6).unwrap(), Ratio::from_integer(0));
    assert_eq!(classify(&g, &s), Classification::Elliptic);
    assert_eq!(g.element_order(&s, 10), Some(3));
}

#[test]
fn axes_are_geodesic_lines() {
    let g = GroupAction::f2();
    let ax = quasi_axis(&g, &g.parse("ab").unwrap(), -2, 2).unwrap();
    // [h^-2 o, h^3 o] along (ab)^n, point by point.
    let got: Vec<String> = ax.labels(&g).iter().map(|l| common::expand(l)).collect();
    let want: Vec<String> = (-4i64..=6)
        .map(|k| if k >= 0 { "ab".repeat(k as usize).chars().take(k as usize).collect() } else { "BA".repeat(k.unsigned_abs() as usize).chars().take(k.unsigned_abs() as usize).collect() })
        .collect();
    assert_eq!(got, want);
    assert_eq!(ax.c, Ratio::from_integer(1));
    let conj = quasi_axis(&g, &g.parse("baB").unwrap(), -2, 2).unwrap();
    assert_eq!(conj.c, Ratio::from_integer(1));
    assert!(conj.labels(&g).iter().all(|l| l.starts_with('b') || l == "e"));
}

#[test]
fn independence() {
    let g = GroupAction::f2();
    let p = |s: &str| g.parse(s).unwrap();
    assert!(weakly_independent(&g, &p("a"), &p("baB"), 0).unwrap());
    assert!(weakly_independent(&g, &p("ab"), &p("ba"), 2).unwrap());
    assert!(!weakly_independent(&g, &p("a"), &p("a^2"), 2).unwrap());
}

#[test]
fn extension_choices() {
    let g = GroupAction::f2();
    let p = |s: &str| g.parse(s).unwrap();
    let fam = [p("a"), p("b")];
    let c = extension_choice(&g, &fam, &p("b"), &p("b"), Ratio::from_integer(2)).unwrap();
    assert_eq!(g.format(&c.f), "a");
    assert_eq!(common::len("bab"), 3);
    let c = extension_choice(&g, &fam, &p("A"), &g.identity(), Ratio::from_integer(2)).unwrap();
    assert_ne!(g.format(&c.f), "a");
}

#[test]
fn composition_gets_closer() {
    let g = GroupAction::f2().with_radius(80);
    let (h, k) = (g.parse("a").unwrap(), g.parse("baB").unwrap());
    let (reps, monotone) = compose_monotone(&g, &h, &k, 1..=4, 24).unwrap();
    assert!(monotone);
    assert_eq!(reps[1].element, "a^2ba^2B");
    assert!(reps[2].attractor_product > reps[1].attractor_product);
}

#[test]
fn acylindricity_count() {
    // Only e, a^±1, a^±2 move both o and a^7 by at most 2.
    assert_eq!(acylindricity_probe(&GroupAction::f2(), 2, 6, 8, 1 << 20).unwrap(), 5);
}

#[test]
fn free_groups_have_trivial_kernel() {
    let g = GroupAction::f2();
    let rays: Vec<Ray> = ["a^n", "b^n", "(ab)^n"].iter().map(|t| Ray::parse(&g, t).unwrap()).collect();
    let k = kernel_sample(&g, &rays, 8).unwrap();
    assert_eq!(k.len(), 1);
    assert!(k[0].is_identity());
}
