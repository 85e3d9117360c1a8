use horolab::actions::{GroupAction, Point, Ray};
use horolab::coned::{
    build_coned_off, cone_accumulation, coset_projection, coset_projection_distance, unique_minimum_scan, verify_bcp,
};
use horolab::graph::BallLimits;

fn coned(a: GroupAction, r: u32) -> horolab::coned::ConedOffGraph {
    build_coned_off(&a, r, BallLimits::default()).unwrap()
}

#[test]
fn cones_of_cosets_meeting_the_ball() {
    let g = coned(GroupAction::z3_z4(), 2);
    let a = g.action();
    let mut labels: Vec<String> = g.cones().map(|c| g.ball().label(c).to_string()).collect();
    labels.sort();
    // Elements of Cayley length ≤ 2 as syllable lists; each contributes the coset of
    // every factor other than the one its last syllable lies in.
    let syl = [("s", 0, 1), ("S", 0, 1), ("t", 1, 1), ("T", 1, 1), ("t^2", 1, 2)];
    let mut words: Vec<(String, Option<usize>, u32)> = vec![(String::new(), None, 0)];
    let mut i = 0;
    while i < words.len() {
        let (w, last, len) = words[i].clone();
        for &(name, f, l) in &syl {
            if Some(f) != last && len + l <= 2 {
                words.push((format!("{w}{name}"), Some(f), len + l));
            }
        }
        i += 1;
    }
    let mut want: Vec<String> = Vec::new();
    for (w, last, _) in &words {
        for (f, p) in ["s", "t"].iter().enumerate() {
            if *last != Some(f) {
                want.push(format!("{w}<{p}>"));
            }
        }
    }
    want.sort();
    assert_eq!(labels, want);
    assert!(a.is_coned());
}

#[test]
fn coset_projections() {
    let g = coned(GroupAction::z3_z4(), 3);
    let a = g.action();
    let t = g.coset("<t>").unwrap();
    let p = |s: &str| a.parse_point(s).unwrap();
    assert_eq!(coset_projection(&g, &p("s"), &t).unwrap().labels, ["e"]);
    assert_eq!(coset_projection(&g, &p("t^2s"), &t).unwrap().labels, ["t^2"]);
    assert_eq!(coset_projection_distance(&g, &p("s"), &p("t^2s"), &t).unwrap(), 2);
}

#[test]
fn coning_shortcuts_cosets() {
    let g = coned(GroupAction::z3_z4(), 3);
    let a = g.action();
    let base = GroupAction::z3_z4();
    for w in ["e", "s", "st", "ts^2"] {
        for k in 0..4 {
            let x = a.parse_point(w).unwrap();
            let y = a.parse_point(&format!("{w}t^{k}")).unwrap();
            assert!(a.dist(&x, &y) <= base.dist(&x, &y).min(2));
        }
    }
}

#[test]
fn bcp_fixtures() {
    let small = verify_bcp(&coned(GroupAction::z3_z4(), 5), 3);
    assert!(small.passed);
    assert_eq!(small.k_least, 2);
    assert!(small.projection_diameter_ok && small.lipschitz_ok);
    let z = verify_bcp(&coned(GroupAction::z_z3(), 4), 2);
    assert_eq!(z.k_least, 2);
    assert!(z.passed);
    assert!(!verify_bcp(&coned(GroupAction::z_z3(), 4), 1).passed);
}

#[test]
fn peripheral_minimum_is_the_cone() {
    let g = coned(GroupAction::z_z3(), 5);
    let a = g.action();
    let x = a.parse("a").unwrap();
    let seq: Vec<Point> = (0..22).map(|n| a.orbit(&a.pow(&x, n))).collect();
    let scan = unique_minimum_scan(&g, &[("a^n".into(), seq)], 2).unwrap();
    assert_eq!(scan[0].min_set, ["<a>"]);
    assert!(scan[0].unique && scan[0].at_cone && !scan[0].descent);
}

#[test]
fn conjugated_rays_accumulate_at_the_cone() {
    let g = coned(GroupAction::z_z3(), 5);
    let a = g.action();
    let x = a.parse("a").unwrap();
    let ps: Vec<_> = [1, 3, 6, 10].iter().map(|&n| a.pow(&x, n)).collect();
    let rep = cone_accumulation(&g, &g.coset("<a>").unwrap(), &ps, &Ray::parse(a, "(sa)^n").unwrap()).unwrap();
    assert!(rep.accumulation.converges);
    let radii: Vec<u32> = rep.accumulation.agreement_radius.iter().map(|r| r.unwrap_or(0)).collect();
    assert!(radii.windows(2).all(|w| w[0] <= w[1]), "{radii:?}");
    assert!(radii[2] > radii[0]);
}
