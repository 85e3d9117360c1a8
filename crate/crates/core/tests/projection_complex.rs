mod common;

use horolab::actions::GroupAction;
use horolab::projection::{
    build_axis_family, build_complex, chain_family, least_connected_k, least_construct_power, least_forcing_constant,
    minimal_loxodromic_construct, verify_bgit, verify_projection_axioms, AxisFamily,
};

fn family(ts: &[&str]) -> AxisFamily {
    let a = GroupAction::f2();
    let ts: Vec<_> = ts.iter().map(|w| a.parse(w).unwrap()).collect();
    build_axis_family(&a, &[a.parse("a").unwrap()], &ts).unwrap()
}

/// `d_U(V, W)` by brute force on words: nearest points of U to every point of V and W.
fn oracle_d(fam: &AxisFamily, u: usize, v: usize, w: usize) -> u32 {
    let a = fam.action();
    let words = |i: usize| -> Vec<String> {
        fam.members()[i].path.iter().map(|p| common::expand(&a.point_label(p))).collect()
    };
    let (pu, pv, pw) = (words(u), words(v), words(w));
    let mut proj: Vec<&String> = Vec::new();
    for x in pv.iter().chain(&pw) {
        let best = pu.iter().map(|y| common::dist(x, y)).min().unwrap();
        proj.extend(pu.iter().filter(|y| common::dist(x, y) == best));
    }
    proj.iter()
        .flat_map(|p| proj.iter().map(move |q| common::dist(p, q)))
        .max()
        .unwrap_or(0)
}

#[test]
fn three_lines() {
    let fam = family(&["e", "b", "B"]);
    let rep = verify_projection_axioms(&fam, None);
    assert_eq!((fam.len(), rep.kappa), (3, 0));
    assert!(rep.passed());
}

#[test]
fn six_lines_agree_with_the_word_oracle() {
    let fam = family(&["e", "b", "b^2", "b^3", "ab", "Ab"]);
    assert_eq!(fam.len(), 6);
    for u in 0..6 {
        for v in (0..6).filter(|&v| v != u) {
            for w in (0..6).filter(|&w| w != u) {
                assert_eq!(fam.d(u, v, w), oracle_d(&fam, u, v, w), "d_{u}({v}, {w})");
            }
        }
    }
    let rep = verify_projection_axioms(&fam, Some(0));
    assert!(rep.passed() && rep.kappa == 0);
}

#[test]
fn middle_line_separates() {
    // Ax(a), b·Ax(a), b^2·Ax(a) along the b-geodesic: the middle one has d = 0 but
    // projects the outer two to the single point b.
    let fam = family(&["e", "b", "b^2"]);
    assert_eq!(fam.d(1, 0, 2), 0);
    let chain = chain_family(&GroupAction::f2(), 4, 3).unwrap();
    assert_eq!(chain.interval_set(0, 2, 0).unwrap(), [1]);
    assert!(chain.interval_set(0, 0, 0).is_err());
}

#[test]
fn chain_complex_is_a_path() {
    let fam = chain_family(&GroupAction::f2(), 4, 7).unwrap();
    let pc = build_complex(&fam, 2).unwrap();
    for u in 0..7 {
        for v in u + 1..7 {
            let empty = fam.interval_set(u, v, 2).unwrap().is_empty();
            assert_eq!(pc.adjacent(u, v), empty);
            assert_eq!(pc.adjacent(u, v), v == u + 1);
        }
    }
    assert_eq!(least_connected_k(&fam, 8).unwrap(), Some(0));
    let f = least_forcing_constant(&pc, &fam);
    assert!(f.passed);
    assert_eq!(f.k_hat, 3);
}

#[test]
fn bounded_geodesic_image_fixture() {
    let fam = chain_family(&GroupAction::f2(), 4, 7).unwrap();
    let pc = build_complex(&fam, 2).unwrap();
    let b = verify_bgit(&pc, &fam, &[0, 1, 2, 3], 6, None).unwrap();
    assert_eq!(b.value, 0);
    assert!(verify_bgit(&pc, &fam, &[3, 4, 5], 6, None).is_err());
    // Tree families: d_V stays within κ = 0.
    let tree = family(&["e", "b", "b^2", "b^3", "ab", "Ab"]);
    let tpc = build_complex(&tree, 0).unwrap();
    assert!(tpc.connected);
}

#[test]
fn construct_powers() {
    let a = GroupAction::f2();
    let (g, f) = (a.parse("b").unwrap(), a.parse("a").unwrap());
    for k in 0..4 {
        assert_eq!(least_construct_power(&a, &g, &f, k, 8).unwrap(), Some(k + 1));
    }
    let (h, rep) = minimal_loxodromic_construct(&a, &g, &f, 3, 2).unwrap();
    assert_eq!(a.format(&h), "ba^3");
    assert!(rep.geodesic && rep.passed());
}
