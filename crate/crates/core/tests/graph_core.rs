mod common;

use horolab::actions::{build_ball, Geometry, GroupAction};
use horolab::graph::{BallGraph, BallLimits, SamplingPolicy};
use horolab::{HalfInt, LabError};

fn f2(r: u32) -> horolab::actions::ActionBall {
    build_ball(&GroupAction::f2(), r, BallLimits::default()).unwrap()
}

#[test]
fn ball_sizes_match_reduced_word_counts() {
    for r in 0..=5 {
        let oracle = common::ball(r);
        let ball = f2(r);
        assert_eq!(ball.graph().len(), oracle.len(), "radius {r}");
        for w in &oracle {
            ball.vertex(&common::compress(w)).unwrap();
        }
    }
    assert_eq!(f2(2).graph().len(), 17);
}

#[test]
fn distances_and_products_against_words() {
    let ball = f2(3);
    let g = ball.graph();
    let words = common::ball(3);
    let v = |w: &str| ball.vertex(&common::compress(w)).unwrap();
    for x in words.iter().step_by(7) {
        for y in words.iter().step_by(5) {
            assert_eq!(g.distance(v(x), v(y)), common::dist(x, y), "{x} {y}");
            for z in words.iter().step_by(31) {
                let p = g.gromov_product(v(x), v(y), v(z)).unwrap();
                assert_eq!(p.doubled(), common::gromov2(x, y, z));
            }
        }
    }
    assert_eq!(g.distance(v("ab"), v("ba")), 4);
    assert_eq!(g.gromov_product(v("ab"), v("aB"), v("")).unwrap(), HalfInt::from_int(1));
}

#[test]
fn guard_in_the_coned_graph() {
    let a = GroupAction::z3_z4().with_geometry(Geometry::ConedOff).unwrap();
    let ball = build_ball(&a, 2, BallLimits::default()).unwrap();
    let g = ball.graph();
    let (e, s, t) = (ball.vertex("e").unwrap(), ball.vertex("s").unwrap(), ball.vertex("t").unwrap());
    // Every geodesic of length 2 from s to t: the common neighbours.
    assert_eq!(g.distance(s, t), 2);
    let common_nbrs: Vec<_> = g.neighbors(s).iter().filter(|x| g.neighbors(t).contains(x)).collect();
    assert_eq!(common_nbrs, [&e]);
    assert!(g.is_guard(e, s, t).unwrap());
    assert!(matches!(g.is_guard(e, e, t), Err(LabError::InvalidArgument(_))));
}

#[test]
fn four_point_constants() {
    for r in 0..=3 {
        let d = f2(r).graph().estimate_delta(SamplingPolicy::Exhaustive);
        assert_eq!(d.delta, HalfInt::from_int(0));
    }
    // Fixture from the exhaustive scan: four points of one <t>-coset.
    let a = GroupAction::z3_z4().with_geometry(Geometry::ConedOff).unwrap();
    let d = build_ball(&a, 4, BallLimits::default()).unwrap().graph().estimate_delta(SamplingPolicy::Exhaustive);
    assert_eq!(d.delta, HalfInt::from_int(1));
    assert_eq!(d.quadruples, 24_359_335);
}

#[test]
fn exports_round_trip() {
    let g = f2(2);
    let g = g.graph();
    let csv = g.to_adjacency_csv();
    let (labels, edges) = horolab::graph::io::read_adjacency_csv(csv.as_bytes()).unwrap();
    let back = BallGraph::from_edges(labels, &edges, 0, None, BallLimits::default()).unwrap();
    assert_eq!(back.len(), g.len());
    assert_eq!(back.edge_count(), g.edge_count());
    assert!(g.to_graphml().contains("<graphml"));
    assert_eq!(g.to_dot("x").matches(" -- ").count(), g.edge_count());
}

#[test]
fn vertex_cap_is_enforced() {
    let limits = BallLimits {
        max_vertices: 100,
        ..Default::default()
    };
    assert!(matches!(
        build_ball(&GroupAction::f2(), 5, limits),
        Err(LabError::ResourceLimit { .. })
    ));
}
