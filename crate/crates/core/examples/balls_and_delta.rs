//! Balls in Cayley graphs, the four-point constant and graph export.
//!
//! cargo run --release --example balls_and_delta

use horolab::actions::{build_ball, GroupAction};
use horolab::graph::{BallLimits, SamplingPolicy};

fn main() -> horolab::Result<()> {
    for (name, action) in [
        ("F2", GroupAction::f2()),
        ("Z/3 * Z/4", GroupAction::z3_z4()),
        ("Z/2 * Z", GroupAction::z2_z()),
    ] {
        let ball = build_ball(&action, 4, BallLimits::default())?;
        let g = ball.graph();
        let est = g.estimate_delta(SamplingPolicy::Sampled { count: 20_000, seed: 7 });
        println!(
            "{name:<10} radius 4: {:>4} vertices, {:>4} edges, δ ≥ {} ({} quadruples), certified {}",
            g.len(),
            g.edge_count(),
            est.delta,
            est.quadruples,
            g.certified()
        );
    }
    let small = build_ball(&GroupAction::f2(), 1, BallLimits::default())?;
    print!("{}", small.graph().to_dot("f2_ball_1"));
    Ok(())
}
