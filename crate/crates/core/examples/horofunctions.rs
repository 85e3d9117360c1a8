//! Point horofunctions, Busemann limits and the local minimum map on F2.
//!
//! cargo run --release --example horofunctions

use horolab::actions::{build_ball, GroupAction, Point, Ray};
use horolab::graph::BallLimits;
use horolab::horo::patch::DEFAULT_MIN_TAIL;
use horolab::horo::{horofunction_of_point, limit_along_sequence, local_minimum_map};

fn main() -> horolab::Result<()> {
    let a = GroupAction::f2();
    let r = 6;
    let ball = build_ball(&a, r, BallLimits::default())?;

    let x = ball.vertex("ab")?;
    let bx = horofunction_of_point(&ball, x)?;
    println!("b_ab: value at o {}, min {}", bx.value(ball.origin()), bx.min());
    println!("Π(b_ab) = {:?}", local_minimum_map(&ball, &bx, 2)?);

    let ray = Ray::parse(&a, "b a^n")?;
    let terms: Vec<Point> = (0..2 * r + 12).map(|n| ray.point(&a, n)).collect();
    let (bus, cert) = limit_along_sequence(&ball, &terms, &ray.describe(&a), DEFAULT_MIN_TAIL)?;
    println!("Busemann patch of {}: max stabilisation {}", ray.describe(&a), bus.max_stabilization());
    println!("certificate: {cert:?}");
    let m = local_minimum_map(&ball, &bus, 2)?;
    println!("descends: {}", m.is_descent());
    for w in ["e", "b", "ba", "ba^2", "a", "B"] {
        println!("  b({w}) = {}", bus.value(ball.vertex(w)?));
    }
    Ok(())
}
