//! Prefixes of a Myrberg-type ray and its fellow-travelling segments.
//!
//! cargo run --release --example myrberg

use horolab::actions::{build_ball, GroupAction};
use horolab::dynamics::myrberg_ray;
use horolab::graph::BallLimits;
use horolab::horo::patch::DEFAULT_MIN_TAIL;
use horolab::projection::myrberg_injectivity_probe;

fn main() -> horolab::Result<()> {
    let a = GroupAction::f2();
    let l = [a.parse("ab")?];
    let fam = [a.parse("a")?, a.parse("b")?];
    let ray = myrberg_ray(&a, &[1, 2, 3], &l, &fam, 0)?;
    println!("element {} (c = {})", ray.element, ray.c);
    for s in &ray.segments {
        println!("  along {}·Ax({}) for {} steps", s.translate, s.f, s.length);
    }
    println!("strictly increasing: {}", ray.strictly_increasing);

    let ball = build_ball(&a, 10, BallLimits::default())?;
    let inj = myrberg_injectivity_probe(&ball, &ray, &[], DEFAULT_MIN_TAIL)?;
    println!("guard chain on the radius 10 ball: {}", inj.guard_chain);
    Ok(())
}
