//! A strongly faithful witness ray and the tamedness of a normal closure.
//!
//! cargo run --release --example faithfulness

use horolab::actions::{build_ball, GroupAction};
use horolab::dynamics::{strongly_faithful_probe, tamedness_probe, BoundarySample, DEFAULT_SCALE};
use horolab::graph::BallLimits;

fn main() -> horolab::Result<()> {
    let a = GroupAction::f2();
    let ball = build_ball(&a, 4, BallLimits::default())?;
    let fs = [a.parse("a")?, a.parse("b")?, a.parse("ab")?];
    let sample = BoundarySample::enumerate(&a, 3, 40, 1, None)?;
    let (ray, rep) = strongly_faithful_probe(&ball, &fs, &sample)?;
    println!("{} is moved by a, b and ab: differences {:?}", ray.describe(&a), rep.differences);

    let t = tamedness_probe(&a, &a.parse("a")?, &a.parse("baB")?, 4, 200, DEFAULT_SCALE)?;
    println!(
        "N(a, baB): {} loxodromics, {} pairs, {} share both ends, {} share none, tamed {}",
        t.sampled, t.pairs, t.equal, t.disjoint, t.tamed
    );
    Ok(())
}
