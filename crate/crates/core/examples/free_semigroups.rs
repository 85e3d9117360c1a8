//! Free semigroup and free product certificates, and the bounded axis constant.
//!
//! cargo run --release --example free_semigroups

use horolab::actions::GroupAction;
use horolab::dynamics::{bounded_axis_probe, free_semigroup_certificate, pnai_certificate};
use horolab::LabError;

fn main() -> horolab::Result<()> {
    let a = GroupAction::f2();
    let gens = [a.parse("a")?, a.parse("A")?];
    let (f, cert) = free_semigroup_certificate(&a, &gens, 4, 10)?;
    println!(
        "{{a, A}}·{}: {} products of at most 10 factors distinct, τ = {}",
        a.format(&f),
        cert.products,
        cert.tau
    );

    let c = pnai_certificate(&a, &a.parse("a")?, &a.parse("b")?, 8)?;
    println!("<a> * <b>: {} alternating words, none trivial", c.words);
    match pnai_certificate(&a, &a.parse("a")?, &a.parse("a^2")?, 4) {
        Err(LabError::RelationFound(w)) => println!("a and a^2: relation {w}"),
        other => println!("a and a^2: {other:?}"),
    }

    let t = GroupAction::z2_z();
    let rep = bounded_axis_probe(&t, &t.parse("s")?, &t.parse("a")?, -3..=3)?;
    println!("Z/2 * Z: s against Ax(a) has τ = {}", rep.tau);
    Ok(())
}
