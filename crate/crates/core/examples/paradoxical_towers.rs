//! Paradoxical towers for the generators of F2, checked on a ball.
//!
//! cargo run --release --example paradoxical_towers

use horolab::actions::GroupAction;
use horolab::dynamics::paradoxical_towers;

fn main() -> horolab::Result<()> {
    let a = GroupAction::f2();
    let d = ["a", "b", "A", "B"].map(|w| a.parse(w)).into_iter().collect::<horolab::Result<Vec<_>>>()?;
    let f = [a.parse("a")?, a.parse("b")?, a.parse("aB")?];
    let c = paradoxical_towers(&a, &d, &f, 6)?;
    println!("f0 = {}, g = {:?}", c.f0, c.g);
    println!("sizes of A_i on the ball: {:?}", c.sizes);
    println!(
        "{} elements: disjoint {}, covering {}, partition {}",
        c.checked, c.disjoint, c.covering, c.partition
    );
    Ok(())
}
