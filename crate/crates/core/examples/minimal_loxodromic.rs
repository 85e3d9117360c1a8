//! The least n for which g fⁿ comes out of the chain construction, for several K.
//!
//! cargo run --release --example minimal_loxodromic

use horolab::actions::GroupAction;
use horolab::projection::{least_construct_power, minimal_loxodromic_construct};

fn main() -> horolab::Result<()> {
    let a = GroupAction::f2();
    let (g, f) = (a.parse("b")?, a.parse("a")?);
    for k in 0..4 {
        match least_construct_power(&a, &g, &f, k, 8)? {
            Some(n) => {
                let (h, rep) = minimal_loxodromic_construct(&a, &g, &f, n, k)?;
                println!("K = {k}: n = {n}, element {}, checks pass {}", a.format(&h), rep.passed());
            }
            None => println!("K = {k}: nothing up to n = 8"),
        }
    }
    Ok(())
}
