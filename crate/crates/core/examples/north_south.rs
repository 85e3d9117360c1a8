//! North-south dynamics, extreme proximality and dense fixed pairs on ∂F2.
//!
//! cargo run --release --example north_south

use horolab::actions::{GroupAction, Ray};
use horolab::dynamics::{extreme_proximality_probe, fixed_pair_density_probe, north_south_probe, BoundarySample};

fn main() -> horolab::Result<()> {
    let a = GroupAction::f2().with_radius(60);
    let g = a.parse("ab")?;
    let minus = Ray::repeller(&a, &g);
    let sample = BoundarySample::enumerate(&a, 4, 50, 3, Some(&minus))?;
    let rep = north_south_probe(&a, &g, &sample, 10)?;
    println!("g = ab on {} rays at T = 3: n₀ = {:?}", sample.rays.len(), rep.n0);
    println!("inside after n steps: {:?}", rep.inside);

    let sources = [Ray::parse(&a, "b^n")?, Ray::parse(&a, "(bab)^n")?];
    let (x, _) = extreme_proximality_probe(&a, &sources, &Ray::parse(&a, "a^n")?, 3, 6, 24)?;
    println!("{} moves b^∞ and (bab)^∞ next to a^∞", a.format(&x));
    let (h, fp) = fixed_pair_density_probe(&a, (&Ray::parse(&a, "a^n")?, &Ray::parse(&a, "b^n")?), 3, 6, 24)?;
    println!("{} has fixed points near (a^∞, b^∞), found by {}", a.format(&h), fp.method);
    Ok(())
}
