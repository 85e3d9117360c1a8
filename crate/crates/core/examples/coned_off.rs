//! Coned-off Cayley graphs: bounded coset penetration and horofunctions at cone points.
//!
//! cargo run --release --example coned_off

use horolab::actions::{GroupAction, Point, Ray};
use horolab::coned::{build_coned_off, cone_accumulation, unique_minimum_scan, verify_bcp};
use horolab::graph::BallLimits;

fn main() -> horolab::Result<()> {
    let g = build_coned_off(&GroupAction::z3_z4(), 5, BallLimits::default())?;
    let rep = verify_bcp(&g, 2);
    println!(
        "Z/3 * Z/4, radius 5: {} cosets, least K* = {}, {} deletion tests",
        rep.cosets, rep.k_least, rep.checks
    );

    let h = build_coned_off(&GroupAction::z_z3(), 5, BallLimits::default())?;
    let a = h.action();
    let gen = a.parse("a")?;
    let seq: Vec<Point> = (0..22).map(|n| a.orbit(&a.pow(&gen, n))).collect();
    let scan = unique_minimum_scan(&h, &[("a^n".to_string(), seq)], 2)?;
    println!("Z * Z/3: limit along a^n has min set {:?} (unique {})", scan[0].min_set, scan[0].unique);
    let ps: Vec<_> = [1, 3, 6, 10].iter().map(|&n| a.pow(&gen, n)).collect();
    let acc = cone_accumulation(&h, &h.coset("<a>")?, &ps, &Ray::parse(a, "(sa)^n")?)?;
    println!("a^p·(sa)^∞ accumulates at the cone of <a>: {}", acc.accumulation.converges);
    Ok(())
}
