//! (g·b_ξ)(y) = b_ξ(g⁻¹y) − b_ξ(g⁻¹o) on a few hand-picked triples.
//!
//! cargo run --release --example equivariance

use horolab::actions::{GroupAction, Point, Ray};
use horolab::horo::equivariance_sides;
use horolab::horo::patch::DEFAULT_MIN_TAIL;

fn main() -> horolab::Result<()> {
    let a = GroupAction::f2();
    for (g, xi, y) in [("a", "b^n", "ab"), ("bA", "(ab)^n", "B^2"), ("a^3", "A^n", "e")] {
        let g = a.parse(g)?;
        let ray = Ray::parse(&a, xi)?;
        let terms: Vec<Point> = (0..40).map(|n| ray.point(&a, n)).collect();
        let y = a.parse_point(y)?;
        let (lhs, rhs) = equivariance_sides(&a, &g, &terms, &y, DEFAULT_MIN_TAIL)?;
        println!("g = {:<4} ξ = {:<8} y = {:<4}: {lhs} = {rhs}", a.format(&g), xi, a.point_label(&y));
        assert_eq!(lhs, rhs);
    }
    Ok(())
}
