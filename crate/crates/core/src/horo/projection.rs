//! Projections of boundary patches to quasi-axes, and exact equivariance checks.

use serde::Serialize;

use super::patch::{finite_difference, limit_along_sequence, HorofunctionPatch};
use crate::actions::axis::{diameter, nearest, QuasiAxis};
use crate::actions::{ActionBall, GroupAction, Isometry, Point, Ray};
use crate::error::{LabError, Result};

/// Patches within this sup-distance of an endpoint class of the axis owner are
/// treated as lying in that class.
pub const DEFAULT_CLASS_TOLERANCE: u32 = 2;

#[derive(Clone, Debug, Serialize)]
pub struct AxisProjection {
    pub vertices: Vec<String>,
    #[serde(skip)]
    pub points: Vec<Point>,
    pub diameter: u32,
    /// Projections of one-step perturbations of the tail stay within `2·d_max`.
    pub continuity_ok: bool,
    /// Sup-distance to the Busemann patches of `g⁺` and `g⁻`.
    pub class_distance: (u32, u32),
}

fn endpoint_patch(ball: &ActionBall, ray: &Ray) -> Result<HorofunctionPatch> {
    let n = 4 * ball.radius() + 8;
    let terms: Vec<Point> = (0..n).map(|k| ray.point(ball.action(), k)).collect();
    Ok(limit_along_sequence(ball, &terms, &ray.describe(ball.action()), 2)?.0)
}

/// Nearest-point projection of the tail of `terms` (from the patch's largest
/// stabilisation index on) onto the axis.
pub fn axis_projection_of_patch(
    ball: &ActionBall,
    patch: &HorofunctionPatch,
    terms: &[Point],
    axis: &QuasiAxis,
    d_max: u32,
    class_tolerance: u32,
) -> Result<AxisProjection> {
    let action = ball.action();
    let plus = endpoint_patch(ball, &Ray::attractor(action, &axis.owner))?;
    let minus = endpoint_patch(ball, &Ray::repeller(action, &axis.owner))?;
    let class_distance = (
        finite_difference(patch, &plus)?.lower_bound,
        finite_difference(patch, &minus)?.lower_bound,
    );
    if class_distance.0 <= class_tolerance || class_distance.1 <= class_tolerance {
        return Err(LabError::FixedClass(action.format(&axis.owner)));
    }
    if terms.is_empty() {
        return Err(LabError::InvalidArgument("no terms".into()));
    }
    let start = (patch.max_stabilization() as usize).min(terms.len() - 1);
    let tail = &terms[start..];
    let mut idx: Vec<usize> = tail.iter().flat_map(|y| nearest(action, y, &axis.path)).collect();
    idx.sort_unstable();
    idx.dedup();
    let points: Vec<Point> = idx.iter().map(|&i| axis.path[i].clone()).collect();
    let diam = diameter(action, &points);
    if diam > d_max {
        return Err(LabError::VerificationFailure(format!(
            "projection has diameter {diam} > {d_max}"
        )));
    }
    let continuity_ok = tail.iter().flat_map(|y| action.neighbors(y)).all(|y2| {
        nearest(action, &y2, &axis.path)
            .into_iter()
            .all(|i| points.iter().any(|p| action.dist(p, &axis.path[i]) <= 2 * d_max))
    });
    Ok(AxisProjection {
        vertices: points.iter().map(|p| action.point_label(p)).collect(),
        points,
        diameter: diam,
        continuity_ok,
        class_distance,
    })
}

fn limit_at(action: &GroupAction, terms: &[Point], x: &Point, base: &Point, min_tail: usize) -> Result<i64> {
    let vals: Vec<i64> = terms
        .iter()
        .map(|y| action.dist(x, y) as i64 - action.dist(base, y) as i64)
        .collect();
    let last = vals.len().saturating_sub(1);
    if vals.len() <= min_tail || vals[last - min_tail..].iter().any(|&v| v != vals[last]) {
        return Err(LabError::NonConvergence {
            vertex: action.point_label(x),
            horizon: terms.len(),
        });
    }
    Ok(vals[last])
}

/// `((g·b_ξ)(y), b_ξ(g⁻¹y) − b_ξ(g⁻¹o))`, where `g·b_ξ` is the limit along `g·y_n`.
pub fn equivariance_sides(
    action: &GroupAction,
    g: &Isometry,
    terms: &[Point],
    y: &Point,
    min_tail: usize,
) -> Result<(i64, i64)> {
    let o = action.origin();
    let moved: Vec<Point> = terms.iter().map(|t| action.act(g, t)).collect();
    let lhs = limit_at(action, &moved, y, &o, min_tail)?;
    let gi = action.inverse(g);
    let rhs = limit_at(action, terms, &action.act(&gi, y), &o, min_tail)?
        - limit_at(action, terms, &action.act(&gi, &o), &o, min_tail)?;
    Ok((lhs, rhs))
}

/// `(b^o_ξ(x) − b^{o'}_ξ(x), b^o_ξ(o'))`.
pub fn basepoint_change_sides(
    action: &GroupAction,
    terms: &[Point],
    x: &Point,
    o2: &Point,
    min_tail: usize,
) -> Result<(i64, i64)> {
    let o = action.origin();
    let lhs = limit_at(action, terms, x, &o, min_tail)? - limit_at(action, terms, x, o2, min_tail)?;
    let rhs = limit_at(action, terms, o2, &o, min_tail)?;
    Ok((lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::actions::{build_ball, quasi_axis};
    use crate::graph::BallLimits;
    use crate::horo::patch::horofunction_of_point;

    fn setup() -> (ActionBall, QuasiAxis) {
        let b = build_ball(&GroupAction::f2(), 4, BallLimits::default()).unwrap();
        let a = b.action().parse("a").unwrap();
        let ax = quasi_axis(b.action(), &a, -6, 6).unwrap();
        (b, ax)
    }

    fn limit(b: &ActionBall, t: &str) -> (HorofunctionPatch, Vec<Point>) {
        let r = Ray::parse(b.action(), t).unwrap();
        let terms: Vec<Point> = (0..16).map(|k| r.point(b.action(), k)).collect();
        (limit_along_sequence(b, &terms, t, 2).unwrap().0, terms)
    }

    #[test]
    fn b_ray_projects_to_origin() {
        let (b, ax) = setup();
        let (p, terms) = limit(&b, "b^n");
        let pr = axis_projection_of_patch(&b, &p, &terms, &ax, 1, 2).unwrap();
        assert_eq!(pr.vertices, ["e"]);
        assert!(pr.continuity_ok);
        let (p, terms) = limit(&b, "b a^n B");
        let pr = axis_projection_of_patch(&b, &p, &terms, &ax, 1, 2).unwrap();
        assert_eq!(pr.vertices, ["e"]);
    }

    #[test]
    fn point_on_axis_projects_to_itself() {
        let (b, ax) = setup();
        let x = b.vertex("a^2").unwrap();
        let p = horofunction_of_point(&b, x).unwrap();
        let pr = axis_projection_of_patch(&b, &p, &[b.point(x).clone()], &ax, 0, 2).unwrap();
        assert_eq!(pr.vertices, ["a^2"]);
    }

    #[test]
    fn endpoint_class_is_rejected() {
        let (b, ax) = setup();
        let (p, terms) = limit(&b, "a^n");
        assert!(matches!(
            axis_projection_of_patch(&b, &p, &terms, &ax, 1, 2),
            Err(LabError::FixedClass(_))
        ));
    }

    #[test]
    fn equivariance_on_a_sample() {
        let g = GroupAction::f2();
        let r = Ray::parse(&g, "(ab)^n").unwrap();
        let terms: Vec<Point> = (0..20).map(|k| r.point(&g, k)).collect();
        for (h, y) in [("b", "aB"), ("Aba", "b^2"), ("e", "a")] {
            let (l, rr) =
                equivariance_sides(&g, &g.parse(h).unwrap(), &terms, &g.parse_point(y).unwrap(), 2).unwrap();
            assert_eq!(l, rr);
        }
        let (l, rr) =
            basepoint_change_sides(&g, &terms, &g.parse_point("ba").unwrap(), &g.parse_point("A").unwrap(), 2)
                .unwrap();
        assert_eq!(l, rr);
    }
}
