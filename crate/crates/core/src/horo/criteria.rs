//! Minimal-class and accumulation criteria.

use serde::Serialize;

use super::patch::{finite_difference, horofunction_of_point, limit_along_sequence, HorofunctionPatch};
use super::space::HoroSpace;
use crate::error::Result;
use crate::graph::VertexId;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinimalClassReport {
    /// Every tested `z` has some `x_n ≠ z` guarding `z` from all `y_m`, `m ≥ m0`.
    pub hypothesis_holds: bool,
    pub counterexample: Option<String>,
    /// First index of the `y` tail; the largest stabilisation index of the `y` patch.
    pub tail_start: u32,
    pub tested: usize,
    pub finite_difference: u32,
    pub patches_equal: bool,
}

impl MinimalClassReport {
    /// The criterion's conclusion holds whenever its hypothesis does.
    pub fn consistent(&self) -> bool {
        !self.hypothesis_holds || self.patches_equal
    }
}

/// Tests the guard hypothesis for every `z` of depth at most `probe_radius`, then
/// compares the two limit patches.
pub fn minimal_class_probe<S: HoroSpace + ?Sized>(
    space: &S,
    xs: &[S::Point],
    ys: &[S::Point],
    probe_radius: u32,
    min_tail: usize,
) -> Result<MinimalClassReport> {
    let (px, _) = limit_along_sequence(space, xs, "xs", min_tail)?;
    let (py, _) = limit_along_sequence(space, ys, "ys", min_tail)?;
    let m0 = py.max_stabilization() as usize;
    let tail = &ys[m0.min(ys.len() - 1)..];
    let g = space.graph();
    let mut tested = 0;
    let mut counterexample = None;
    for v in g.vertices().filter(|&v| g.depth(v) <= probe_radius) {
        tested += 1;
        let z = space.point(v);
        let found = xs
            .iter()
            .filter(|x| **x != z)
            .any(|x| tail.iter().all(|y| space.guards(x, &z, y)));
        if !found {
            counterexample = Some(space.describe(&z));
            break;
        }
    }
    let fd = finite_difference(&px, &py)?.lower_bound;
    Ok(MinimalClassReport {
        hypothesis_holds: counterexample.is_none(),
        counterexample,
        tail_start: m0 as u32,
        tested,
        finite_difference: fd,
        patches_equal: fd == 0,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AccumulationReport {
    pub converges: bool,
    /// For each patch, the largest `r` such that it agrees with `b_v` on the ball of
    /// radius `r` (`None` if it already differs at `o`'s neighbours).
    pub agreement_radius: Vec<Option<u32>>,
}

/// Whether the patches converge to `b_v` on the ball: the last one must equal `b_v`
/// at every vertex.
pub fn accumulation_probe<S: HoroSpace + ?Sized>(
    space: &S,
    v: VertexId,
    patches: &[HorofunctionPatch],
) -> Result<AccumulationReport> {
    let target = horofunction_of_point(space, v)?;
    let g = space.graph();
    let max_depth = g.vertices().map(|u| g.depth(u)).max().unwrap_or(0);
    let mut agreement_radius = Vec::with_capacity(patches.len());
    for p in patches {
        p.same_ball(&target)?;
        let first_bad = g
            .vertices()
            .filter(|&u| p.value(u) != target.value(u))
            .map(|u| g.depth(u))
            .min();
        agreement_radius.push(match first_bad {
            None => Some(max_depth),
            Some(0) => None,
            Some(d) => Some(d - 1),
        });
    }
    let converges = patches.last().is_some_and(|p| p.values() == target.values());
    Ok(AccumulationReport {
        converges,
        agreement_radius,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::actions::{build_ball, ActionBall, GroupAction, Point, Ray};
    use crate::graph::BallLimits;

    fn terms(b: &ActionBall, t: &str, n: u32) -> Vec<Point> {
        let r = Ray::parse(b.action(), t).unwrap();
        (0..n).map(|k| r.point(b.action(), k)).collect()
    }

    #[test]
    fn same_ray_at_two_speeds() {
        let b = build_ball(&GroupAction::f2(), 4, BallLimits::default()).unwrap();
        let r = minimal_class_probe(&b, &terms(&b, "a^n", 14), &terms(&b, "a^2n", 14), 3, 2).unwrap();
        assert!(r.hypothesis_holds && r.patches_equal);
    }

    #[test]
    fn different_rays_fail_at_the_origin() {
        let b = build_ball(&GroupAction::f2(), 4, BallLimits::default()).unwrap();
        let r = minimal_class_probe(&b, &terms(&b, "a^n", 14), &terms(&b, "b^n", 14), 3, 2).unwrap();
        assert!(!r.hypothesis_holds);
        assert_eq!(r.counterexample.as_deref(), Some("e"));
        assert!(r.consistent());
    }

    #[test]
    fn identical_sequences() {
        let b = build_ball(&GroupAction::f2(), 3, BallLimits::default()).unwrap();
        let xs = terms(&b, "(ab)^n", 10);
        let r = minimal_class_probe(&b, &xs, &xs, 3, 2).unwrap();
        assert!(r.hypothesis_holds && r.patches_equal);
    }

    #[test]
    fn accumulation_trivial_cases() {
        let b = build_ball(&GroupAction::f2(), 3, BallLimits::default()).unwrap();
        let v = b.vertex("a").unwrap();
        let w = b.vertex("b").unwrap();
        let pv = horofunction_of_point(&b, v).unwrap();
        let pw = horofunction_of_point(&b, w).unwrap();
        assert!(accumulation_probe(&b, v, &[pv]).unwrap().converges);
        let r = accumulation_probe(&b, v, &[pw.clone(), pw]).unwrap();
        assert!(!r.converges);
        assert_eq!(r.agreement_radius, vec![Some(0), Some(0)]);
    }
}
