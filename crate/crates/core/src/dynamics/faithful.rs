//! Strong faithfulness witnesses and tamedness of normal closures.

use std::collections::BTreeSet;

use serde::Serialize;

use super::sample::BoundarySample;
use crate::actions::axis::is_loxodromic;
use crate::actions::probes::weakly_independent;
use crate::actions::{ActionBall, GroupAction, Isometry, Point, Ray};
use crate::error::{LabError, Result};
use crate::horo::patch::{finite_difference, limit_along_sequence, DEFAULT_MIN_TAIL};
use crate::horo::HorofunctionPatch;

/// Projection bound for the weak independence of `b` and `c`.
pub const TAMEDNESS_INDEPENDENCE_TAU: u32 = 2;

#[derive(Clone, Debug, Serialize)]
pub struct FaithfulReport {
    pub ray: String,
    /// `‖b_{fξ} − b_ξ‖` on the ball for each `f`.
    pub differences: Vec<u32>,
    pub tested: usize,
    pub radius: u32,
}

fn ray_patch(ball: &ActionBall, ray: &Ray, by: &Isometry) -> Result<HorofunctionPatch> {
    let action = ball.action();
    let horizon = 2 * ball.radius() + 12;
    let terms: Vec<Point> = (0..horizon).map(|n| action.act(by, &ray.point(action, n))).collect();
    let name = format!("{}·{}", action.format(by), ray.describe(action));
    Ok(limit_along_sequence(ball, &terms, &name, DEFAULT_MIN_TAIL)?.0)
}

/// The first sampled ray `ξ` with `b_{fξ} ≠ b_ξ` on the ball for every `f ∈ F`.
pub fn strongly_faithful_probe(ball: &ActionBall, fs: &[Isometry], sample: &BoundarySample) -> Result<(Ray, FaithfulReport)> {
    let action = ball.action();
    if fs.iter().any(Isometry::is_identity) {
        return Err(LabError::InvalidArgument("the set must avoid the identity".into()));
    }
    let id = action.identity();
    for (i, xi) in sample.rays.iter().enumerate() {
        let own = ray_patch(ball, xi, &id)?;
        let mut differences = Vec::new();
        for f in fs {
            let d = finite_difference(&own, &ray_patch(ball, xi, f)?)?.lower_bound;
            if d == 0 {
                break;
            }
            differences.push(d);
        }
        if differences.len() == fs.len() {
            return Ok((
                xi.clone(),
                FaithfulReport {
                    ray: xi.describe(action),
                    differences,
                    tested: i + 1,
                    radius: ball.radius(),
                },
            ));
        }
    }
    Err(LabError::SearchExhausted("every sampled ray is fixed by some element".into()))
}

#[derive(Clone, Debug, Serialize)]
pub struct TamednessReport {
    pub b: String,
    pub c: String,
    pub sampled: usize,
    pub pairs: usize,
    pub equal: usize,
    pub disjoint: usize,
    /// Pairs sharing exactly one fixed point at the resolution.
    pub intermediate: Vec<(String, String)>,
    pub resolution: u32,
    pub tamed: bool,
}

/// Loxodromics of `N(b, c)` up to word length `max_len`: conjugates of `b^{±1}, c^{±1}`
/// and products of two of them, the first `count` in shortlex order.
fn normal_closure_sample(action: &GroupAction, b: &Isometry, c: &Isometry, max_len: u32, count: usize) -> Result<Vec<Isometry>> {
    let mut base = BTreeSet::new();
    let gens = [b.clone(), action.inverse(b), c.clone(), action.inverse(c)];
    for w in action.elements_within(max_len / 2, usize::MAX)? {
        for g in &gens {
            let x = action.conjugate(g, &w);
            if action.word_length(&x) <= max_len {
                base.insert(x);
            }
        }
    }
    let base: Vec<Isometry> = base.into_iter().collect();
    let mut all: BTreeSet<Isometry> = base.iter().cloned().collect();
    for x in &base {
        for y in &base {
            let p = action.mul(x, y);
            if action.word_length(&p) <= max_len {
                all.insert(p);
            }
        }
    }
    let mut out: Vec<Isometry> = all.into_iter().filter(|g| is_loxodromic(action, g)).collect();
    out.sort_by(|x, y| action.shortlex_cmp(x, y));
    out.truncate(count);
    Ok(out)
}

/// Classifies each pair of sampled loxodromics of `N(b, c)` by their fixed points, read
/// at `scale`: equal when both ends match up to `scale/2`, disjoint when no end does.
pub fn tamedness_probe(
    action: &GroupAction,
    b: &Isometry,
    c: &Isometry,
    max_len: u32,
    count: usize,
    scale: u32,
) -> Result<TamednessReport> {
    if !weakly_independent(action, b, c, TAMEDNESS_INDEPENDENCE_TAU)? {
        return Err(LabError::Precondition(format!(
            "{} and {} are not weakly independent",
            action.format(b),
            action.format(c)
        )));
    }
    let sample = normal_closure_sample(action, b, c, max_len, count)?;
    let ends = sample
        .iter()
        .map(|g| {
            Ok([
                Ray::attractor(action, g).at_length(action, scale)?,
                Ray::repeller(action, g).at_length(action, scale)?,
            ])
        })
        .collect::<Result<Vec<_>>>()?;
    let e = (scale / 2) as i64;
    let o = action.origin();
    let close = |x: &Point, y: &Point| action.gromov(x, y, &o).floor() >= e;
    let (mut equal, mut disjoint, mut pairs) = (0, 0, 0);
    let mut intermediate = Vec::new();
    for i in 0..sample.len() {
        for j in i + 1..sample.len() {
            pairs += 1;
            let [gp, gm] = &ends[i];
            let [hp, hm] = &ends[j];
            let m = [close(gp, hp), close(gm, hm), close(gp, hm), close(gm, hp)];
            if (m[0] && m[1]) || (m[2] && m[3]) {
                equal += 1;
            } else if m.iter().all(|&x| !x) {
                disjoint += 1;
            } else {
                intermediate.push((action.format(&sample[i]), action.format(&sample[j])));
            }
        }
    }
    Ok(TamednessReport {
        b: action.format(b),
        c: action.format(c),
        sampled: sample.len(),
        pairs,
        equal,
        disjoint,
        tamed: intermediate.is_empty(),
        intermediate,
        resolution: e as u32,
    })
}
