//! Independence, extension, composition, acylindricity and kernel probes.

use num_rational::Ratio;
use rayon::prelude::*;
use serde::Serialize;

use super::action::{GroupAction, Isometry, Point};
use super::axis::{self, quasi_axis, QuasiAxis};
use super::ray::{boundary_product, Ray};
use crate::error::{LabError, Result};
use crate::half::HalfInt;

/// Periods on each side of the basepoint used when an axis is truncated.
pub const DEFAULT_AXIS_PERIODS: i64 = 4;

pub fn axis_window(action: &GroupAction, g: &Isometry, periods: i64) -> Result<QuasiAxis> {
    quasi_axis(action, g, -periods, periods)
}

/// Both nearest-point projections between the truncated axes have diameter at most `tau`.
pub fn weakly_independent(action: &GroupAction, f: &Isometry, g: &Isometry, tau: u32) -> Result<bool> {
    let af = axis_window(action, f, DEFAULT_AXIS_PERIODS)?;
    let ag = axis_window(action, g, DEFAULT_AXIS_PERIODS)?;
    Ok(axis::projection_diameter(action, &af.path, &ag.path) <= tau
        && axis::projection_diameter(action, &ag.path, &af.path) <= tau)
}

#[derive(Clone, Debug)]
pub struct ExtensionChoice {
    pub f: Isometry,
    /// `diam π_{Ax f}[o, g⁻¹o]` and `diam π_{Ax f}[o, h o]`.
    pub scores: (u32, u32),
    pub path: Vec<Point>,
    pub c: Ratio<u64>,
}

pub const DEFAULT_C_MAX: u64 = 2;

/// Picks `f ∈ family` so that the path labelled `g·f·h` is a `c_max`-quasi-geodesic.
pub fn extension_choice(
    action: &GroupAction,
    family: &[Isometry],
    g: &Isometry,
    h: &Isometry,
    c_max: Ratio<u64>,
) -> Result<ExtensionChoice> {
    let o = action.origin();
    let back = action.geodesic(&o, &action.orbit(&action.inverse(g)));
    let fwd = action.geodesic(&o, &action.orbit(h));
    let mut scored = Vec::new();
    for f in family {
        let ax = axis_window(action, f, DEFAULT_AXIS_PERIODS)?;
        let s1 = axis::projection_diameter(action, &back, &ax.path);
        let s2 = axis::projection_diameter(action, &fwd, &ax.path);
        scored.push((s1.max(s2), f.clone(), (s1, s2)));
    }
    scored.sort_by(|x, y| x.0.cmp(&y.0).then_with(|| action.shortlex_cmp(&x.1, &y.1)));
    for (_, f, scores) in scored {
        let path = labelled_path(action, &[g.clone(), f.clone(), h.clone()]);
        let c = axis::quasi_geodesic_constant(action, &path);
        if c <= c_max {
            return Ok(ExtensionChoice { f, scores, path, c });
        }
    }
    Err(LabError::VerificationFailure(format!(
        "no member of the family extends {} to {}",
        action.format(g),
        action.format(h)
    )))
}

/// Concatenation of `g_1 ⋯ g_{i-1} · [o, g_i o]`.
pub fn labelled_path(action: &GroupAction, pieces: &[Isometry]) -> Vec<Point> {
    let mut path = vec![action.origin()];
    let mut t = action.identity();
    for g in pieces {
        path.extend(action.normal_path(g).into_iter().skip(1).map(|p| action.act(&t, &p)));
        t = action.mul(&t, g);
    }
    path
}

#[derive(Clone, Debug, Serialize)]
pub struct ComposeReport {
    pub element: String,
    pub n: u32,
    pub scale: u32,
    /// `⟨(hⁿkⁿ)⁺, h⁺⟩_o`.
    pub attractor_product: HalfInt,
    /// `⟨(hⁿkⁿ)⁻, k⁻⟩_o`.
    pub repeller_product: HalfInt,
}

/// `hⁿkⁿ`, checked loxodromic, with its fixed points compared to `h⁺` and `k⁻` at `scale`.
pub fn compose_loxodromic(
    action: &GroupAction,
    h: &Isometry,
    k: &Isometry,
    n: u32,
    scale: u32,
) -> Result<(Isometry, ComposeReport)> {
    if scale > action.working_radius() {
        return Err(LabError::OutOfBall(format!("scale {scale}")));
    }
    let g = action.mul(&action.pow(h, n as i64), &action.pow(k, n as i64));
    action.require_in_ball(&action.orbit(&g))?;
    axis::require_loxodromic(action, &g)?;
    let attractor_product = boundary_product(action, &Ray::attractor(action, &g), &Ray::attractor(action, h), scale)?;
    let repeller_product = boundary_product(action, &Ray::repeller(action, &g), &Ray::repeller(action, k), scale)?;
    let report = ComposeReport {
        element: action.format(&g),
        n,
        scale,
        attractor_product,
        repeller_product,
    };
    Ok((g, report))
}

/// Runs [`compose_loxodromic`] for each `n` and reports whether both products are
/// nondecreasing in `n`.
pub fn compose_monotone(
    action: &GroupAction,
    h: &Isometry,
    k: &Isometry,
    ns: impl IntoIterator<Item = u32>,
    scale: u32,
) -> Result<(Vec<ComposeReport>, bool)> {
    let reports = ns
        .into_iter()
        .map(|n| compose_loxodromic(action, h, k, n, scale).map(|r| r.1))
        .collect::<Result<Vec<_>>>()?;
    let monotone = reports.windows(2).all(|w| {
        w[0].attractor_product <= w[1].attractor_product && w[0].repeller_product <= w[1].repeller_product
    });
    Ok((reports, monotone))
}

/// `max #{g ∈ B(M) : d(x,gx) ≤ r, d(y,gy) ≤ r}` over pairs with `d(x,y) > L`.
/// The count for an empty set of pairs is 1, the identity alone.
pub fn acylindricity_probe(action: &GroupAction, r: u32, l: u32, m: u32, cap: usize) -> Result<u32> {
    let elems = action.elements_within(m, cap)?;
    if let Some(c) = action.custom_action() {
        let g = c.graph();
        let pts: Vec<Point> = g.vertices().filter(|v| g.depth(*v) <= m).map(|v| Point::Vertex(v.0)).collect();
        let best = pts
            .par_iter()
            .map(|x| {
                let near: Vec<&Isometry> =
                    elems.iter().filter(|h| action.dist(x, &action.act(h, x)) <= r).collect();
                pts.iter()
                    .filter(|y| action.dist(x, y) > l)
                    .map(|y| near.iter().filter(|h| action.dist(y, &action.act(h, y)) <= r).count())
                    .max()
                    .unwrap_or(0)
            })
            .max()
            .unwrap_or(0);
        return Ok(best.max(1) as u32);
    }
    // The action is transitive on elements, so x = o suffices.
    let o = action.origin();
    let small: Vec<&Isometry> = elems.iter().filter(|g| action.displacement(g) <= r).collect();
    let best = elems
        .par_iter()
        .map(|y| action.orbit(y))
        .filter(|y| action.dist(&o, y) > l)
        .map(|y| small.iter().filter(|g| action.dist(&y, &action.act(g, &y)) <= r).count())
        .max()
        .unwrap_or(0);
    Ok(best.max(1) as u32)
}

/// Elements of word length at most `depth / 2` moving every ray by less than half of
/// `depth`, measured by the Gromov product of `g·ξ(depth)` and `ξ(depth)`.
pub fn kernel_sample(action: &GroupAction, rays: &[Ray], depth: u32) -> Result<Vec<Isometry>> {
    let candidates = match action.custom_action() {
        Some(c) => c.words().iter().map(|w| action.from_word(w)).collect(),
        None => action.elements_within(depth / 2, usize::MAX)?,
    };
    let samples = rays
        .iter()
        .map(|r| r.at_length(action, depth))
        .collect::<Result<Vec<_>>>()?;
    let o = action.origin();
    Ok(candidates
        .into_iter()
        .filter(|g| {
            samples
                .iter()
                .all(|x| action.gromov(&action.act(g, x), x, &o).doubled() >= depth as i64)
        })
        .collect())
}
