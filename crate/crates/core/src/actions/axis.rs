//! Translation lengths, loxodromic classification, quasi-axes and nearest-point projections.

use num_rational::Ratio;
use serde::Serialize;

use super::action::{GroupAction, Isometry, Point};
use super::word::Word;
use crate::error::{LabError, Result};

/// Largest power tried when classifying.
pub const MAX_CLASSIFY_POWER: u32 = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Classification {
    Elliptic,
    Loxodromic,
    Undetermined,
}

/// `d(o, g^N o) / N`.
pub fn stable_translation_length(action: &GroupAction, g: &Isometry, n: u32) -> Result<Ratio<u64>> {
    if n == 0 {
        return Err(LabError::InvalidArgument("power must be positive".into()));
    }
    let p = action.orbit(&action.pow(g, n as i64));
    action.require_in_ball(&p)?;
    Ok(Ratio::new(action.dist(&action.origin(), &p) as u64, n as u64))
}

/// Displacements `d(o, g^k o)` for `k = 1..=N`, where `N` is the largest power
/// (at most [`MAX_CLASSIFY_POWER`]) whose orbit point stays in the working ball.
fn displacements(action: &GroupAction, g: &Isometry) -> Vec<u32> {
    let mut out = Vec::new();
    let mut acc = action.identity();
    for _ in 0..MAX_CLASSIFY_POWER {
        acc = action.mul(&acc, g);
        let d = action.displacement(&acc);
        if d > action.working_radius() {
            break;
        }
        out.push(d);
    }
    out
}

pub fn classify(action: &GroupAction, g: &Isometry) -> Classification {
    if g.is_identity() {
        return Classification::Elliptic;
    }
    let ds = displacements(action, g);
    let n = ds.len();
    if n == 0 {
        return Classification::Undetermined;
    }
    if ds.contains(&0) {
        return Classification::Elliptic;
    }
    if 2 * ds[n - 1] as usize >= n {
        return Classification::Loxodromic;
    }
    let half = n.div_ceil(2);
    let first = ds[..half].iter().max();
    let second = ds[half..].iter().max();
    if n >= 4 && second <= first {
        Classification::Elliptic
    } else {
        Classification::Undetermined
    }
}

pub fn is_loxodromic(action: &GroupAction, g: &Isometry) -> bool {
    classify(action, g) == Classification::Loxodromic
}

pub(crate) fn require_loxodromic(action: &GroupAction, g: &Isometry) -> Result<()> {
    if is_loxodromic(action, g) {
        Ok(())
    } else {
        Err(LabError::NotLoxodromic(action.format(g)))
    }
}

/// Writes `g = w·h·w⁻¹` with `h` cyclically reduced; returns `(w, h)`.
pub fn cyclic_reduction(action: &GroupAction, g: &Isometry) -> (Isometry, Isometry) {
    let a = action.alphabet();
    let mut w = Word::identity();
    let mut h = g.0.clone();
    while let (Some(first), Some(last)) = (h.first(), h.last()) {
        if h.syllables().len() < 2 || first.factor != last.factor {
            break;
        }
        let x = a.syllable(first.factor, first.exp as i64);
        h = a.mul(&a.mul(&a.inverse(&x), &h), &x);
        w = a.mul(&w, &x);
    }
    (action.from_word(&w), action.from_word(&h))
}

/// Best constant `c ≥ 1` with `|i - j| ≤ c·d(p_i, p_j) + c` over all index pairs.
pub fn quasi_geodesic_constant(action: &GroupAction, path: &[Point]) -> Ratio<u64> {
    let mut c = Ratio::from_integer(1u64);
    for i in 0..path.len() {
        for j in i + 1..path.len() {
            let d = action.dist(&path[i], &path[j]) as u64;
            let r = Ratio::new((j - i) as u64, d + 1);
            if r > c {
                c = r;
            }
        }
    }
    c
}

#[derive(Clone, Debug)]
pub struct QuasiAxis {
    pub owner: Isometry,
    /// Conjugator `w` with `owner = w·core·w⁻¹`; the axis passes through `w·o`.
    pub conjugator: Isometry,
    pub core: Isometry,
    pub range: (i64, i64),
    pub path: Vec<Point>,
    /// Index in `path` of `w·core^i·o` for `i = range.0 ..= range.1 + 1`.
    pub orbit_indices: Vec<usize>,
    pub c: Ratio<u64>,
}

impl QuasiAxis {
    pub fn labels(&self, action: &GroupAction) -> Vec<String> {
        self.path.iter().map(|p| action.point_label(p)).collect()
    }

    /// Translation period in path steps.
    pub fn period(&self) -> usize {
        if self.orbit_indices.len() < 2 {
            0
        } else {
            self.orbit_indices[1] - self.orbit_indices[0]
        }
    }
}

/// `w·⋃_{lo ≤ i ≤ hi} h^i [o, h o]` for `g = w h w⁻¹` cyclically reduced.
pub fn quasi_axis(action: &GroupAction, g: &Isometry, lo: i64, hi: i64) -> Result<QuasiAxis> {
    if lo > hi {
        return Err(LabError::InvalidArgument(format!("empty range [{lo}, {hi}]")));
    }
    require_loxodromic(action, g)?;
    let (w, h) = cyclic_reduction(action, g);
    let segment = action.normal_path(&h);
    let mut path = Vec::new();
    let mut orbit_indices = Vec::new();
    for i in lo..=hi {
        let t = action.mul(&w, &action.pow(&h, i));
        let skip = usize::from(!path.is_empty());
        orbit_indices.push(path.len() - skip);
        path.extend(segment.iter().skip(skip).map(|p| action.act(&t, p)));
    }
    orbit_indices.push(path.len() - 1);
    for p in &path {
        action.require_in_ball(p)?;
    }
    let c = quasi_geodesic_constant(action, &path);
    Ok(QuasiAxis {
        owner: g.clone(),
        conjugator: w,
        core: h,
        range: (lo, hi),
        path,
        orbit_indices,
        c,
    })
}

/// Indices of points of `onto` nearest to `x`.
pub fn nearest(action: &GroupAction, x: &Point, onto: &[Point]) -> Vec<usize> {
    let ds: Vec<u32> = onto.iter().map(|p| action.dist(x, p)).collect();
    let m = ds.iter().copied().min().unwrap_or(0);
    (0..onto.len()).filter(|&i| ds[i] == m).collect()
}

/// Union of nearest-point projections of `from` to `onto`, as sorted indices.
pub fn projection(action: &GroupAction, from: &[Point], onto: &[Point]) -> Vec<usize> {
    let mut out: Vec<usize> = from.iter().flat_map(|x| nearest(action, x, onto)).collect();
    out.sort_unstable();
    out.dedup();
    out
}

pub fn diameter<'a>(action: &GroupAction, pts: impl IntoIterator<Item = &'a Point>) -> u32 {
    let pts: Vec<&Point> = pts.into_iter().collect();
    let mut d = 0;
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            d = d.max(action.dist(pts[i], pts[j]));
        }
    }
    d
}

/// Diameter of the projection of `from` onto `onto`.
pub fn projection_diameter(action: &GroupAction, from: &[Point], onto: &[Point]) -> u32 {
    let idx = projection(action, from, onto);
    diameter(action, idx.iter().map(|&i| &onto[i]))
}
