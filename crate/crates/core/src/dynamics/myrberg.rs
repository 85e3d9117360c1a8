//! Prefixes of Myrberg-type rays `h₁ f₁^{2ω₁} h₂ f₂^{2ω₂} ⋯`.

use num_rational::Ratio;
use serde::Serialize;

use crate::actions::axis::{diameter, quasi_axis, quasi_geodesic_constant};
use crate::actions::probes::{extension_choice, labelled_path, DEFAULT_C_MAX};
use crate::actions::{GroupAction, Isometry, Point};
use crate::error::{LabError, Result};

/// Neighbourhood radius `R` for fellow travelling. Zero is exact in trees; a positive
/// radius also picks up one extra step at each end of a segment except the last.
pub const DEFAULT_FELLOW_RADIUS: u32 = 0;

#[derive(Clone, Debug, Serialize)]
pub struct FellowSegment {
    pub h: String,
    pub f: String,
    pub omega: u32,
    /// `g_i = h₁ f₁^{2ω₁} ⋯ h_i`; the segment follows `g_i·Ax(f_i)`.
    pub translate: String,
    /// Diameter of the part of the prefix within `R` of `g_i·Ax(f_i)`.
    pub length: u32,
    /// Index in the path of a point in the middle of that part.
    pub middle: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct MyrbergRay {
    pub element: String,
    pub pieces: Vec<String>,
    #[serde(skip)]
    pub path: Vec<Point>,
    pub segments: Vec<FellowSegment>,
    pub fellow_radius: u32,
    pub strictly_increasing: bool,
    #[serde(with = "ratio_string")]
    pub c: Ratio<u64>,
}

mod ratio_string {
    use num_rational::Ratio;
    use serde::Serializer;

    pub fn serialize<S: Serializer>(r: &Ratio<u64>, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&r.to_string())
    }
}

/// Builds the prefix for `omega`, cycling through the loxodromics `l`; each `f_i` is
/// chosen from `family` by [`extension_choice`] between `h_i` and `h_{i+1}`.
pub fn myrberg_ray(
    action: &GroupAction,
    omega: &[u32],
    l: &[Isometry],
    family: &[Isometry],
    fellow_radius: u32,
) -> Result<MyrbergRay> {
    if !omega.is_empty() && (l.is_empty() || family.is_empty()) {
        return Err(LabError::InvalidArgument("need loxodromics and a family".into()));
    }
    let hs: Vec<&Isometry> = (0..omega.len()).map(|i| &l[i % l.len()]).collect();
    let mut pieces = Vec::new();
    let mut fs = Vec::new();
    let id = action.identity();
    for (i, &w) in omega.iter().enumerate() {
        let next = hs.get(i + 1).copied().unwrap_or(&id);
        let f = extension_choice(action, family, hs[i], next, Ratio::from_integer(DEFAULT_C_MAX))?.f;
        pieces.push(hs[i].clone());
        pieces.push(action.pow(&f, 2 * w as i64));
        fs.push(f);
    }
    let path = labelled_path(action, &pieces);
    for p in &path {
        action.require_in_ball(p)?;
    }
    let mut segments = Vec::new();
    let mut t = action.identity();
    for (i, &w) in omega.iter().enumerate() {
        t = action.mul(&t, &pieces[2 * i]);
        let span = 2 * w as i64 + 2;
        let ax = quasi_axis(action, &fs[i], -span, span)?;
        let axis: Vec<Point> = ax.path.iter().map(|p| action.act(&t, p)).collect();
        let near: Vec<usize> = (0..path.len())
            .filter(|&j| axis.iter().any(|q| action.dist(&path[j], q) <= fellow_radius))
            .collect();
        segments.push(FellowSegment {
            h: action.format(hs[i]),
            f: action.format(&fs[i]),
            omega: w,
            translate: action.format(&t),
            length: diameter(action, near.iter().map(|&j| &path[j])),
            middle: near.get(near.len() / 2).copied().unwrap_or(0),
        });
        t = action.mul(&t, &pieces[2 * i + 1]);
    }
    let strictly_increasing = segments.windows(2).all(|w| w[0].length < w[1].length);
    Ok(MyrbergRay {
        element: action.format(&t),
        pieces: pieces.iter().map(|p| action.format(p)).collect(),
        c: quasi_geodesic_constant(action, &path),
        path,
        segments,
        fellow_radius,
        strictly_increasing,
    })
}
