//! Horofunction patches, limits along sequences, and the finite-difference bound.

use serde::Serialize;

use super::space::HoroSpace;
use crate::error::{LabError, Result};
use crate::graph::{VertexId, UNREACHABLE};

/// Number of trailing terms that must agree before a value counts as stable.
pub const DEFAULT_MIN_TAIL: usize = 2;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Provenance {
    Point { point: String },
    Limit { sequence: String, terms: usize },
    Derived { note: String },
}

/// Integer values of a horofunction on a ball, normalised to vanish at `o`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HorofunctionPatch {
    #[serde(skip)]
    fingerprint: u64,
    basepoint: VertexId,
    radius: u32,
    values: Vec<i32>,
    provenance: Provenance,
    /// Per vertex, the first term index from which the value is constant.
    #[serde(skip_serializing_if = "Option::is_none")]
    stabilization: Option<Vec<u32>>,
}

impl HorofunctionPatch {
    /// Wraps values after checking `value(o) = 0` and the 1-Lipschitz bound on every edge.
    pub fn new<S: HoroSpace + ?Sized>(space: &S, values: Vec<i32>, provenance: Provenance) -> Result<Self> {
        let g = space.graph();
        if values.len() != g.len() {
            return Err(LabError::MismatchedBall);
        }
        let o = g.basepoint();
        if values[o.index()] != 0 {
            return Err(LabError::VerificationFailure(format!(
                "patch is {} at the basepoint",
                values[o.index()]
            )));
        }
        for (u, v) in g.edges() {
            if (values[u.index()] - values[v.index()]).abs() > 1 {
                return Err(LabError::VerificationFailure(format!(
                    "patch is not 1-Lipschitz across {}-{}",
                    g.label(u),
                    g.label(v)
                )));
            }
        }
        Ok(HorofunctionPatch {
            fingerprint: g.fingerprint(),
            basepoint: o,
            radius: g.radius(),
            values,
            provenance,
            stabilization: None,
        })
    }

    pub fn values(&self) -> &[i32] {
        &self.values
    }

    pub fn value(&self, v: VertexId) -> i32 {
        self.values[v.index()]
    }

    pub fn basepoint(&self) -> VertexId {
        self.basepoint
    }

    pub fn radius(&self) -> u32 {
        self.radius
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn stabilization(&self) -> Option<&[u32]> {
        self.stabilization.as_deref()
    }

    pub fn max_stabilization(&self) -> u32 {
        self.stabilization().map_or(0, |s| s.iter().copied().max().unwrap_or(0))
    }

    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    pub fn min(&self) -> i32 {
        self.values.iter().copied().min().unwrap_or(0)
    }

    /// `vertex,value` rows.
    pub fn to_csv<S: HoroSpace + ?Sized>(&self, space: &S) -> String {
        let mut out = String::from("vertex,value\n");
        for v in space.graph().vertices() {
            out.push_str(&format!("{},{}\n", space.graph().label(v), self.values[v.index()]));
        }
        out
    }

    pub(crate) fn same_ball(&self, other: &Self) -> Result<()> {
        if self.fingerprint != other.fingerprint || self.values.len() != other.values.len() {
            Err(LabError::MismatchedBall)
        } else {
            Ok(())
        }
    }
}

/// `d(x, y) - d(o, y)` for every `x` in the ball.
pub fn horofunction_values<S: HoroSpace + ?Sized>(space: &S, y: &S::Point) -> Vec<i32> {
    let d = space.distances_to(y);
    let base = d[space.graph().basepoint().index()] as i64;
    d.into_iter()
        .map(|x| {
            debug_assert!(x != UNREACHABLE);
            (x as i64 - base) as i32
        })
        .collect()
}

/// `b_y` for a vertex `y` of the ball.
pub fn horofunction_of_point<S: HoroSpace + ?Sized>(space: &S, y: VertexId) -> Result<HorofunctionPatch> {
    space.graph().check(y)?;
    horofunction_at(space, &space.point(y))
}

/// `b_y` for any point `y` of the ambient space.
pub fn horofunction_at<S: HoroSpace + ?Sized>(space: &S, y: &S::Point) -> Result<HorofunctionPatch> {
    let g = space.graph();
    if let Some(v) = space.locate(y) {
        if g.depth(v) == UNREACHABLE {
            return Err(LabError::UnknownVertex(g.label(v).to_string()));
        }
    }
    let values = horofunction_values(space, y);
    HorofunctionPatch::new(
        space,
        values,
        Provenance::Point {
            point: space.describe(y),
        },
    )
}

/// Per-vertex index after which `b_{y_n}(x)` is constant over the given terms.
#[derive(Clone, Debug, Serialize)]
pub struct ConvergenceCertificate {
    pub terms: usize,
    pub min_tail: usize,
    pub max_index: u32,
}

/// Pointwise limit of `b_{y_n}` over `terms`. Each value must be constant on at
/// least the last `min_tail + 1` terms.
pub fn limit_along_sequence<S: HoroSpace + ?Sized>(
    space: &S,
    terms: &[S::Point],
    description: &str,
    min_tail: usize,
) -> Result<(HorofunctionPatch, ConvergenceCertificate)> {
    let n = space.graph().len();
    if terms.len() <= min_tail {
        return Err(LabError::InvalidArgument(format!(
            "need more than {min_tail} terms, got {}",
            terms.len()
        )));
    }
    let rows: Vec<Vec<i32>> = terms.iter().map(|y| horofunction_values(space, y)).collect();
    let last = rows.len() - 1;
    let mut stab = vec![0u32; n];
    for x in 0..n {
        let target = rows[last][x];
        let mut s = last;
        while s > 0 && rows[s - 1][x] == target {
            s -= 1;
        }
        if s + min_tail > last {
            return Err(LabError::NonConvergence {
                vertex: space.graph().label(VertexId(x as u32)).to_string(),
                horizon: terms.len(),
            });
        }
        stab[x] = s as u32;
    }
    let mut patch = HorofunctionPatch::new(
        space,
        rows[last].clone(),
        Provenance::Limit {
            sequence: description.to_string(),
            terms: terms.len(),
        },
    )?;
    let max_index = stab.iter().copied().max().unwrap_or(0);
    patch.stabilization = Some(stab);
    Ok((
        patch,
        ConvergenceCertificate {
            terms: terms.len(),
            min_tail,
            max_index,
        },
    ))
}

/// `lim b_{y_n}(x)` at a single point, which may lie outside the ball.
pub fn limit_value_at<S: HoroSpace + ?Sized>(
    space: &S,
    terms: &[S::Point],
    x: &S::Point,
    min_tail: usize,
) -> Result<i32> {
    let o = space.origin();
    let vals: Vec<i64> = terms
        .iter()
        .map(|y| space.dist_points(x, y) as i64 - space.dist_points(&o, y) as i64)
        .collect();
    let last = vals.len().checked_sub(1).ok_or(LabError::InvalidArgument("no terms".into()))?;
    if last < min_tail || vals[last - min_tail..].iter().any(|&v| v != vals[last]) {
        return Err(LabError::NonConvergence {
            vertex: space.describe(x),
            horizon: terms.len(),
        });
    }
    Ok(vals[last] as i32)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FiniteDifferenceBound {
    /// `max |p - q|` over the ball; a lower bound for the sup over the whole space.
    pub lower_bound: u32,
    pub radius: u32,
    pub witness: Option<VertexId>,
}

pub fn finite_difference(p: &HorofunctionPatch, q: &HorofunctionPatch) -> Result<FiniteDifferenceBound> {
    p.same_ball(q)?;
    let mut best = 0;
    let mut witness = None;
    for (i, (a, b)) in p.values.iter().zip(&q.values).enumerate() {
        let d = a.abs_diff(*b);
        if d > best {
            best = d;
            witness = Some(VertexId(i as u32));
        }
    }
    Ok(FiniteDifferenceBound {
        lower_bound: best,
        radius: p.radius,
        witness,
    })
}

/// [`finite_difference`] restricted to vertices of depth at most `radius`.
pub fn finite_difference_within<S: HoroSpace + ?Sized>(
    space: &S,
    p: &HorofunctionPatch,
    q: &HorofunctionPatch,
    radius: u32,
) -> Result<FiniteDifferenceBound> {
    p.same_ball(q)?;
    let g = space.graph();
    let mut out = FiniteDifferenceBound {
        lower_bound: 0,
        radius,
        witness: None,
    };
    for v in g.vertices().filter(|&v| g.depth(v) <= radius) {
        let d = p.value(v).abs_diff(q.value(v));
        if d > out.lower_bound {
            out.lower_bound = d;
            out.witness = Some(v);
        }
    }
    Ok(out)
}
