//! The local minimum map and dead ends.

use serde::Serialize;

use super::patch::HorofunctionPatch;
use super::space::HoroSpace;
use crate::error::{LabError, Result};
use crate::graph::{BallGraph, VertexId};

pub const DEFAULT_DESCENT_MARGIN: u32 = 2;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum MinimumReport {
    /// The least value is attained only at depth at most `R - m`.
    FiniteMinimum { value: i32, min_set: Vec<VertexId> },
    /// The least value is at most `-(R - m)`; `witness` is a geodesic from `o`
    /// to a minimiser and `values` the patch along it.
    InfiniteDescent {
        value: i32,
        witness: Vec<VertexId>,
        values: Vec<i32>,
    },
}

impl MinimumReport {
    pub fn min_set(&self) -> Option<&[VertexId]> {
        match self {
            MinimumReport::FiniteMinimum { min_set, .. } => Some(min_set),
            MinimumReport::InfiniteDescent { .. } => None,
        }
    }

    pub fn is_descent(&self) -> bool {
        matches!(self, MinimumReport::InfiniteDescent { .. })
    }
}

pub fn local_minimum_map<S: HoroSpace + ?Sized>(
    space: &S,
    patch: &HorofunctionPatch,
    margin: u32,
) -> Result<MinimumReport> {
    let g = space.graph();
    if patch.values().len() != g.len() || patch.fingerprint() != g.fingerprint() {
        return Err(LabError::MismatchedBall);
    }
    let r = g.radius();
    if margin >= r {
        return Err(LabError::InvalidArgument(format!("margin {margin} must be below radius {r}")));
    }
    let interior = r - margin;
    let value = patch.min();
    let min_set: Vec<VertexId> = g.vertices().filter(|&v| patch.value(v) == value).collect();
    if min_set.iter().all(|&v| g.depth(v) <= interior) {
        return Ok(MinimumReport::FiniteMinimum { value, min_set });
    }
    if value <= -(interior as i32) {
        let deepest = *min_set.iter().max_by_key(|&&v| (g.depth(v), std::cmp::Reverse(v))).expect("nonempty");
        let witness = g.geodesic(g.basepoint(), deepest).expect("ball is connected");
        let values = witness.iter().map(|&v| patch.value(v)).collect();
        return Ok(MinimumReport::InfiniteDescent { value, witness, values });
    }
    Err(LabError::Inconclusive {
        min: value,
        radius: r,
        margin,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DeadEndReport {
    pub dead_end: bool,
    /// No other `y` in the ball has `b_y(x) = b_x(x)`.
    pub isolated: bool,
    pub rival: Option<VertexId>,
}

/// Whether no geodesic from the basepoint through `x` extends one step further.
/// Only vertices strictly inside the ball, or any vertex of a complete graph, are decided.
pub fn is_dead_end(graph: &BallGraph, x: VertexId) -> Result<DeadEndReport> {
    graph.check(x)?;
    let dx = graph.depth(x);
    if !(graph.is_complete() || dx < graph.radius()) {
        return Err(LabError::Uncertified(graph.label(x).to_string()));
    }
    let dead_end = !graph.neighbors(x).iter().any(|&y| graph.depth(y) == dx + 1);
    // b_y(x) = b_x(x) = -d(o,x) exactly when x lies on a geodesic from o to y.
    let from_x = graph.distances_from(x);
    let rival = graph
        .vertices()
        .find(|&y| y != x && from_x[y.index()] != u32::MAX && graph.depth(y) == dx + from_x[y.index()]);
    Ok(DeadEndReport {
        dead_end,
        isolated: rival.is_none(),
        rival,
    })
}
