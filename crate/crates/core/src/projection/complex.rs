//! The projection complex `P_K` of an axis family, forcing and bounded geodesic image checks.

use rayon::prelude::*;
use serde::Serialize;

use super::family::AxisFamily;
use crate::error::{LabError, Result};
use crate::graph::{BallGraph, BallLimits, VertexId, UNREACHABLE};

#[derive(Clone, Debug)]
pub struct ProjectionComplexGraph {
    pub k: u32,
    pub graph: BallGraph,
    pub connected: bool,
}

impl ProjectionComplexGraph {
    pub fn distance(&self, u: usize, v: usize) -> u32 {
        self.graph.distance(VertexId(u as u32), VertexId(v as u32))
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.graph.neighbors(VertexId(u as u32)).contains(&VertexId(v as u32))
    }

    pub fn len(&self) -> usize {
        self.graph.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graph.is_empty()
    }
}

/// `U ~ V` iff `F_K(U, V)` is empty.
pub fn build_complex(fam: &AxisFamily, k: u32) -> Result<ProjectionComplexGraph> {
    let n = fam.len();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let edges: Vec<(usize, usize)> = pairs
        .into_par_iter()
        .filter(|&(u, v)| (0..n).all(|w| w == u || w == v || fam.d(w, u, v) <= k))
        .collect();
    let labels = fam.members().iter().map(|m| m.label.clone()).collect();
    let graph = BallGraph::from_edges(labels, &edges, 0, None, BallLimits::default())?;
    let connected = graph.is_connected();
    Ok(ProjectionComplexGraph { k, graph, connected })
}

/// Least `K` for which the complex is connected, searching `0..=max_k`.
pub fn least_connected_k(fam: &AxisFamily, max_k: u32) -> Result<Option<u32>> {
    for k in 0..=max_k {
        if build_complex(fam, k)?.connected {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ForcingReport {
    pub k_hat: u32,
    pub passed: bool,
    /// Number of `(U, V, W)` with `W ∈ F_K̂(U, V)`, each deletion-tested.
    pub checks: usize,
    pub witnesses: Vec<String>,
}

/// Every `W ∈ F_K̂(U, V)` must lie on every geodesic from `U` to `V` in the complex.
pub fn verify_forcing(pc: &ProjectionComplexGraph, fam: &AxisFamily, k_hat: u32) -> ForcingReport {
    let n = fam.len();
    let results: Vec<(usize, Vec<String>)> = (0..n)
        .into_par_iter()
        .map(|u| {
            let mut checks = 0;
            let mut bad = Vec::new();
            for v in (u + 1)..n {
                for w in (0..n).filter(|&w| w != u && w != v && fam.d(w, u, v) > k_hat) {
                    checks += 1;
                    let g = &pc.graph;
                    if !g.guards(VertexId(w as u32), VertexId(u as u32), VertexId(v as u32)) {
                        bad.push(format!("{} avoidable between {} and {}", fam.label(w), fam.label(u), fam.label(v)));
                    }
                }
            }
            (checks, bad)
        })
        .collect();
    let checks = results.iter().map(|r| r.0).sum();
    let witnesses: Vec<String> = results.into_iter().flat_map(|r| r.1).collect();
    ForcingReport {
        k_hat,
        passed: witnesses.is_empty(),
        checks,
        witnesses,
    }
}

/// Sweeps `K̂` upward from `K + 1` and returns the first passing report.
pub fn least_forcing_constant(pc: &ProjectionComplexGraph, fam: &AxisFamily) -> ForcingReport {
    let top = fam.max_d().max(pc.k + 1);
    (pc.k + 1..=top)
        .map(|k_hat| verify_forcing(pc, fam, k_hat))
        .find(|r| r.passed)
        .unwrap_or_else(|| verify_forcing(pc, fam, top))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BgitReport {
    pub path: Vec<String>,
    pub target: String,
    /// `max_i d_V(U_0, U_i)`.
    pub value: u32,
    pub min_distance_to_target: u32,
    pub within_k0: Option<bool>,
}

/// Bounded geodesic image along `path`, which must be an edge path staying at
/// distance at least 3 from `v`.
pub fn verify_bgit(
    pc: &ProjectionComplexGraph,
    fam: &AxisFamily,
    path: &[usize],
    v: usize,
    k0: Option<u32>,
) -> Result<BgitReport> {
    let n = fam.len();
    if v >= n || path.iter().any(|&u| u >= n) {
        return Err(LabError::InvalidArgument("member index out of range".into()));
    }
    if path.windows(2).any(|w| !pc.adjacent(w[0], w[1])) {
        return Err(LabError::InvalidArgument("not an edge path in the complex".into()));
    }
    let min_distance_to_target = path.iter().map(|&u| pc.distance(u, v)).min().unwrap_or(UNREACHABLE);
    if let Some(&u) = path.iter().find(|&&u| pc.distance(u, v) < 3) {
        return Err(LabError::Precondition(format!(
            "{} is within distance 2 of {}",
            fam.label(u),
            fam.label(v)
        )));
    }
    let value = match path.first() {
        None => 0,
        Some(&u0) => path[1..].iter().map(|&u| fam.d(v, u0, u)).max().unwrap_or(0),
    };
    Ok(BgitReport {
        path: path.iter().map(|&u| fam.label(u).to_string()).collect(),
        target: fam.label(v).to_string(),
        value,
        min_distance_to_target,
        within_k0: k0.map(|k| value <= k),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::actions::GroupAction;
    use crate::projection::family::{build_axis_family, chain_family};

    #[test]
    fn tree_triangle() {
        let g = GroupAction::f2();
        let seeds = [g.parse("a").unwrap()];
        let ts: Vec<_> = ["e", "b", "B"].iter().map(|w| g.parse(w).unwrap()).collect();
        let fam = build_axis_family(&g, &seeds, &ts).unwrap();
        let pc = build_complex(&fam, 0).unwrap();
        assert_eq!(pc.graph.edge_count(), 3);
        let r = verify_forcing(&pc, &fam, 0);
        assert!(r.passed);
        assert_eq!(r.checks, 0);
    }

    #[test]
    fn chain_is_a_path() {
        let g = GroupAction::f2();
        let fam = chain_family(&g, 4, 7).unwrap();
        let pc = build_complex(&fam, 2).unwrap();
        assert!(pc.connected);
        assert_eq!(pc.graph.edge_count(), 6);
        for i in 0..7 {
            for j in 0..7 {
                assert_eq!(pc.distance(i, j), i.abs_diff(j) as u32);
            }
        }
        let f = least_forcing_constant(&pc, &fam);
        assert!(f.passed);
        assert_eq!(f.k_hat, 3);
        assert!(f.checks > 0);
    }

    #[test]
    fn large_k_collapses_the_chain() {
        let g = GroupAction::f2();
        let fam = chain_family(&g, 4, 5).unwrap();
        let pc = build_complex(&fam, 4).unwrap();
        assert_eq!(pc.graph.edge_count(), 10);
        assert_eq!(least_connected_k(&fam, 4).unwrap(), Some(0));
    }

    #[test]
    fn bgit_on_chain() {
        let g = GroupAction::f2();
        let fam = chain_family(&g, 4, 7).unwrap();
        let pc = build_complex(&fam, 2).unwrap();
        let r = verify_bgit(&pc, &fam, &[0, 1, 2, 3], 6, Some(0)).unwrap();
        assert_eq!(r.value, 0);
        assert_eq!(r.within_k0, Some(true));
        assert_eq!(verify_bgit(&pc, &fam, &[], 6, None).unwrap().value, 0);
        assert!(matches!(verify_bgit(&pc, &fam, &[2, 3, 4], 6, None), Err(LabError::Precondition(_))));
        assert!(matches!(verify_bgit(&pc, &fam, &[0, 2], 6, None), Err(LabError::InvalidArgument(_))));
    }
}
