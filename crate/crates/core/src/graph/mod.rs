//! Finite balls with exact distances.
//!
//! A [`BallGraph`] is the induced subgraph on a metric ball around a basepoint.
//! Distances are stored as a dense `u8` matrix when the ball is small enough and
//! recomputed by BFS otherwise.

pub mod io;
mod metric;

use std::collections::hash_map::DefaultHasher;
use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{LabError, Result};

pub use io::{read_adjacency_csv, EdgeList};
pub use metric::{DeltaEstimate, SamplingPolicy};

/// Distance value used for pairs in different components.
pub const UNREACHABLE: u32 = u32::MAX;

const MATRIX_INF: u8 = u8::MAX;

/// Balls up to this many vertices get a dense distance matrix.
pub const DEFAULT_DENSE_CAP: usize = 16_384;

/// Hard cap on the number of vertices any builder will materialise.
pub const DEFAULT_MAX_VERTICES: usize = 200_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(pub u32);

impl VertexId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

/// Limits applied while building balls.
#[derive(Clone, Copy, Debug)]
pub struct BallLimits {
    pub max_vertices: usize,
    pub dense_cap: usize,
}

impl Default for BallLimits {
    fn default() -> Self {
        BallLimits {
            max_vertices: DEFAULT_MAX_VERTICES,
            dense_cap: DEFAULT_DENSE_CAP,
        }
    }
}

#[derive(Clone, Debug)]
pub struct BallGraph {
    labels: Vec<String>,
    index: HashMap<String, VertexId>,
    offsets: Vec<u32>,
    targets: Vec<VertexId>,
    basepoint: VertexId,
    radius: u32,
    depth: Vec<u32>,
    dist: Option<Vec<u8>>,
    convex: bool,
    complete: bool,
    fingerprint: u64,
}

impl BallGraph {
    /// Builds the ball of `radius` around `basepoint` in the graph given by
    /// `labels` and `edges`. `radius = None` keeps every vertex, reachable or not.
    pub fn from_edges(
        labels: Vec<String>,
        edges: &[(usize, usize)],
        basepoint: usize,
        radius: Option<u32>,
        limits: BallLimits,
    ) -> Result<BallGraph> {
        let n = labels.len();
        if basepoint >= n {
            return Err(LabError::UnknownVertex(format!("#{basepoint}")));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(LabError::InvalidArgument(format!("edge ({u},{v}) out of range")));
            }
            if u != v {
                adj[u].push(v);
                adj[v].push(u);
            }
        }
        for a in &mut adj {
            a.sort_unstable();
            a.dedup();
        }
        let depth = bfs_plain(&adj, basepoint);
        let keep: Vec<usize> = (0..n)
            .filter(|&v| match radius {
                Some(r) => depth[v] != UNREACHABLE && depth[v] <= r,
                None => true,
            })
            .collect();
        let complete = keep.len() == n;
        let mut renumber = vec![usize::MAX; n];
        for (new, &old) in keep.iter().enumerate() {
            renumber[old] = new;
        }
        let kept_labels: Vec<String> = keep.iter().map(|&v| labels[v].clone()).collect();
        let mut kept_edges = Vec::new();
        for &u in &keep {
            for &v in &adj[u] {
                if u < v && renumber[v] != usize::MAX {
                    kept_edges.push((renumber[u], renumber[v]));
                }
            }
        }
        let mut g = BallGraph::assemble(kept_labels, &kept_edges, renumber[basepoint], limits)?;
        g.complete = complete;
        if let Some(r) = radius {
            g.radius = r.max(g.radius);
        }
        Ok(g)
    }

    /// Assembles a graph whose vertex set is already the ball; used by group builders
    /// that enumerate vertices themselves.
    pub(crate) fn assemble(
        labels: Vec<String>,
        edges: &[(usize, usize)],
        basepoint: usize,
        limits: BallLimits,
    ) -> Result<BallGraph> {
        let n = labels.len();
        if n > limits.max_vertices {
            return Err(LabError::ResourceLimit {
                count: n,
                cap: limits.max_vertices,
            });
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u != v {
                adj[u].push(v);
                adj[v].push(u);
            }
        }
        let mut offsets = Vec::with_capacity(n + 1);
        let mut targets = Vec::with_capacity(2 * edges.len());
        offsets.push(0u32);
        for a in &mut adj {
            a.sort_unstable();
            a.dedup();
            targets.extend(a.iter().map(|&v| VertexId(v as u32)));
            offsets.push(targets.len() as u32);
        }
        let mut index = HashMap::with_capacity(n);
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), VertexId(i as u32)).is_some() {
                return Err(LabError::InvalidArgument(format!("duplicate vertex label `{l}`")));
            }
        }
        let mut hasher = DefaultHasher::new();
        labels.hash(&mut hasher);
        targets.hash(&mut hasher);
        basepoint.hash(&mut hasher);
        let mut g = BallGraph {
            labels,
            index,
            offsets,
            targets,
            basepoint: VertexId(basepoint as u32),
            radius: 0,
            depth: Vec::new(),
            dist: None,
            convex: false,
            complete: true,
            fingerprint: hasher.finish(),
        };
        g.depth = g.bfs(g.basepoint, None);
        g.radius = g.depth.iter().copied().filter(|&d| d != UNREACHABLE).max().unwrap_or(0);
        if n <= limits.dense_cap {
            g.fill_matrix()?;
        }
        Ok(g)
    }

    fn fill_matrix(&mut self) -> Result<()> {
        let n = self.len();
        let mut m = vec![MATRIX_INF; n * n];
        let overflow = std::sync::atomic::AtomicBool::new(false);
        let this = &*self;
        m.par_chunks_mut(n.max(1)).enumerate().for_each(|(u, row)| {
            let d = this.bfs(VertexId(u as u32), None);
            for (slot, dv) in row.iter_mut().zip(d) {
                if dv == UNREACHABLE {
                    *slot = MATRIX_INF;
                } else if dv >= MATRIX_INF as u32 {
                    overflow.store(true, std::sync::atomic::Ordering::Relaxed);
                } else {
                    *slot = dv as u8;
                }
            }
        });
        // Very deep graphs fall back to BFS on demand.
        if !overflow.into_inner() {
            self.dist = Some(m);
        }
        Ok(())
    }

    pub(crate) fn set_convex(&mut self, convex: bool) {
        self.convex = convex;
    }

    pub(crate) fn set_radius(&mut self, radius: u32) {
        self.radius = radius;
    }

    pub(crate) fn set_complete(&mut self, complete: bool) {
        self.complete = complete;
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.len() as u32).map(VertexId)
    }

    pub fn basepoint(&self) -> VertexId {
        self.basepoint
    }

    pub fn radius(&self) -> u32 {
        self.radius
    }

    /// Ball distances equal ambient distances for every pair.
    pub fn is_convex(&self) -> bool {
        self.convex || self.complete
    }

    /// The ball is the whole graph.
    pub fn is_complete(&self) -> bool {
        self.complete
    }

    /// Induced balls always satisfy the margin guarantee.
    pub fn certified(&self) -> bool {
        true
    }

    /// Whether `d(u,v)` is known to equal the ambient distance.
    pub fn pair_certified(&self, u: VertexId, v: VertexId) -> bool {
        self.is_convex() || self.depth(u) + self.depth(v) <= self.radius
    }

    pub fn has_matrix(&self) -> bool {
        self.dist.is_some()
    }

    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    pub fn label(&self, v: VertexId) -> &str {
        &self.labels[v.index()]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn vertex(&self, label: &str) -> Result<VertexId> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| LabError::UnknownVertex(label.to_string()))
    }

    pub fn contains(&self, v: VertexId) -> bool {
        v.index() < self.len()
    }

    pub(crate) fn check(&self, v: VertexId) -> Result<()> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(LabError::UnknownVertex(v.to_string()))
        }
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        let i = v.index();
        &self.targets[self.offsets[i] as usize..self.offsets[i + 1] as usize]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.neighbors(v).len()
    }

    /// Unordered edges with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.vertices()
            .flat_map(move |u| self.neighbors(u).iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn edge_count(&self) -> usize {
        self.targets.len() / 2
    }

    /// `d(o, v)`.
    pub fn depth(&self, v: VertexId) -> u32 {
        self.depth[v.index()]
    }

    /// Exact graph distance; [`UNREACHABLE`] across components.
    pub fn distance(&self, u: VertexId, v: VertexId) -> u32 {
        match &self.dist {
            Some(m) => {
                let d = m[u.index() * self.len() + v.index()];
                if d == MATRIX_INF {
                    UNREACHABLE
                } else {
                    d as u32
                }
            }
            None => self.bfs(u, None)[v.index()],
        }
    }

    /// Checked variant of [`BallGraph::distance`].
    pub fn try_distance(&self, u: VertexId, v: VertexId) -> Result<u32> {
        self.check(u)?;
        self.check(v)?;
        Ok(self.distance(u, v))
    }

    /// All distances from `u`.
    pub fn distances_from(&self, u: VertexId) -> Vec<u32> {
        match &self.dist {
            Some(m) => {
                let n = self.len();
                m[u.index() * n..(u.index() + 1) * n]
                    .iter()
                    .map(|&d| if d == MATRIX_INF { UNREACHABLE } else { d as u32 })
                    .collect()
            }
            None => self.bfs(u, None),
        }
    }

    /// BFS distances from `src`, optionally with one vertex deleted.
    pub(crate) fn bfs(&self, src: VertexId, deleted: Option<VertexId>) -> Vec<u32> {
        let mut d = vec![UNREACHABLE; self.len()];
        if Some(src) == deleted {
            return d;
        }
        let mut queue = VecDeque::new();
        d[src.index()] = 0;
        queue.push_back(src);
        while let Some(u) = queue.pop_front() {
            let du = d[u.index()];
            for &v in self.neighbors(u) {
                if Some(v) != deleted && d[v.index()] == UNREACHABLE {
                    d[v.index()] = du + 1;
                    queue.push_back(v);
                }
            }
        }
        d
    }

    /// One geodesic from `u` to `v`, smallest vertex id first at each step.
    pub fn geodesic(&self, u: VertexId, v: VertexId) -> Option<Vec<VertexId>> {
        let to_v = self.distances_from(v);
        if to_v[u.index()] == UNREACHABLE {
            return None;
        }
        let mut path = vec![u];
        let mut cur = u;
        while cur != v {
            let want = to_v[cur.index()] - 1;
            cur = *self.neighbors(cur).iter().find(|w| to_v[w.index()] == want)?;
            path.push(cur);
        }
        Some(path)
    }

    pub fn is_connected(&self) -> bool {
        self.depth.iter().all(|&d| d != UNREACHABLE)
    }
}

fn bfs_plain(adj: &[Vec<usize>], src: usize) -> Vec<u32> {
    let mut d = vec![UNREACHABLE; adj.len()];
    let mut queue = VecDeque::new();
    d[src] = 0;
    queue.push_back(src);
    while let Some(u) = queue.pop_front() {
        for &v in &adj[u] {
            if d[v] == UNREACHABLE {
                d[v] = d[u] + 1;
                queue.push_back(v);
            }
        }
    }
    d
}
