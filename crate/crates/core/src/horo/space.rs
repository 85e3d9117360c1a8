//! Spaces that horofunction patches live on: a finite ball plus a metric on points
//! that may lie outside it.

use std::fmt::Debug;
use std::hash::Hash;

use crate::actions::{ActionBall, Point};
use crate::graph::{BallGraph, VertexId};

pub trait HoroSpace: Sync {
    type Point: Clone + Eq + Hash + Debug + Send + Sync;

    fn graph(&self) -> &BallGraph;

    fn point(&self, v: VertexId) -> Self::Point;

    fn locate(&self, p: &Self::Point) -> Option<VertexId>;

    fn dist_points(&self, p: &Self::Point, q: &Self::Point) -> u32;

    /// True iff every geodesic from `x` to `z` passes through `w`; endpoints count.
    fn guards(&self, w: &Self::Point, x: &Self::Point, z: &Self::Point) -> bool;

    fn describe(&self, p: &Self::Point) -> String;

    fn origin(&self) -> Self::Point {
        self.point(self.graph().basepoint())
    }

    /// `d(v, p)` for every vertex `v` of the ball.
    fn distances_to(&self, p: &Self::Point) -> Vec<u32> {
        self.graph()
            .vertices()
            .map(|v| self.dist_points(&self.point(v), p))
            .collect()
    }
}

impl HoroSpace for BallGraph {
    type Point = VertexId;

    fn graph(&self) -> &BallGraph {
        self
    }

    fn point(&self, v: VertexId) -> VertexId {
        v
    }

    fn locate(&self, p: &VertexId) -> Option<VertexId> {
        self.contains(*p).then_some(*p)
    }

    fn dist_points(&self, p: &VertexId, q: &VertexId) -> u32 {
        self.distance(*p, *q)
    }

    fn guards(&self, w: &VertexId, x: &VertexId, z: &VertexId) -> bool {
        BallGraph::guards(self, *w, *x, *z)
    }

    fn describe(&self, p: &VertexId) -> String {
        self.label(*p).to_string()
    }

    fn distances_to(&self, p: &VertexId) -> Vec<u32> {
        self.distances_from(*p)
    }
}

impl HoroSpace for ActionBall {
    type Point = Point;

    fn graph(&self) -> &BallGraph {
        ActionBall::graph(self)
    }

    fn point(&self, v: VertexId) -> Point {
        ActionBall::point(self, v).clone()
    }

    fn locate(&self, p: &Point) -> Option<VertexId> {
        self.vertex_of(p)
    }

    fn dist_points(&self, p: &Point, q: &Point) -> u32 {
        self.action().dist(p, q)
    }

    fn guards(&self, w: &Point, x: &Point, z: &Point) -> bool {
        self.action().is_guard(w, x, z)
    }

    fn describe(&self, p: &Point) -> String {
        self.action().point_label(p)
    }

    fn distances_to(&self, p: &Point) -> Vec<u32> {
        let g = ActionBall::graph(self);
        match self.vertex_of(p) {
            Some(u) if g.has_matrix() && g.is_convex() => g.distances_from(u),
            _ => self.points().iter().map(|x| self.action().dist(x, p)).collect(),
        }
    }
}

/// A ball of a larger finite graph; points are vertices of the full graph and
/// distances are measured there.
#[derive(Clone, Debug)]
pub struct SubBall<'a> {
    full: &'a BallGraph,
    ball: BallGraph,
    to_full: Vec<VertexId>,
    from_full: Vec<Option<VertexId>>,
}

impl<'a> SubBall<'a> {
    pub fn new(full: &'a BallGraph, center: VertexId, radius: u32) -> crate::error::Result<Self> {
        full.check(center)?;
        let d = full.distances_from(center);
        let to_full: Vec<VertexId> = full.vertices().filter(|v| d[v.index()] <= radius).collect();
        let mut from_full = vec![None; full.len()];
        for (i, v) in to_full.iter().enumerate() {
            from_full[v.index()] = Some(VertexId(i as u32));
        }
        let labels = to_full.iter().map(|&v| full.label(v).to_string()).collect();
        let edges: Vec<(usize, usize)> = full
            .edges()
            .filter_map(|(u, v)| Some((from_full[u.index()]?.index(), from_full[v.index()]?.index())))
            .collect();
        let base = from_full[center.index()].expect("center is in its ball").index();
        let mut ball = BallGraph::from_edges(labels, &edges, base, Some(radius), Default::default())?;
        ball.set_complete(to_full.len() == full.len());
        Ok(SubBall {
            full,
            ball,
            to_full,
            from_full,
        })
    }

    pub fn full(&self) -> &BallGraph {
        self.full
    }
}

impl HoroSpace for SubBall<'_> {
    type Point = VertexId;

    fn graph(&self) -> &BallGraph {
        &self.ball
    }

    fn point(&self, v: VertexId) -> VertexId {
        self.to_full[v.index()]
    }

    fn locate(&self, p: &VertexId) -> Option<VertexId> {
        self.from_full.get(p.index()).copied().flatten()
    }

    fn dist_points(&self, p: &VertexId, q: &VertexId) -> u32 {
        self.full.distance(*p, *q)
    }

    fn guards(&self, w: &VertexId, x: &VertexId, z: &VertexId) -> bool {
        self.full.guards(*w, *x, *z)
    }

    fn describe(&self, p: &VertexId) -> String {
        self.full.label(*p).to_string()
    }

    fn distances_to(&self, p: &VertexId) -> Vec<u32> {
        let d = self.full.distances_from(*p);
        self.to_full.iter().map(|v| d[v.index()]).collect()
    }
}
