//! Finite balls in the space acted on, with vertices labelled by points.

use std::collections::HashMap;

use super::action::{GroupAction, Isometry, Point};
use crate::error::{LabError, Result};
use crate::graph::{BallGraph, BallLimits, VertexId};

/// A ball around the origin together with the action it came from.
#[derive(Clone, Debug)]
pub struct ActionBall {
    action: GroupAction,
    graph: BallGraph,
    points: Vec<Point>,
    index: HashMap<Point, VertexId>,
}

/// Builds the ball of `radius` around `o`. In the coned-off geometry `radius` is the
/// word-metric radius of the element set, and every cone meeting it is added.
pub fn build_ball(action: &GroupAction, radius: u32, limits: BallLimits) -> Result<ActionBall> {
    if let Some(c) = action.custom_action() {
        let g = c.graph();
        let mut labels = Vec::new();
        let mut keep = Vec::new();
        for v in g.vertices() {
            if g.depth(v) <= radius {
                keep.push(v);
                labels.push(g.label(v).to_string());
            }
        }
        let mut renumber = vec![usize::MAX; g.len()];
        for (i, v) in keep.iter().enumerate() {
            renumber[v.index()] = i;
        }
        let edges: Vec<(usize, usize)> = g
            .edges()
            .filter(|(u, v)| renumber[u.index()] != usize::MAX && renumber[v.index()] != usize::MAX)
            .map(|(u, v)| (renumber[u.index()], renumber[v.index()]))
            .collect();
        let mut graph =
            BallGraph::from_edges(labels, &edges, renumber[g.basepoint().index()], Some(radius), limits)?;
        graph.set_complete(keep.len() == g.len());
        let points: Vec<Point> = keep.iter().map(|v| Point::Vertex(v.0)).collect();
        return Ok(ActionBall::new(action.clone(), graph, points));
    }

    let a = action.alphabet();
    let elems = action.elements_within(radius, limits.max_vertices)?;
    let mut points: Vec<Point> = elems.into_iter().map(|g| Point::Elem(g.0)).collect();
    let mut index: HashMap<Point, usize> =
        points.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
    let n_elems = points.len();
    let gens = a.generators();
    let mut edges = Vec::new();
    for (i, p) in points.iter().enumerate() {
        let Point::Elem(x) = p else { unreachable!() };
        for s in &gens {
            if let Some(&j) = index.get(&Point::Elem(a.mul(x, s))) {
                if i < j {
                    edges.push((i, j));
                }
            }
        }
    }
    if action.is_coned() {
        for i in 0..n_elems {
            let Point::Elem(x) = points[i].clone() else { unreachable!() };
            for f in 0..a.factors().len() as u8 {
                let cone = Point::Cone {
                    rep: x.strip_trailing(f),
                    factor: f,
                };
                let j = match index.get(&cone) {
                    Some(&j) => j,
                    None => {
                        if points.len() >= limits.max_vertices {
                            return Err(LabError::ResourceLimit {
                                count: points.len() + 1,
                                cap: limits.max_vertices,
                            });
                        }
                        index.insert(cone.clone(), points.len());
                        points.push(cone);
                        points.len() - 1
                    }
                };
                edges.push((i, j));
            }
        }
    }
    let labels = points.iter().map(|p| action.point_label(p)).collect();
    let mut graph = BallGraph::assemble(labels, &edges, 0, limits)?;
    let small_cycles = a.factors().iter().all(|f| f.order == 0 || f.order <= 5);
    graph.set_convex(action.is_coned() || small_cycles);
    graph.set_radius(radius);
    graph.set_complete(false);
    Ok(ActionBall::new(action.clone(), graph, points))
}

impl ActionBall {
    fn new(action: GroupAction, graph: BallGraph, points: Vec<Point>) -> Self {
        let index = points
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), VertexId(i as u32)))
            .collect();
        ActionBall {
            action,
            graph,
            points,
            index,
        }
    }

    pub fn action(&self) -> &GroupAction {
        &self.action
    }

    pub fn graph(&self) -> &BallGraph {
        &self.graph
    }

    pub fn radius(&self) -> u32 {
        self.graph.radius()
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn point(&self, v: VertexId) -> &Point {
        &self.points[v.index()]
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn vertex_of(&self, p: &Point) -> Option<VertexId> {
        self.index.get(p).copied()
    }

    /// Looks a vertex up by label, accepting any spelling of the same point.
    pub fn vertex(&self, label: &str) -> Result<VertexId> {
        if let Ok(v) = self.graph.vertex(label) {
            return Ok(v);
        }
        let p = self
            .action
            .parse_point(label)
            .map_err(|_| LabError::UnknownVertex(label.to_string()))?;
        self.vertex_of(&p).ok_or_else(|| LabError::UnknownVertex(label.to_string()))
    }

    pub fn label(&self, v: VertexId) -> &str {
        self.graph.label(v)
    }

    /// The group element labelling `v`, when `v` is an element vertex.
    pub fn element(&self, v: VertexId) -> Option<Isometry> {
        match self.point(v) {
            Point::Elem(w) => Some(Isometry(w.clone())),
            _ => None,
        }
    }

    /// `g·v`, which must stay in the ball.
    pub fn apply(&self, g: &Isometry, v: VertexId) -> Result<VertexId> {
        self.graph.check(v)?;
        let p = self.action.act(g, self.point(v));
        self.vertex_of(&p)
            .ok_or_else(|| LabError::OutOfBall(self.action.point_label(&p)))
    }

    pub fn is_element_vertex(&self, v: VertexId) -> bool {
        matches!(self.point(v), Point::Elem(_))
    }

    pub fn origin(&self) -> VertexId {
        self.graph.basepoint()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::actions::action::Geometry;
    use crate::actions::word::Factor;

    #[test]
    fn f2_ball_sizes() {
        let g = GroupAction::f2();
        for (r, n) in [(0, 1), (1, 5), (2, 17), (3, 53)] {
            assert_eq!(build_ball(&g, r, BallLimits::default()).unwrap().len(), n);
        }
    }

    #[test]
    fn apply_examples() {
        let g = GroupAction::f2();
        let b = build_ball(&g, 3, BallLimits::default()).unwrap();
        let v = |s| b.vertex(s).unwrap();
        let i = |s| g.parse(s).unwrap();
        assert_eq!(b.apply(&i("a"), v("e")).unwrap(), v("a"));
        assert_eq!(b.apply(&i("A"), v("a")).unwrap(), v("e"));
        assert_eq!(b.apply(&i("ab"), v("B")).unwrap(), v("a"));
        assert!(matches!(b.apply(&i("aaa"), v("a")), Err(LabError::OutOfBall(_))));
    }

    fn matches_ambient(action: &GroupAction, radius: u32) {
        let b = build_ball(action, radius, BallLimits::default()).unwrap();
        for u in b.graph().vertices() {
            for v in b.graph().vertices() {
                assert_eq!(
                    b.graph().distance(u, v),
                    action.dist(b.point(u), b.point(v)),
                    "{} {}",
                    b.label(u),
                    b.label(v)
                );
            }
        }
        assert!(b.graph().is_convex());
    }

    #[test]
    fn convex_balls_carry_ambient_metric() {
        matches_ambient(&GroupAction::f2(), 3);
        matches_ambient(&GroupAction::z3_z4(), 4);
        matches_ambient(&GroupAction::z3_z4().with_geometry(Geometry::ConedOff).unwrap(), 3);
        matches_ambient(&GroupAction::z_z3().with_geometry(Geometry::ConedOff).unwrap(), 4);
    }

    #[test]
    fn long_cycles_are_not_flagged_convex() {
        let g = GroupAction::free_product(vec![Factor::finite('s', 7), Factor::finite('t', 2)]).unwrap();
        let b = build_ball(&g, 2, BallLimits::default()).unwrap();
        assert!(!b.graph().is_convex());
    }
}
