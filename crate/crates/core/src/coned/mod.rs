//! Coned-off Cayley graphs of free products: coset projections, bounded coset
//! penetration and the minimum and accumulation behaviour of horofunctions.

mod bcp;
mod lemmas;

pub use bcp::{verify_bcp, BcpReport};
pub use lemmas::{cone_accumulation, unique_minimum_scan, ConeAccumulationReport, MinimumScanEntry};

use serde::Serialize;

use crate::actions::{build_ball, ActionBall, Geometry, GroupAction, Point};
use crate::error::{LabError, Result};
use crate::graph::{BallLimits, VertexId};

/// The element ball of word radius `R` together with one cone per coset of a free
/// factor meeting it.
#[derive(Clone, Debug)]
pub struct ConedOffGraph {
    ball: ActionBall,
}

pub fn build_coned_off(action: &GroupAction, radius: u32, limits: BallLimits) -> Result<ConedOffGraph> {
    if action.custom_action().is_some() {
        return Err(LabError::InvalidArgument("coning needs a free product".into()));
    }
    let action = action.clone().with_geometry(Geometry::ConedOff)?;
    Ok(ConedOffGraph {
        ball: build_ball(&action, radius, limits)?,
    })
}

impl ConedOffGraph {
    pub fn ball(&self) -> &ActionBall {
        &self.ball
    }

    pub fn action(&self) -> &GroupAction {
        self.ball.action()
    }

    pub fn radius(&self) -> u32 {
        self.ball.radius()
    }

    pub fn elements(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.ball.graph().vertices().filter(|&v| self.ball.is_element_vertex(v))
    }

    pub fn cones(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.ball.graph().vertices().filter(|&v| !self.ball.is_element_vertex(v))
    }

    pub fn coset(&self, label: &str) -> Result<Point> {
        match self.action().parse_point(label)? {
            p @ Point::Cone { .. } => Ok(p),
            _ => Err(LabError::UnknownCoset(label.to_string())),
        }
    }

    /// Word-metric distance inside a coset; both points must lie in the same coset.
    pub fn coset_distance(&self, x: &Point, y: &Point) -> u32 {
        let a = self.action().alphabet();
        match (x, y) {
            (Point::Elem(u), Point::Elem(v)) => a.cayley_len(&a.mul(&a.inverse(u), v)),
            _ => panic!("coset distance between group elements only"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CosetProjection {
    pub coset: String,
    #[serde(skip)]
    pub entry: Vec<Point>,
    pub labels: Vec<String>,
}

/// Coset elements adjacent to `c(gP)` through which some geodesic from `x` enters the cone.
pub fn coset_projection(g: &ConedOffGraph, x: &Point, coset: &Point) -> Result<CosetProjection> {
    let action = g.action();
    if !matches!(coset, Point::Cone { .. }) {
        return Err(LabError::UnknownCoset(action.point_label(coset)));
    }
    if x == coset {
        return Err(LabError::InvalidArgument("x is the cone point itself".into()));
    }
    let mut entry = action.successors(coset, x);
    entry.sort();
    Ok(CosetProjection {
        coset: action.point_label(coset),
        labels: entry.iter().map(|p| action.point_label(p)).collect(),
        entry,
    })
}

/// `d_{gP}(x, y)`: diameter of `π(x) ∪ π(y)` in the coset word metric.
pub fn coset_projection_distance(g: &ConedOffGraph, x: &Point, y: &Point, coset: &Point) -> Result<u32> {
    let px = coset_projection(g, x, coset)?;
    let py = coset_projection(g, y, coset)?;
    let all: Vec<&Point> = px.entry.iter().chain(&py.entry).collect();
    Ok(all
        .iter()
        .flat_map(|p| all.iter().map(move |q| (p, q)))
        .map(|(p, q)| g.coset_distance(p, q))
        .max()
        .unwrap_or(0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z() -> ConedOffGraph {
        build_coned_off(&GroupAction::z3_z4(), 2, BallLimits::default()).unwrap()
    }

    #[test]
    fn radius_zero() {
        let g = build_coned_off(&GroupAction::z3_z4(), 0, BallLimits::default()).unwrap();
        assert_eq!(g.elements().count(), 1);
        let cones: Vec<VertexId> = g.cones().collect();
        assert_eq!(cones.len(), 2);
        for c in cones {
            assert_eq!(g.ball().graph().degree(c), 1);
        }
    }

    #[test]
    fn cone_degree_counts_coset_elements() {
        let g = z();
        let a = g.action();
        for c in g.cones() {
            let Point::Cone { rep, factor } = g.ball().point(c).clone() else { unreachable!() };
            let m = a.alphabet().order(factor) as i64;
            let inside = (0..m)
                .filter(|&k| {
                    let w = a.alphabet().mul(&rep, &a.alphabet().syllable(factor, k));
                    a.alphabet().cayley_len(&w) <= 2
                })
                .count();
            assert_eq!(g.ball().graph().degree(c), inside);
        }
    }

    #[test]
    fn coning_shortens() {
        let g = z();
        let cayley = GroupAction::z3_z4();
        let els: Vec<VertexId> = g.elements().collect();
        for &u in &els {
            for &v in &els {
                let (p, q) = (g.ball().point(u), g.ball().point(v));
                assert!(g.action().dist(p, q) <= cayley.dist(p, q));
            }
        }
        let e = g.action().origin();
        assert_eq!(g.action().dist(&e, &g.action().parse_point("s").unwrap()), 1);
    }

    #[test]
    fn projections() {
        let g = z();
        let a = g.action();
        let t = g.coset("<t>").unwrap();
        let p = |s: &str| a.parse_point(s).unwrap();
        assert_eq!(coset_projection(&g, &p("s"), &t).unwrap().labels, ["e"]);
        assert_eq!(coset_projection(&g, &p("t^2"), &t).unwrap().labels, ["t^2"]);
        assert_eq!(coset_projection(&g, &p("t^2s"), &t).unwrap().labels, ["t^2"]);
        assert_eq!(coset_projection_distance(&g, &p("s"), &p("t^2s"), &t).unwrap(), 2);
        assert!(matches!(g.coset("st"), Err(LabError::UnknownCoset(_))));
    }
}
