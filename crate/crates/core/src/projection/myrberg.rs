//! Finite-scale check that a Myrberg-type ray determines a single horofunction class.

use serde::Serialize;

use crate::actions::{ActionBall, Point};
use crate::dynamics::MyrbergRay;
use crate::error::{LabError, Result};
use crate::horo::patch::{finite_difference, limit_along_sequence};

#[derive(Clone, Debug, Serialize)]
pub struct CompetitorVerdict {
    pub name: String,
    pub converges: bool,
    /// `⟨y_last, ray_last⟩_o` reaches past the ball.
    pub same_direction: bool,
    pub finite_difference: Option<u32>,
    pub agrees: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct InjectivityReport {
    pub radius: u32,
    /// The middle of every fellow-travel segment guards `o` from the rest of the ray.
    pub guard_chain: bool,
    pub competitors: Vec<CompetitorVerdict>,
    /// Guard chain holds, every same-direction competitor agrees with the ray's patch
    /// and every other one differs from it.
    pub singleton: bool,
}

pub fn myrberg_injectivity_probe(
    ball: &ActionBall,
    ray: &MyrbergRay,
    competitors: &[(String, Vec<Point>)],
    min_tail: usize,
) -> Result<InjectivityReport> {
    let action = ball.action();
    let o = action.origin();
    let path = &ray.path;
    if path.len() < 2 {
        return Err(LabError::InvalidArgument("ray prefix is empty".into()));
    }
    let guard_chain = ray.segments.iter().all(|s| {
        let w = &path[s.middle];
        path[s.middle + 1..].iter().all(|y| action.is_guard(w, &o, y))
    });
    let (own, _) = limit_along_sequence(ball, path, &ray.element, min_tail)?;
    let last = path.last().expect("nonempty");
    let reach = 2 * (ball.radius() as i64 + 1);
    let mut verdicts = Vec::new();
    for (name, terms) in competitors {
        let Some(y) = terms.last() else { continue };
        let same_direction = action.gromov(y, last, &o).doubled() >= reach;
        let fd = match limit_along_sequence(ball, terms, name, min_tail) {
            Ok((p, _)) => Some(finite_difference(&own, &p)?.lower_bound),
            Err(LabError::NonConvergence { .. }) => None,
            Err(e) => return Err(e),
        };
        verdicts.push(CompetitorVerdict {
            name: name.clone(),
            converges: fd.is_some(),
            same_direction,
            finite_difference: fd,
            agrees: fd == Some(0),
        });
    }
    let singleton = guard_chain
        && verdicts
            .iter()
            .all(|v| if v.same_direction { v.agrees } else { !v.agrees });
    Ok(InjectivityReport {
        radius: ball.radius(),
        guard_chain,
        competitors: verdicts,
        singleton,
    })
}
