use serde::Serialize;

use super::ConedOffGraph;
use crate::actions::{Isometry, Point, Ray};
use crate::error::{LabError, Result};
use crate::horo::patch::{limit_along_sequence, DEFAULT_MIN_TAIL};
use crate::horo::{accumulation_probe, local_minimum_map, AccumulationReport, HorofunctionPatch, MinimumReport};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinimumScanEntry {
    pub sequence: String,
    pub descent: bool,
    pub min_value: i32,
    pub min_set: Vec<String>,
    pub unique: bool,
    /// The unique minimiser is a cone vertex.
    pub at_cone: bool,
}

/// Limit patch and minimum set of each named sequence.
pub fn unique_minimum_scan(
    g: &ConedOffGraph,
    sequences: &[(String, Vec<Point>)],
    margin: u32,
) -> Result<Vec<MinimumScanEntry>> {
    let ball = g.ball();
    sequences
        .iter()
        .map(|(name, terms)| {
            let (patch, _) = limit_along_sequence(ball, terms, name, DEFAULT_MIN_TAIL)?;
            let report = local_minimum_map(ball, &patch, margin)?;
            let (descent, min_value, set) = match &report {
                MinimumReport::FiniteMinimum { value, min_set } => (false, *value, min_set.clone()),
                MinimumReport::InfiniteDescent { value, .. } => (true, *value, Vec::new()),
            };
            Ok(MinimumScanEntry {
                sequence: name.clone(),
                descent,
                min_value,
                unique: set.len() == 1,
                at_cone: set.len() == 1 && !ball.is_element_vertex(set[0]),
                min_set: set.iter().map(|&v| ball.label(v).to_string()).collect(),
            })
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct ConeAccumulationReport {
    pub coset: String,
    pub conjugators: Vec<String>,
    pub accumulation: AccumulationReport,
    #[serde(skip)]
    pub patches: Vec<HorofunctionPatch>,
}

/// Patches of `(g p_n g⁻¹)·ξ` for the ray `ξ`, compared with `b_{c(gP)}`.
pub fn cone_accumulation(
    g: &ConedOffGraph,
    coset: &Point,
    conjugators: &[Isometry],
    base: &Ray,
) -> Result<ConeAccumulationReport> {
    let action = g.action();
    let a = action.alphabet();
    let ball = g.ball();
    let Point::Cone { rep, factor } = coset else {
        return Err(LabError::UnknownCoset(action.point_label(coset)));
    };
    let cone = ball
        .vertex_of(coset)
        .ok_or_else(|| LabError::UnknownCoset(action.point_label(coset)))?;
    for p in conjugators {
        let s = p.word().syllables();
        if s.len() > 1 || s.first().is_some_and(|s| s.factor != *factor) {
            return Err(LabError::InvalidArgument(format!(
                "{} is not in the peripheral factor",
                action.format(p)
            )));
        }
    }
    let lengths: Vec<u32> = conjugators.iter().map(|p| action.word_length(p)).collect();
    if a.order(*factor) != 0 || conjugators.is_empty() || lengths.windows(2).any(|w| w[1] <= w[0]) {
        return Err(LabError::BoundedConjugators(action.point_label(coset)));
    }
    let conj = action.from_word(rep);
    let horizon = 2 * ball.radius() + 12;
    let mut patches = Vec::new();
    for p in conjugators {
        let h = action.conjugate(p, &conj);
        let terms: Vec<Point> = (0..horizon).map(|m| action.act(&h, &base.point(action, m))).collect();
        let name = format!("{}·{}", action.format(&h), base.describe(action));
        patches.push(limit_along_sequence(ball, &terms, &name, DEFAULT_MIN_TAIL)?.0);
    }
    Ok(ConeAccumulationReport {
        coset: action.point_label(coset),
        conjugators: conjugators.iter().map(|p| action.format(p)).collect(),
        accumulation: accumulation_probe(ball, cone, &patches)?,
        patches,
    })
}
