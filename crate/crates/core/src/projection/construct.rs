//! Loxodromics `g f^n` whose translates of `Ax(f)` march along a geodesic of the
//! projection complex.

use serde::Serialize;

use super::complex::{build_complex, verify_forcing, ForcingReport};
use super::family::{power_chain, AxisFamily, DEFAULT_MEMBER_PERIODS};
use crate::actions::{GroupAction, Isometry};
use crate::error::{LabError, Result};
use crate::graph::VertexId;
use crate::horo::patch::DEFAULT_MIN_TAIL;
use crate::horo::{minimal_class_probe, MinimalClassReport, SubBall};

pub const DEFAULT_CHAIN_LENGTH: usize = 7;

#[derive(Clone, Debug, Serialize)]
pub struct ConstructReport {
    pub element: String,
    pub n: u32,
    pub k: u32,
    pub members: usize,
    /// `d_P(U_0, U_i) = i` for every `i`.
    pub geodesic: bool,
    /// `max |d_P(U_i, U_j) - |i - j||`.
    pub path_deviation: u32,
    pub forcing: ForcingReport,
    /// `max(0, max_{i<j<k} d(o, f^n o) - d_{U_j}(U_i, U_k))`.
    pub d0: u32,
    pub minimal_class: Option<MinimalClassReport>,
}

impl ConstructReport {
    pub fn passed(&self) -> bool {
        self.geodesic && self.forcing.passed && self.minimal_class.as_ref().is_none_or(|m| m.hypothesis_holds)
    }
}

fn check_chain(action: &GroupAction, f: &Isometry, n: u32, k: u32, fam: &AxisFamily) -> Result<ConstructReport> {
    let pc = build_complex(fam, k)?;
    let m = fam.len();
    let mut path_deviation = 0;
    for i in 0..m {
        for j in i + 1..m {
            path_deviation = path_deviation.max(pc.distance(i, j).abs_diff((j - i) as u32));
        }
    }
    let geodesic = (0..m).all(|i| pc.distance(0, i) == i as u32);
    let forcing = verify_forcing(&pc, fam, k + 1);
    let step = action.displacement(&action.pow(f, n as i64));
    let mut d0 = 0;
    for j in 1..m.saturating_sub(1) {
        for i in 0..j {
            for l in j + 1..m {
                d0 = d0.max(step.saturating_sub(fam.d(j, i, l)));
            }
        }
    }
    let minimal_class = if m >= 4 && geodesic {
        let ball = SubBall::new(&pc.graph, VertexId(0), 2)?;
        let xs: Vec<VertexId> = (0..m as u32).map(VertexId).collect();
        let ys: Vec<VertexId> = (0..m as u32).step_by(2).map(VertexId).collect();
        Some(minimal_class_probe(&ball, &xs, &ys, 1, DEFAULT_MIN_TAIL.min(ys.len() - 1))?)
    } else {
        None
    };
    Ok(ConstructReport {
        element: String::new(),
        n,
        k,
        members: m,
        geodesic,
        path_deviation,
        forcing,
        d0,
        minimal_class,
    })
}

/// Builds `h = g f^n` and checks the chain `U_i = h^i · Ax(f)` in `P_K`.
/// Fails with a verification error when the chain is not a geodesic (`n` too small).
pub fn minimal_loxodromic_construct(
    action: &GroupAction,
    g: &Isometry,
    f: &Isometry,
    n: u32,
    k: u32,
) -> Result<(Isometry, ConstructReport)> {
    if n == 0 {
        return Err(LabError::InvalidArgument("n must be positive".into()));
    }
    let h = action.mul(g, &action.pow(f, n as i64));
    let periods = DEFAULT_MEMBER_PERIODS.max(n as i64 + 1);
    let fam = power_chain(action, &h, f, DEFAULT_CHAIN_LENGTH, periods)?;
    let mut report = check_chain(action, f, n, k, &fam)?;
    report.element = action.format(&h);
    if !report.passed() {
        return Err(LabError::VerificationFailure(format!(
            "chain of {} is not a geodesic in P_{k} at n = {n}",
            report.element
        )));
    }
    Ok((h, report))
}

/// Least `n` in `1..=n_max` for which the construction passes.
pub fn least_construct_power(
    action: &GroupAction,
    g: &Isometry,
    f: &Isometry,
    k: u32,
    n_max: u32,
) -> Result<Option<u32>> {
    for n in 1..=n_max {
        match minimal_loxodromic_construct(action, g, f, n, k) {
            Ok(_) => return Ok(Some(n)),
            Err(LabError::VerificationFailure(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    Ok(None)
}
