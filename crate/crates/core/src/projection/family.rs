//! Families of translated quasi-axes with set-valued nearest-point projections.

use rayon::prelude::*;
use serde::Serialize;

use crate::actions::axis::{diameter, projection, quasi_axis};
use crate::actions::{GroupAction, Isometry, Point};
use crate::error::{LabError, Result};

/// Periods on each side of the conjugator kept in each member.
pub const DEFAULT_MEMBER_PERIODS: i64 = 4;

#[derive(Clone, Debug)]
pub struct Member {
    pub label: String,
    pub seed: Isometry,
    pub translate: Isometry,
    pub path: Vec<Point>,
    pub period: usize,
}

#[derive(Clone, Debug)]
pub struct AxisFamily {
    action: GroupAction,
    members: Vec<Member>,
    /// `proj[u][v]`: sorted indices into `members[u].path` of `π_U(V)`; empty on the diagonal.
    proj: Vec<Vec<Vec<usize>>>,
    kappa: u32,
}

/// `t·Ax(s)` for every seed `s` and translate `t`, in that order.
pub fn build_axis_family(action: &GroupAction, seeds: &[Isometry], translates: &[Isometry]) -> Result<AxisFamily> {
    build_axis_family_with(action, seeds, translates, DEFAULT_MEMBER_PERIODS)
}

pub fn build_axis_family_with(
    action: &GroupAction,
    seeds: &[Isometry],
    translates: &[Isometry],
    periods: i64,
) -> Result<AxisFamily> {
    let mut members = Vec::new();
    for s in seeds {
        let ax = quasi_axis(action, s, -periods, periods)?;
        for t in translates {
            let path: Vec<Point> = ax.path.iter().map(|p| action.act(t, p)).collect();
            for p in &path {
                action.require_in_ball(p)?;
            }
            let label = if t.is_identity() {
                format!("Ax({})", action.format(s))
            } else {
                format!("{}·Ax({})", action.format(t), action.format(s))
            };
            members.push(Member {
                label,
                seed: s.clone(),
                translate: t.clone(),
                path,
                period: ax.period(),
            });
        }
    }
    AxisFamily::from_members(action, members)
}

impl AxisFamily {
    /// Rejects members sharing more than one period with an earlier member.
    pub fn from_members(action: &GroupAction, members: Vec<Member>) -> Result<Self> {
        for (i, m) in members.iter().enumerate() {
            for prev in &members[..i] {
                let shared = m.path.iter().filter(|p| prev.path.contains(p)).count();
                if shared > m.period.min(prev.period) {
                    return Err(LabError::DuplicateAxis(m.label.clone()));
                }
            }
        }
        let n = members.len();
        let proj: Vec<Vec<Vec<usize>>> = (0..n)
            .into_par_iter()
            .map(|u| {
                (0..n)
                    .map(|v| {
                        if u == v {
                            Vec::new()
                        } else {
                            projection(action, &members[v].path, &members[u].path)
                        }
                    })
                    .collect()
            })
            .collect();
        let mut fam = AxisFamily {
            action: action.clone(),
            members,
            proj,
            kappa: 0,
        };
        fam.kappa = fam.least_kappa();
        Ok(fam)
    }

    pub fn action(&self) -> &GroupAction {
        &self.action
    }

    pub fn members(&self) -> &[Member] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn kappa(&self) -> u32 {
        self.kappa
    }

    pub fn label(&self, u: usize) -> &str {
        &self.members[u].label
    }

    /// `π_U(V)` as points of `U`.
    pub fn projection(&self, u: usize, v: usize) -> Vec<&Point> {
        self.proj[u][v].iter().map(|&i| &self.members[u].path[i]).collect()
    }

    pub fn projection_diameter(&self, u: usize, v: usize) -> u32 {
        diameter(&self.action, self.projection(u, v))
    }

    /// `d_U(V, W) = diam(π_U(V) ∪ π_U(W))`.
    pub fn d(&self, u: usize, v: usize, w: usize) -> u32 {
        let mut idx: Vec<usize> = self.proj[u][v].iter().chain(&self.proj[u][w]).copied().collect();
        idx.sort_unstable();
        idx.dedup();
        diameter(&self.action, idx.iter().map(|&i| &self.members[u].path[i]))
    }

    /// Least `κ` satisfying the first two axioms on this family.
    fn least_kappa(&self) -> u32 {
        let n = self.len();
        let diam = (0..n)
            .flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)))
            .map(|(u, v)| self.projection_diameter(u, v))
            .max()
            .unwrap_or(0);
        let behrstock = (0..n)
            .into_par_iter()
            .map(|u| {
                let mut best = 0;
                for v in (0..n).filter(|&v| v != u) {
                    for w in (0..n).filter(|&w| w != u && w != v) {
                        best = best.max(self.d(v, u, w).min(self.d(u, v, w)));
                    }
                }
                best
            })
            .max()
            .unwrap_or(0);
        diam.max(behrstock)
    }

    /// `F_K(V, W) = {U : d_U(V, W) > K}`, excluding `V` and `W`.
    pub fn interval_set(&self, v: usize, w: usize, k: u32) -> Result<Vec<usize>> {
        if v == w {
            return Err(LabError::SameMember);
        }
        if v >= self.len() || w >= self.len() {
            return Err(LabError::InvalidArgument(format!("member index out of range ({v}, {w})")));
        }
        Ok((0..self.len())
            .filter(|&u| u != v && u != w && self.d(u, v, w) > k)
            .collect())
    }

    pub fn max_d(&self) -> u32 {
        let n = self.len();
        let mut best = 0;
        for u in 0..n {
            for v in (0..n).filter(|&v| v != u) {
                for w in (0..n).filter(|&w| w != u && w != v) {
                    best = best.max(self.d(u, v, w));
                }
            }
        }
        best
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct AxiomReport {
    pub kappa: u32,
    pub members: usize,
    pub axiom1: bool,
    pub axiom2: bool,
    pub axiom3: bool,
    /// Largest `#{U : d_U(V, W) > κ}` over pairs.
    pub axiom3_max_count: usize,
    pub triangle_inequality: bool,
    pub witnesses: Vec<String>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.axiom1 && self.axiom2 && self.axiom3 && self.triangle_inequality
    }
}

/// Checks the axioms at `kappa` (the family's own by default), plus the triangle
/// inequality for `d_X` over all ordered quadruples.
pub fn verify_projection_axioms(fam: &AxisFamily, kappa: Option<u32>) -> AxiomReport {
    let k = kappa.unwrap_or(fam.kappa);
    let n = fam.len();
    let mut witnesses = Vec::new();
    let mut axiom1 = true;
    for u in 0..n {
        for v in (0..n).filter(|&v| v != u) {
            let d = fam.projection_diameter(u, v);
            if d > k {
                axiom1 = false;
                witnesses.push(format!("diam π_{}({}) = {d}", fam.label(u), fam.label(v)));
            }
        }
    }
    let mut axiom2 = true;
    let mut axiom3_max_count = 0;
    for v in 0..n {
        for w in (0..n).filter(|&w| w != v) {
            let mut count = 0;
            for u in (0..n).filter(|&u| u != v && u != w) {
                if fam.d(v, u, w) > k && fam.d(u, v, w) > k {
                    axiom2 = false;
                    witnesses.push(format!(
                        "d_{}({}, {}) and d_{}({}, {}) exceed {k}",
                        fam.label(v),
                        fam.label(u),
                        fam.label(w),
                        fam.label(u),
                        fam.label(v),
                        fam.label(w)
                    ));
                }
                if fam.d(u, v, w) > k {
                    count += 1;
                }
            }
            axiom3_max_count = axiom3_max_count.max(count);
        }
    }
    let mut triangle_inequality = true;
    for x in 0..n {
        for u in (0..n).filter(|&u| u != x) {
            for v in (0..n).filter(|&v| v != x) {
                for w in (0..n).filter(|&w| w != x) {
                    if fam.d(x, v, w) > fam.d(x, v, u) + fam.d(x, u, w) {
                        triangle_inequality = false;
                        witnesses.push(format!("triangle at {}", fam.label(x)));
                    }
                }
            }
        }
    }
    AxiomReport {
        kappa: k,
        members: n,
        axiom1,
        axiom2,
        // A finite family has finitely many members in every interval.
        axiom3: axiom3_max_count < n,
        axiom3_max_count,
        triangle_inequality,
        witnesses,
    }
}

/// `U_i = h^i · Ax(f)` for `i = 0..count`, skipping repeats of earlier members.
pub fn power_chain(
    action: &GroupAction,
    h: &Isometry,
    f: &Isometry,
    count: usize,
    periods: i64,
) -> Result<AxisFamily> {
    let ax = quasi_axis(action, f, -periods, periods)?;
    let mut members: Vec<Member> = Vec::new();
    for i in 0..count {
        let t = action.pow(h, i as i64);
        let path: Vec<Point> = ax.path.iter().map(|p| action.act(&t, p)).collect();
        for p in &path {
            action.require_in_ball(p)?;
        }
        let dup = members.iter().any(|m| {
            path.iter().filter(|p| m.path.contains(p)).count() > ax.period()
        });
        if dup {
            continue;
        }
        members.push(Member {
            label: format!("U{i}"),
            seed: f.clone(),
            translate: t,
            path,
            period: ax.period(),
        });
    }
    AxisFamily::from_members(action, members)
}

/// The chain `U_i = (b a^p)^i · Ax(a)` in `F₂`.
pub fn chain_family(action: &GroupAction, p: u32, count: usize) -> Result<AxisFamily> {
    let h = action.parse(&format!("ba^{p}"))?;
    let a = action.parse("a")?;
    power_chain(action, &h, &a, count, DEFAULT_MEMBER_PERIODS.max(p as i64 + 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn isos(g: &GroupAction, ws: &[&str]) -> Vec<Isometry> {
        ws.iter().map(|w| g.parse(w).unwrap()).collect()
    }

    #[test]
    fn three_lines() {
        let g = GroupAction::f2();
        let fam = build_axis_family(&g, &isos(&g, &["a"]), &isos(&g, &["e", "b", "B"])).unwrap();
        assert_eq!(fam.len(), 3);
        assert_eq!(fam.kappa(), 0);
        assert!(verify_projection_axioms(&fam, None).passed());
    }

    #[test]
    fn six_lines() {
        let g = GroupAction::f2();
        let fam =
            build_axis_family(&g, &isos(&g, &["a"]), &isos(&g, &["e", "b", "b^2", "b^3", "ab", "Ab"])).unwrap();
        assert_eq!(fam.len(), 6);
        assert_eq!(fam.kappa(), 0);
        assert!(verify_projection_axioms(&fam, None).passed());
    }

    #[test]
    fn single_member() {
        let g = GroupAction::f2();
        let fam = build_axis_family(&g, &isos(&g, &["ab"]), &isos(&g, &["e"])).unwrap();
        assert_eq!(fam.kappa(), 0);
    }

    #[test]
    fn duplicates_are_rejected() {
        let g = GroupAction::f2();
        let r = build_axis_family(&g, &isos(&g, &["a"]), &isos(&g, &["e", "a"]));
        assert!(matches!(r, Err(LabError::DuplicateAxis(_))));
    }

    #[test]
    fn middle_axis_separates() {
        let g = GroupAction::f2();
        let fam = build_axis_family(&g, &isos(&g, &["a"]), &isos(&g, &["e", "b", "bab"])).unwrap();
        assert_eq!(fam.interval_set(0, 2, 0).unwrap(), vec![1]);
        assert!(fam.interval_set(0, 2, fam.max_d()).unwrap().is_empty());
        assert!(matches!(fam.interval_set(1, 1, 0), Err(LabError::SameMember)));
    }

    #[test]
    fn chain_projections() {
        let g = GroupAction::f2();
        let fam = chain_family(&g, 3, 4).unwrap();
        assert_eq!(fam.d(1, 0, 2), 3);
        assert_eq!(fam.d(0, 1, 2), 0);
        assert_eq!(fam.interval_set(0, 3, 2).unwrap(), vec![1, 2]);
    }
}
