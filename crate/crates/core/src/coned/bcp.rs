use rayon::prelude::*;
use serde::Serialize;

use super::ConedOffGraph;
use crate::actions::Point;
use crate::graph::VertexId;

const MAX_WITNESSES: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BcpReport {
    pub radius: u32,
    pub k: u32,
    /// Least `K` such that `d_{gP}(x, y) > K` forces every geodesic `[x, y]` through `c(gP)`.
    pub k_least: u32,
    pub passed: bool,
    pub cosets: usize,
    pub pairs: usize,
    /// Triples with `d_{gP}(x, y) > 0`, each deletion-tested.
    pub checks: usize,
    /// Triples not forced through the cone at the largest unforced projection distance.
    pub witnesses: Vec<String>,
    /// `diam π_{gP}(x) ≤ K*` for every tested `x`.
    pub projection_diameter_ok: bool,
    /// `d_{gP}(x, y) ≤ K*` across every edge `x ~ y` between group elements, so `π_{gP}`
    /// is `K*`-Lipschitz along paths avoiding the cone.
    pub lipschitz_ok: bool,
}

struct CosetScan {
    checks: usize,
    /// `(d_{gP}, witness)` for triples not forced through the cone.
    unforced: Vec<(u32, String)>,
    max_entry_diam: u32,
    ratios: Vec<(u32, u32)>,
}

fn scan_coset(g: &ConedOffGraph, cone: VertexId, elems: &[VertexId]) -> CosetScan {
    let action = g.action();
    let a = action.alphabet();
    let c = g.ball().point(cone);
    let Point::Cone { rep, factor } = c else { unreachable!() };
    let rep_inv = a.inverse(rep);
    // Entry points as exponents k, with entry point rep·x^k.
    let entries: Vec<Vec<i64>> = elems
        .iter()
        .map(|&v| {
            action
                .successors(c, g.ball().point(v))
                .into_iter()
                .map(|p| match p {
                    Point::Elem(w) => a.mul(&rep_inv, &w).first().map_or(0, |s| s.exp as i64),
                    _ => unreachable!(),
                })
                .collect()
        })
        .collect();
    let dist = |k: i64, l: i64| a.reduce_exp(*factor, l - k).unsigned_abs();
    let diam = |xs: &[i64], ys: &[i64]| {
        xs.iter()
            .chain(ys)
            .flat_map(|&k| xs.iter().chain(ys).map(move |&l| dist(k, l)))
            .max()
            .unwrap_or(0)
    };
    let max_entry_diam = entries.iter().map(|e| diam(e, &[])).max().unwrap_or(0);
    let mut checks = 0;
    let mut unforced = Vec::new();
    let mut ratios = Vec::new();
    for i in 0..elems.len() {
        for j in i + 1..elems.len() {
            let d = diam(&entries[i], &entries[j]);
            if d == 0 {
                continue;
            }
            checks += 1;
            let (x, y) = (g.ball().point(elems[i]), g.ball().point(elems[j]));
            ratios.push((d, action.dist(x, y)));
            if !action.is_guard(c, x, y) {
                unforced.push((
                    d,
                    format!(
                        "{} to {} avoids {} with d = {d}",
                        action.point_label(x),
                        action.point_label(y),
                        action.point_label(c)
                    ),
                ));
            }
        }
    }
    CosetScan {
        checks,
        unforced,
        max_entry_diam,
        ratios,
    }
}

/// Exhaustive scan over all element pairs of the ball and every coset cone in it.
pub fn verify_bcp(g: &ConedOffGraph, k: u32) -> BcpReport {
    let elems: Vec<VertexId> = g.elements().collect();
    let cones: Vec<VertexId> = g.cones().collect();
    let scans: Vec<CosetScan> = cones.par_iter().map(|&c| scan_coset(g, c, &elems)).collect();
    let k_least = scans
        .iter()
        .flat_map(|s| s.unforced.iter().map(|u| u.0))
        .max()
        .unwrap_or(0);
    let mut witnesses: Vec<String> = scans
        .iter()
        .flat_map(|s| s.unforced.iter().filter(|u| u.0 == k_least).map(|u| u.1.clone()))
        .collect();
    witnesses.truncate(MAX_WITNESSES);
    let kk = k_least.max(1);
    BcpReport {
        radius: g.radius(),
        k,
        k_least,
        passed: k >= k_least,
        cosets: cones.len(),
        pairs: elems.len() * elems.len().saturating_sub(1) / 2,
        checks: scans.iter().map(|s| s.checks).sum(),
        witnesses,
        projection_diameter_ok: scans.iter().all(|s| s.max_entry_diam <= kk),
        lipschitz_ok: scans
            .iter()
            .all(|s| s.ratios.iter().all(|&(d, dxy)| dxy != 1 || d <= kk)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::actions::GroupAction;
    use crate::coned::build_coned_off;
    use crate::graph::BallLimits;

    #[test]
    fn small_radius() {
        let g = build_coned_off(&GroupAction::z3_z4(), 2, BallLimits::default()).unwrap();
        let r = verify_bcp(&g, 3);
        assert!(r.passed);
        assert!(r.checks > 0);
        assert!(r.projection_diameter_ok && r.lipschitz_ok);
        assert_eq!(r.k_least, 2);
        assert!(r.witnesses.contains(&"e to t^2 avoids <t> with d = 2".to_string()));
    }

    #[test]
    fn radius_five_pins_k_star() {
        let g = build_coned_off(&GroupAction::z3_z4(), 5, BallLimits::default()).unwrap();
        let t = std::time::Instant::now();
        let r = verify_bcp(&g, 3);
        eprintln!("{} cosets, {} checks, {:?}", r.cosets, r.checks, t.elapsed());
        assert!(r.passed);
        assert_eq!(r.k_least, 2);
    }

    #[test]
    fn infinite_peripheral() {
        let g = build_coned_off(&GroupAction::z_z3(), 4, BallLimits::default()).unwrap();
        let r = verify_bcp(&g, 3);
        assert_eq!(r.k_least, 2);
        assert!(r.lipschitz_ok);
        // Large projections exist and are forced.
        assert!(r.checks > 20_000);
    }
}
