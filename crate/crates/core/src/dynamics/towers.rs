//! Paradoxical towers `A_i = {f₀ f_b b : f_b = f_i}`, `g_i = f_i⁻¹ f₀⁻¹`, checked on a ball.

use std::collections::{BTreeSet, HashMap};

use num_rational::Ratio;
use rayon::prelude::*;
use serde::Serialize;

use super::semigroup::free_semigroup_certificate;
use crate::actions::probes::{extension_choice, weakly_independent, DEFAULT_C_MAX};
use crate::actions::{GroupAction, Isometry};
use crate::error::{LabError, Result};

/// Projection bound used to test that the three loxodromics are weakly independent.
pub const DEFAULT_INDEPENDENCE_TAU: u32 = 2;
/// Search depth and product length for `f₀`.
pub const F0_DEPTH: u32 = 7;
pub const F0_CHECK: u32 = 3;

#[derive(Clone, Debug, Serialize)]
pub struct TowerCertificate {
    pub d: Vec<String>,
    pub f: Vec<String>,
    pub f0: String,
    pub g: Vec<String>,
    pub radius: u32,
    /// Ball elements tested.
    pub checked: usize,
    /// `|A_i ∩ ball|`.
    pub sizes: [usize; 3],
    /// Ball elements lying in at least one `a·A_i`.
    pub ball_hits: usize,
    /// Elements `a f₀ f_b b` with `a ∈ D` and `b` in the ball, all distinct.
    pub parametrised: usize,
    /// The translates `a·A_i` meet no ball element twice and the parametrised
    /// elements are pairwise distinct.
    pub disjoint: bool,
    /// Every ball element lies in some `g_i A_i`.
    pub covering: bool,
    /// ... and in exactly one, the one indexed by its own `f_x`.
    pub partition: bool,
    pub witnesses: Vec<String>,
}

impl TowerCertificate {
    pub fn passed(&self) -> bool {
        self.disjoint && self.covering
    }
}

pub fn paradoxical_towers(
    action: &GroupAction,
    d: &[Isometry],
    f: &[Isometry; 3],
    radius: u32,
) -> Result<TowerCertificate> {
    if d.is_empty() || d.iter().any(Isometry::is_identity) {
        return Err(LabError::InvalidArgument("D must be nonempty and avoid the identity".into()));
    }
    for i in 0..3 {
        for j in i + 1..3 {
            if !weakly_independent(action, &f[i], &f[j], DEFAULT_INDEPENDENCE_TAU)? {
                return Err(LabError::Precondition(format!(
                    "{} and {} are not weakly independent",
                    action.format(&f[i]),
                    action.format(&f[j])
                )));
            }
        }
    }
    let mut s: BTreeSet<Isometry> = d.iter().cloned().collect();
    for x in d {
        for y in d {
            s.insert(action.mul(&action.inverse(x), y));
        }
    }
    s.remove(&action.identity());
    let s: Vec<Isometry> = s.into_iter().collect();
    let (f0, _) = free_semigroup_certificate(action, &s, F0_DEPTH, F0_CHECK)?;
    let f0_inv = action.inverse(&f0);
    let g: Vec<Isometry> = f.iter().map(|fi| action.mul(&action.inverse(fi), &f0_inv)).collect();
    let ball = action.elements_within(radius, usize::MAX)?;
    // y ∈ A_i iff b = (f₀ f_i)⁻¹ y has f_b = f_i.
    let pre: Vec<Isometry> = f.iter().map(|fi| action.inverse(&action.mul(&f0, fi))).collect();
    let mut needed: BTreeSet<Isometry> = BTreeSet::new();
    for x in &ball {
        needed.insert(x.clone());
        for a in d {
            let y = action.mul(&action.inverse(a), x);
            for p in &pre {
                needed.insert(action.mul(p, &y));
            }
        }
    }
    let c = Ratio::from_integer(DEFAULT_C_MAX);
    let choice: HashMap<Isometry, usize> = needed
        .into_par_iter()
        .map(|b| {
            let fb = extension_choice(action, f, &f0, &b, c)?.f;
            let idx = f.iter().position(|x| *x == fb).expect("chosen from the family");
            Ok((b, idx))
        })
        .collect::<Result<_>>()?;
    let in_a = |i: usize, y: &Isometry| choice[&action.mul(&pre[i], y)] == i;
    let mut sizes = [0; 3];
    let mut witnesses = Vec::new();
    let mut disjoint = true;
    let mut covering = true;
    let mut ball_hits = 0;
    let mut partition = true;
    for x in &ball {
        for (i, size) in sizes.iter_mut().enumerate() {
            if in_a(i, x) {
                *size += 1;
            }
        }
        let hits: Vec<(usize, usize)> = d
            .iter()
            .enumerate()
            .flat_map(|(k, a)| {
                let y = action.mul(&action.inverse(a), x);
                (0..3).filter(move |&i| in_a(i, &y)).map(move |i| (k, i))
            })
            .collect();
        if !hits.is_empty() {
            ball_hits += 1;
        }
        if hits.len() > 1 {
            disjoint = false;
            if witnesses.len() < 16 {
                let names: Vec<String> = hits
                    .iter()
                    .map(|&(k, i)| format!("{}·A{}", action.format(&d[k]), i + 1))
                    .collect();
                witnesses.push(format!("{} lies in {}", action.format(x), names.join(", ")));
            }
        }
        let covers = (0..3).filter(|&i| in_a(i, &action.mul(&action.inverse(&g[i]), x))).count();
        partition &= covers == 1;
        if covers == 0 {
            covering = false;
            if witnesses.len() < 16 {
                witnesses.push(format!("{} is not covered", action.format(x)));
            }
        }
    }
    // a f₀ f_b b determines (a, b), hence also i.
    let mut owner: HashMap<Isometry, (usize, &Isometry)> = HashMap::new();
    for (k, a) in d.iter().enumerate() {
        let af0 = action.mul(a, &f0);
        for b in &ball {
            let y = action.mul(&action.mul(&af0, &f[choice[b]]), b);
            if let Some((k2, b2)) = owner.insert(y.clone(), (k, b)) {
                disjoint = false;
                if witnesses.len() < 16 {
                    witnesses.push(format!(
                        "{} arises from ({}, {}) and ({}, {})",
                        action.format(&y),
                        action.format(&d[k2]),
                        action.format(b2),
                        action.format(a),
                        action.format(b)
                    ));
                }
            }
        }
    }
    let cert = TowerCertificate {
        d: d.iter().map(|x| action.format(x)).collect(),
        f: f.iter().map(|x| action.format(x)).collect(),
        f0: action.format(&f0),
        g: g.iter().map(|x| action.format(x)).collect(),
        radius,
        checked: ball.len(),
        sizes,
        ball_hits,
        parametrised: owner.len(),
        disjoint,
        covering,
        partition,
        witnesses,
    };
    if cert.passed() {
        Ok(cert)
    } else {
        Err(LabError::VerificationFailure(cert.witnesses.first().cloned().unwrap_or_default()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn i(g: &GroupAction, s: &str) -> Isometry {
        g.parse(s).unwrap()
    }

    #[test]
    fn generators_of_f2() {
        let g = GroupAction::f2();
        let d: Vec<Isometry> = ["a", "b", "A", "B"].iter().map(|s| i(&g, s)).collect();
        let f = [i(&g, "a"), i(&g, "b"), i(&g, "aB")];
        let c = paradoxical_towers(&g, &d, &f, 6).unwrap();
        assert!(c.disjoint && c.covering && c.partition);
        assert_eq!(c.checked, 1457);
        assert_eq!(c.parametrised, 4 * 1457);
        assert_eq!(c.f0, "a^4bA^2");
    }

    #[test]
    fn identity_is_refused() {
        let g = GroupAction::f2();
        let f = [i(&g, "a"), i(&g, "b"), i(&g, "aB")];
        assert!(paradoxical_towers(&g, &[g.identity()], &f, 2).is_err());
    }
}
