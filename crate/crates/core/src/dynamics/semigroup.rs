//! Free semigroups `⟨A f⟩`, free products `⟨a⟩ ∗ ⟨f⟩` and the bounded axis property.

use std::collections::HashMap;
use std::ops::RangeInclusive;

use rayon::prelude::*;
use serde::Serialize;

use super::sample::product;
use crate::actions::axis::{is_loxodromic, projection_diameter};
use crate::actions::probes::{axis_window, DEFAULT_AXIS_PERIODS};
use crate::actions::{GroupAction, Isometry, Point, Ray};
use crate::error::{LabError, Result};

/// `a·h^±` and `h^±` count as colliding when their product at [`COLLIDE_SCALE`] reaches this.
pub const COLLIDE_RESOLUTION: u32 = 8;
pub const COLLIDE_SCALE: u32 = 16;

#[derive(Clone, Debug, Serialize)]
pub struct SemigroupCertificate {
    pub generators: Vec<String>,
    pub f: String,
    /// `max diam π_{Ax f}(a^{±1}·Ax f)` over `a ∈ A`.
    pub tau: u32,
    pub displacement: u32,
    pub searched: usize,
    pub l_check: u32,
    /// Products of `1..=l_check` factors of `A f`, all with distinct normal forms.
    pub products: u64,
    /// Pairs the normal-form comparison rules out, `products·(products−1)/2`.
    pub comparisons: u64,
}

pub(crate) fn axis_tau(action: &GroupAction, f: &Isometry, others: &[Isometry]) -> Result<u32> {
    let ax = axis_window(action, f, DEFAULT_AXIS_PERIODS)?;
    let mut tau = 0;
    for a in others {
        let moved: Vec<Point> = ax.path.iter().map(|p| action.act(a, p)).collect();
        tau = tau.max(projection_diameter(action, &moved, &ax.path));
    }
    Ok(tau)
}

/// Two factor sequences with the same product.
type Collision = (Vec<usize>, Vec<usize>);

/// First pair of distinct factor sequences of length `≤ l` with equal products.
pub(crate) fn first_collision(action: &GroupAction, gens: &[Isometry], l: u32) -> (u64, Option<Collision>) {
    let mut seen: HashMap<Isometry, Vec<usize>> = HashMap::new();
    let mut level: Vec<(Isometry, Vec<usize>)> = vec![(action.identity(), Vec::new())];
    let mut count = 0;
    for _ in 0..l {
        let mut next = Vec::with_capacity(level.len() * gens.len());
        for (x, seq) in &level {
            for (i, g) in gens.iter().enumerate() {
                let y = action.mul(x, g);
                let mut s = seq.clone();
                s.push(i);
                count += 1;
                if let Some(prev) = seen.get(&y) {
                    return (count, Some((prev.clone(), s)));
                }
                seen.insert(y.clone(), s.clone());
                next.push((y, s));
            }
        }
        level = next;
    }
    (count, None)
}

/// Searches, in shortlex order up to length `depth`, for a loxodromic `f` whose axis is
/// moved off itself by every `a^{±1}` with projections of diameter at most `τ`, and with
/// `d(o, fo) > 2τ + 2`. The products of at most `l_check` factors of `A f` are then
/// compared exhaustively.
pub fn free_semigroup_certificate(
    action: &GroupAction,
    gens: &[Isometry],
    depth: u32,
    l_check: u32,
) -> Result<(Isometry, SemigroupCertificate)> {
    if gens.is_empty() || gens.iter().any(Isometry::is_identity) {
        return Err(LabError::InvalidArgument("the set must be nonempty and avoid the identity".into()));
    }
    let mut both: Vec<Isometry> = gens.iter().flat_map(|a| [a.clone(), action.inverse(a)]).collect();
    both.dedup();
    let candidates = action.elements_within(depth, usize::MAX)?;
    // Product collisions are cheap to rule out, so they are tested before the projections.
    let found = candidates.par_iter().enumerate().find_map_first(|(i, f)| {
        if !is_loxodromic(action, f) {
            return None;
        }
        let af: Vec<Isometry> = gens.iter().map(|a| action.mul(a, f)).collect();
        let (products, clash) = first_collision(action, &af, l_check);
        if clash.is_some() {
            return None;
        }
        let tau = match axis_tau(action, f, &both) {
            Ok(t) => t,
            Err(LabError::OutOfBall(_)) => return None,
            Err(e) => return Some(Err(e)),
        };
        let disp = action.displacement(f);
        (disp > 2 * tau + 2).then_some(Ok((i, f, tau, disp, products)))
    });
    if let Some(r) = found {
        let (i, f, tau, disp, products) = r?;
        return Ok((
            f.clone(),
            SemigroupCertificate {
                generators: gens.iter().map(|a| action.format(a)).collect(),
                f: action.format(f),
                tau,
                displacement: disp,
                searched: i + 1,
                l_check,
                products,
                comparisons: products * products.saturating_sub(1) / 2,
            },
        ));
    }
    Err(LabError::SearchExhausted(format!(
        "no loxodromic of length at most {depth} makes the semigroup free"
    )))
}

#[derive(Clone, Debug, Serialize)]
pub struct PnaiCertificate {
    pub a: String,
    pub f: String,
    pub l_check: u32,
    /// Alternating words `a^{k₁} f^{j₁} ⋯` with nontrivial syllables checked.
    pub words: u64,
    /// Measured bounded-axis constant when `a` is elliptic.
    pub tau: Option<u32>,
}

/// Exponents of nontrivial powers of an element of order `m` (0 for infinite), up to `|k| ≤ l`.
fn exponents(m: Option<u32>, l: u32) -> Vec<i64> {
    let l = l as i64;
    let mut out = Vec::new();
    for k in 1..=l {
        for e in [k, -k] {
            let ok = match m {
                None => true,
                Some(m) => {
                    let m = m as i64;
                    let r = e.rem_euclid(m);
                    // Canonical representative in (−m/2, m/2].
                    r != 0 && (if 2 * r > m { r - m } else { r }) == e
                }
            };
            if ok {
                out.push(e);
            }
        }
    }
    out
}

/// Every alternating word in `⟨a⟩ ∗ ⟨f⟩` of syllable length at most `l_check` is checked
/// against the identity; `a^k` counts `|k|` letters.
pub fn pnai_certificate(action: &GroupAction, a: &Isometry, f: &Isometry, l_check: u32) -> Result<PnaiCertificate> {
    if a.is_identity() || f.is_identity() {
        return Err(LabError::InvalidArgument("both elements must be nontrivial".into()));
    }
    let tau = if is_loxodromic(action, a) {
        None
    } else {
        Some(bounded_axis_probe(action, a, f, -(l_check as i64)..=l_check as i64)?.tau)
    };
    let ea = exponents(action.element_order(a, 64), l_check);
    let ef = exponents(action.element_order(f, 64), l_check);
    let pa: Vec<(i64, Isometry)> = ea.iter().map(|&k| (k, action.pow(a, k))).collect();
    let pf: Vec<(i64, Isometry)> = ef.iter().map(|&k| (k, action.pow(f, k))).collect();
    // Breadth-first by length so the first relation found is a shortest one.
    let mut levels: Vec<Vec<(Isometry, u8, String)>> = vec![vec![(action.identity(), 2, String::new())]];
    let mut words = 0;
    for len in 1..=l_check as usize {
        let mut here = Vec::new();
        let mut relations = Vec::new();
        for (which, pows, name) in [(0u8, &pa, "a"), (1u8, &pf, "f")] {
            for (k, p) in pows.iter() {
                let kl = k.unsigned_abs() as usize;
                if kl > len {
                    continue;
                }
                for (x, last, w) in &levels[len - kl] {
                    if *last == which {
                        continue;
                    }
                    let y = action.mul(x, p);
                    let syl = if *k == 1 { name.to_string() } else { format!("{name}^{k}") };
                    let word = if w.is_empty() { syl } else { format!("{w}·{syl}") };
                    words += 1;
                    if y.is_identity() {
                        relations.push(word);
                    } else {
                        here.push((y, which, word));
                    }
                }
            }
        }
        if let Some(w) = relations.into_iter().min() {
            return Err(LabError::RelationFound(w));
        }
        levels.push(here);
    }
    Ok(PnaiCertificate {
        a: action.format(a),
        f: action.format(f),
        l_check,
        words,
        tau,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct BoundedAxisReport {
    pub a: String,
    pub h: String,
    /// `(n, diam π_{Ax h}(aⁿ Ax h))` for the nontrivial powers in range.
    pub values: Vec<(i64, u32)>,
    pub tau: u32,
}

pub fn bounded_axis_probe(
    action: &GroupAction,
    a: &Isometry,
    h: &Isometry,
    n_range: RangeInclusive<i64>,
) -> Result<BoundedAxisReport> {
    let ends = [Ray::attractor(action, h), Ray::repeller(action, h)];
    let t = crate::half::HalfInt::from_int(COLLIDE_RESOLUTION as i64);
    for e in &ends {
        let moved = e.translate(action, a);
        for f in &ends {
            if product(action, &moved, f, COLLIDE_SCALE)? >= t {
                return Err(LabError::FixedPointsCollide(format!(
                    "{} moves {} close to {}",
                    action.format(a),
                    e.describe(action),
                    f.describe(action)
                )));
            }
        }
    }
    let ax = axis_window(action, h, DEFAULT_AXIS_PERIODS)?;
    let mut values = Vec::new();
    for n in n_range {
        let an = action.pow(a, n);
        if n == 0 || an.is_identity() {
            continue;
        }
        let moved: Vec<Point> = ax.path.iter().map(|p| action.act(&an, p)).collect();
        values.push((n, projection_diameter(action, &moved, &ax.path)));
    }
    Ok(BoundedAxisReport {
        a: action.format(a),
        h: action.format(h),
        tau: values.iter().map(|v| v.1).max().unwrap_or(0),
        values,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::actions::Geometry;

    fn i(g: &GroupAction, s: &str) -> Isometry {
        g.parse(s).unwrap()
    }

    #[test]
    fn a_and_its_inverse() {
        let g = GroupAction::f2();
        let (f, c) = free_semigroup_certificate(&g, &[i(&g, "a"), i(&g, "A")], 4, 10).unwrap();
        // A conjugate of b comes before b^3 in shortlex order.
        assert_eq!(g.format(&f), "abA");
        assert_eq!(c.tau, 0);
        let b3 = [i(&g, "ab^3"), i(&g, "Ab^3")];
        assert_eq!(first_collision(&g, &b3, 10), (2046, None));
        assert_eq!(c.products, 2046);
    }

    #[test]
    fn single_and_pair() {
        let g = GroupAction::f2();
        let (_, c) = free_semigroup_certificate(&g, &[i(&g, "a")], 4, 10).unwrap();
        assert_eq!(c.products, 10);
        let (_, c) = free_semigroup_certificate(&g, &[i(&g, "a"), i(&g, "b")], 5, 10).unwrap();
        assert_eq!(c.products, 2046);
        assert!(free_semigroup_certificate(&g, &[i(&g, "e")], 4, 4).is_err());
    }

    #[test]
    fn collisions_are_caught() {
        let g = GroupAction::f2();
        let gens = [i(&g, "ab"), i(&g, "ab")];
        let (_, clash) = first_collision(&g, &gens, 3);
        assert_eq!(clash, Some((vec![0], vec![1])));
    }

    #[test]
    fn pnai_basis_and_relation() {
        let g = GroupAction::f2();
        let c = pnai_certificate(&g, &i(&g, "a"), &i(&g, "b"), 8).unwrap();
        assert!(c.tau.is_none());
        // Reduced words of length 1..=8 in a free group of rank 2.
        assert_eq!(c.words, (1..=8).map(|n| 4 * 3u64.pow(n - 1)).sum::<u64>());
        match pnai_certificate(&g, &i(&g, "a"), &i(&g, "a"), 4) {
            Err(LabError::RelationFound(w)) => assert_eq!(w, "a^-1·f"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn elliptic_in_the_coned_graph() {
        let g = GroupAction::z_z3().with_geometry(Geometry::ConedOff).unwrap();
        let c = pnai_certificate(&g, &i(&g, "s"), &i(&g, "as"), 8).unwrap();
        let tau = c.tau.unwrap();
        assert_eq!(tau, bounded_axis_probe(&g, &i(&g, "s"), &i(&g, "as"), -2..=2).unwrap().tau);
        assert!(c.words > 0);
    }

    #[test]
    fn swap_on_the_bi_tree() {
        let g = GroupAction::z2_z();
        let r = bounded_axis_probe(&g, &i(&g, "s"), &i(&g, "a"), -1..=1).unwrap();
        assert_eq!(r.tau, 0);
        assert_eq!(r.values.len(), 2);
        assert_eq!(r.values[0].1, r.values[1].1);
        assert!(matches!(
            bounded_axis_probe(&g, &i(&g, "a^2"), &i(&g, "a"), -1..=1),
            Err(LabError::FixedPointsCollide(_))
        ));
    }
}
