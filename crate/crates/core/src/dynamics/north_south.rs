//! North-south dynamics, extreme proximality and density of fixed pairs.

use serde::Serialize;

use super::sample::{product, BoundarySample};
use crate::actions::axis::{is_loxodromic, require_loxodromic};
use crate::actions::probes::compose_loxodromic;
use crate::actions::{GroupAction, Isometry, Ray};
use crate::error::{LabError, Result};
use crate::half::HalfInt;

#[derive(Clone, Debug, Serialize)]
pub struct NorthSouthReport {
    pub element: String,
    pub resolution: u32,
    pub n_max: u32,
    /// Least `n₀` with `⟨gⁿξ, g⁺⟩_o ≥ T` for all sampled `ξ` and all `n₀ ≤ n ≤ n_max`.
    pub n0: Option<u32>,
    /// Number of sampled rays inside the attracting neighbourhood after `n` steps.
    pub inside: Vec<usize>,
    /// Rays still outside at `n_max`.
    pub escaping: Vec<String>,
}

/// Powers `gⁿ`, `0 ≤ n ≤ n_max`, applied to every sampled ray.
pub fn north_south_probe(
    action: &GroupAction,
    g: &Isometry,
    sample: &BoundarySample,
    n_max: u32,
) -> Result<NorthSouthReport> {
    require_loxodromic(action, g)?;
    let top = action.orbit(&action.pow(g, n_max as i64));
    if action.dist(&action.origin(), &top) + sample.scale > action.working_radius() {
        return Err(LabError::OutOfBall(format!("({})^{n_max}", action.format(g))));
    }
    let t = HalfInt::from_int(sample.resolution as i64);
    let plus = Ray::attractor(action, g);
    let minus = Ray::repeller(action, g);
    for xi in &sample.rays {
        if product(action, xi, &minus, sample.scale)? >= t {
            return Err(LabError::Precondition(format!(
                "{} lies in the repelling neighbourhood",
                xi.describe(action)
            )));
        }
    }
    let mut inside = Vec::new();
    let mut ok_at = Vec::new();
    let mut escaping = Vec::new();
    for n in 0..=n_max {
        let gn = action.pow(g, n as i64);
        let mut count = 0;
        for xi in &sample.rays {
            if product(action, &xi.translate(action, &gn), &plus, sample.scale)? >= t {
                count += 1;
            } else if n == n_max {
                escaping.push(xi.describe(action));
            }
        }
        inside.push(count);
        ok_at.push(count == sample.rays.len());
    }
    let n0 = (0..=n_max).find(|&n| ok_at[n as usize..].iter().all(|&b| b));
    Ok(NorthSouthReport {
        element: action.format(g),
        resolution: sample.resolution,
        n_max,
        n0,
        inside,
        escaping,
    })
}

fn all_inside(action: &GroupAction, g: &Isometry, rays: &[Ray], target: &Ray, t: HalfInt, scale: u32) -> Result<bool> {
    for xi in rays {
        if product(action, &xi.translate(action, g), target, scale)? < t {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, Serialize)]
pub struct ProximalityReport {
    pub element: String,
    pub searched: usize,
    pub products: Vec<HalfInt>,
}

/// The first element, by word length then shortlex, moving every ray of `f` into the
/// neighbourhood `{ξ : ⟨ξ, target⟩_o ≥ T}`.
pub fn extreme_proximality_probe(
    action: &GroupAction,
    f: &[Ray],
    target: &Ray,
    resolution: u32,
    depth: u32,
    scale: u32,
) -> Result<(Isometry, ProximalityReport)> {
    let t = HalfInt::from_int(resolution as i64);
    let candidates = action.elements_within(depth, usize::MAX)?;
    for (i, g) in candidates.iter().enumerate() {
        if all_inside(action, g, f, target, t, scale)? {
            let products = f
                .iter()
                .map(|xi| product(action, &xi.translate(action, g), target, scale))
                .collect::<Result<Vec<_>>>()?;
            return Ok((
                g.clone(),
                ProximalityReport {
                    element: action.format(g),
                    searched: i + 1,
                    products,
                },
            ));
        }
    }
    Err(LabError::SearchExhausted(format!(
        "no element of length at most {depth} moves the set into the neighbourhood of {}",
        target.describe(action)
    )))
}

#[derive(Clone, Debug, Serialize)]
pub struct FixedPairReport {
    pub element: String,
    /// `compose` when found as `hⁿkⁿ`, `search` when found by enumeration.
    pub method: String,
    pub n: Option<u32>,
    pub attractor_product: HalfInt,
    pub repeller_product: HalfInt,
}

/// `p·w·p⁻¹` when `ray` is `p·wⁿ`.
fn ray_as_attractor(action: &GroupAction, ray: &Ray) -> Option<Isometry> {
    let e1 = ray.element(action, 1);
    let e2 = ray.element(action, 2);
    let p = ray.element(action, 0);
    let pi = action.inverse(&p);
    let w = action.mul(&pi, &e1);
    let w2 = action.mul(&pi, &e2);
    (w2 == action.pow(&w, 2) && !w.is_identity()).then(|| action.conjugate(&w, &p))
}

/// A loxodromic `g` with `⟨g⁺, targets.0⟩_o ≥ T` and `⟨g⁻, targets.1⟩_o ≥ T`.
pub fn fixed_pair_density_probe(
    action: &GroupAction,
    targets: (&Ray, &Ray),
    resolution: u32,
    depth: u32,
    scale: u32,
) -> Result<(Isometry, FixedPairReport)> {
    let t = HalfInt::from_int(resolution as i64);
    if product(action, targets.0, targets.1, scale)? >= t {
        return Err(LabError::Precondition("targets are not separated at the resolution".into()));
    }
    let check = |g: &Isometry| -> Result<Option<(HalfInt, HalfInt)>> {
        if !is_loxodromic(action, g) {
            return Ok(None);
        }
        let p = product(action, &Ray::attractor(action, g), targets.0, scale)?;
        let q = product(action, &Ray::repeller(action, g), targets.1, scale)?;
        Ok((p >= t && q >= t).then_some((p, q)))
    };
    let report = |g: &Isometry, method: &str, n: Option<u32>, (p, q): (HalfInt, HalfInt)| FixedPairReport {
        element: action.format(g),
        method: method.into(),
        n,
        attractor_product: p,
        repeller_product: q,
    };
    let h = ray_as_attractor(action, targets.0);
    let k = ray_as_attractor(action, targets.1).map(|x| action.inverse(&x));
    if let (Some(h), Some(k)) = (h, k) {
        if h == k {
            if let Some(pq) = check(&h)? {
                return Ok((h.clone(), report(&h, "compose", Some(0), pq)));
            }
        }
        for n in 1..=depth {
            let (g, _) = match compose_loxodromic(action, &h, &k, n, scale) {
                Ok(x) => x,
                Err(LabError::OutOfBall(_)) => break,
                Err(LabError::NotLoxodromic(_)) => continue,
                Err(e) => return Err(e),
            };
            if let Some(pq) = check(&g)? {
                return Ok((g.clone(), report(&g, "compose", Some(n), pq)));
            }
        }
    }
    for g in action.elements_within(depth, usize::MAX)? {
        if let Some(pq) = check(&g)? {
            return Ok((g.clone(), report(&g, "search", None, pq)));
        }
    }
    Err(LabError::SearchExhausted(format!(
        "no loxodromic of length at most {depth} has fixed points near {} and {}",
        targets.0.describe(action),
        targets.1.describe(action)
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ray(g: &GroupAction, s: &str) -> Ray {
        Ray::parse(g, s).unwrap()
    }

    #[test]
    fn powers_of_a() {
        let g = GroupAction::f2();
        let rays = vec![ray(&g, "b^n"), ray(&g, "(ba)^n"), ray(&g, "B a^n")];
        let s = BoundarySample::new(rays, 3, 24).unwrap();
        let r = north_south_probe(&g, &g.parse("a").unwrap(), &s, 8).unwrap();
        assert!(r.n0.unwrap() <= 4);
        assert!(r.escaping.is_empty());
    }

    #[test]
    fn attractor_is_already_inside() {
        let g = GroupAction::f2();
        let s = BoundarySample::new(vec![ray(&g, "a^n")], 3, 24).unwrap();
        let r = north_south_probe(&g, &g.parse("a").unwrap(), &s, 4).unwrap();
        assert_eq!(r.n0, Some(0));
        let s = BoundarySample::new(vec![ray(&g, "A^n")], 3, 24).unwrap();
        assert!(matches!(
            north_south_probe(&g, &g.parse("a").unwrap(), &s, 4),
            Err(LabError::Precondition(_))
        ));
    }

    #[test]
    fn proximality() {
        let g = GroupAction::f2();
        let f = vec![ray(&g, "b^n"), ray(&g, "(bab)^n")];
        let (x, r) = extreme_proximality_probe(&g, &f, &ray(&g, "a^n"), 3, 6, 24).unwrap();
        assert_eq!(r.element, "a^3");
        assert!(r.products.iter().all(|p| *p >= HalfInt::from_int(3)));
        assert_eq!(g.format(&x), "a^3");
        let (x, _) = extreme_proximality_probe(&g, &[ray(&g, "a^n")], &ray(&g, "a^n"), 3, 6, 24).unwrap();
        assert!(x.is_identity());
        // Attracting end of a conjugate of a.
        let (x, _) = extreme_proximality_probe(&g, &f, &ray(&g, "b a^n"), 3, 6, 24).unwrap();
        assert_eq!(g.format(&x), "ba^2");
    }

    #[test]
    fn fixed_pairs() {
        let g = GroupAction::f2();
        let (x, r) = fixed_pair_density_probe(&g, (&ray(&g, "a^n"), &ray(&g, "b^n")), 3, 6, 24).unwrap();
        assert_eq!(g.format(&x), "a^3B^3");
        assert!(r.n.unwrap() <= 4);
        let (x, _) = fixed_pair_density_probe(&g, (&ray(&g, "(ab)^n"), &ray(&g, "(ab)^-n")), 3, 6, 24).unwrap();
        assert_eq!(g.format(&x), "ab");
        let (x, r) = fixed_pair_density_probe(&g, (&ray(&g, "a b^n"), &ray(&g, "b a^n")), 3, 6, 24).unwrap();
        // Built from the conjugates abA and baB.
        assert_eq!(r.method, "compose");
        assert_eq!(g.format(&x), "ab^2AbA^2B");
        assert!(r.attractor_product >= HalfInt::from_int(3));
    }
}
