//! Finite samples of the boundary and their basic neighbourhoods.

use rand::Rng;
use serde::Serialize;

use crate::actions::{GroupAction, Isometry, Ray};
use crate::error::{LabError, Result};
use crate::half::HalfInt;

/// Products of boundary points are read off the ray points at this length.
pub const DEFAULT_SCALE: u32 = 24;

/// Rays from `o` plus the resolution `T`: `ξ` lies in the neighbourhood of `η`
/// when `⟨ξ, η⟩_o ≥ T`.
#[derive(Clone, Debug)]
pub struct BoundarySample {
    pub rays: Vec<Ray>,
    pub resolution: u32,
    pub scale: u32,
}

#[derive(Clone, Debug, Serialize)]
pub struct SampleSummary {
    pub rays: Vec<String>,
    pub resolution: u32,
    pub scale: u32,
    /// Every pair has product below the resolution.
    pub separated: bool,
    /// Every pair has product below the scale, so no two rays coincide as read.
    pub distinct: bool,
}

/// Tails tried, in order, to continue a prefix into a reduced ray.
fn tails(action: &GroupAction) -> Vec<Isometry> {
    let gens = action.generators();
    let mut out: Vec<Isometry> = gens
        .iter()
        .filter(|g| action.element_order(g, 64).is_none())
        .cloned()
        .collect();
    for x in &gens {
        for y in &gens {
            let p = action.mul(x, y);
            if action.word_length(&p) == 2 && p.word().syllables().len() == 2 && action.element_order(&p, 64).is_none()
            {
                out.push(p);
            }
        }
    }
    out
}

/// `w·u^∞` for the first tail `u` with `w u u` reduced.
pub fn reduced_ray(action: &GroupAction, w: &Isometry) -> Option<Ray> {
    let lw = action.word_length(w);
    tails(action).into_iter().find_map(|u| {
        let lu = action.word_length(&u);
        let wuu = action.mul(&action.mul(w, &u), &u);
        (action.word_length(&wuu) == lw + 2 * lu)
            .then(|| Ray::parse(action, &format!("({})^n", action.format(&u))).map(|r| r.translate(action, w)))
    })
    .and_then(|r| r.ok())
}

impl BoundarySample {
    pub fn new(rays: Vec<Ray>, resolution: u32, scale: u32) -> Result<Self> {
        if resolution > scale {
            return Err(LabError::InvalidArgument(format!("resolution {resolution} above scale {scale}")));
        }
        Ok(BoundarySample { rays, resolution, scale })
    }

    /// `w·u^∞` for the reduced words `w` of length `len`, in shortlex order, keeping
    /// those outside the neighbourhood of `avoid`, up to `count` rays.
    pub fn enumerate(
        action: &GroupAction,
        len: u32,
        count: usize,
        resolution: u32,
        avoid: Option<&Ray>,
    ) -> Result<Self> {
        let words: Vec<Isometry> = action
            .elements_within(len, usize::MAX)?
            .into_iter()
            .filter(|w| action.word_length(w) == len)
            .collect();
        Self::from_prefixes(action, words, count, resolution, avoid)
    }

    /// Like [`enumerate`](Self::enumerate) but the prefixes are drawn at random.
    pub fn random<R: Rng>(
        action: &GroupAction,
        len: u32,
        count: usize,
        resolution: u32,
        avoid: Option<&Ray>,
        rng: &mut R,
    ) -> Result<Self> {
        let gens = action.generators();
        let mut words = Vec::new();
        let mut attempts = 0;
        while words.len() < 8 * count && attempts < 64 * count {
            attempts += 1;
            let mut w = action.identity();
            while action.word_length(&w) < len {
                let s = &gens[rng.gen_range(0..gens.len())];
                let next = action.mul(&w, s);
                if action.word_length(&next) > action.word_length(&w) {
                    w = next;
                }
            }
            if !words.contains(&w) {
                words.push(w);
            }
        }
        Self::from_prefixes(action, words, count, resolution, avoid)
    }

    fn from_prefixes(
        action: &GroupAction,
        words: Vec<Isometry>,
        count: usize,
        resolution: u32,
        avoid: Option<&Ray>,
    ) -> Result<Self> {
        let scale = DEFAULT_SCALE.max(resolution);
        let mut rays = Vec::new();
        for w in words {
            if rays.len() == count {
                break;
            }
            let Some(r) = reduced_ray(action, &w) else { continue };
            if let Some(bad) = avoid {
                if product(action, &r, bad, scale)? >= HalfInt::from_int(resolution as i64) {
                    continue;
                }
            }
            rays.push(r);
        }
        Self::new(rays, resolution, scale)
    }

    pub fn summary(&self, action: &GroupAction) -> Result<SampleSummary> {
        let t = HalfInt::from_int(self.resolution as i64);
        let s = HalfInt::from_int(self.scale as i64);
        let mut separated = true;
        let mut distinct = true;
        for (i, x) in self.rays.iter().enumerate() {
            for y in &self.rays[i + 1..] {
                let p = product(action, x, y, self.scale)?;
                separated &= p < t;
                distinct &= p < s;
            }
        }
        Ok(SampleSummary {
            rays: self.rays.iter().map(|r| r.describe(action)).collect(),
            resolution: self.resolution,
            scale: self.scale,
            separated,
            distinct,
        })
    }
}

pub(crate) fn product(action: &GroupAction, x: &Ray, y: &Ray, scale: u32) -> Result<HalfInt> {
    crate::actions::ray::boundary_product(action, x, y, scale)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn enumerated_rays_are_distinct() {
        let g = GroupAction::f2();
        let s = BoundarySample::enumerate(&g, 4, 60, 3, None).unwrap();
        assert_eq!(s.rays.len(), 60);
        let sum = s.summary(&g).unwrap();
        assert!(sum.distinct);
        assert!(!sum.separated);
        assert_eq!(sum.rays[0], "a^4·(a)^n");
    }

    #[test]
    fn avoiding_a_neighbourhood() {
        let g = GroupAction::f2();
        let bad = Ray::parse(&g, "(ab)^-n").unwrap();
        let s = BoundarySample::enumerate(&g, 4, 200, 3, Some(&bad)).unwrap();
        assert_eq!(s.rays.len(), 105);
    }

    #[test]
    fn free_product_tails() {
        let g = GroupAction::z3_z4();
        let w = g.parse("st").unwrap();
        let r = reduced_ray(&g, &w).unwrap();
        assert_eq!(r.describe(&g), "st·(st)^n");
        let s = BoundarySample::enumerate(&g, 3, 10, 2, None).unwrap();
        assert!(s.summary(&g).unwrap().distinct);
    }

    #[test]
    fn random_is_seeded() {
        let g = GroupAction::f2();
        let a = BoundarySample::random(&g, 5, 10, 3, None, &mut ChaCha8Rng::seed_from_u64(7)).unwrap();
        let b = BoundarySample::random(&g, 5, 10, 3, None, &mut ChaCha8Rng::seed_from_u64(7)).unwrap();
        let da: Vec<String> = a.rays.iter().map(|r| r.describe(&g)).collect();
        let db: Vec<String> = b.rays.iter().map(|r| r.describe(&g)).collect();
        assert_eq!(da, db);
        assert_eq!(da.len(), 10);
    }
}
