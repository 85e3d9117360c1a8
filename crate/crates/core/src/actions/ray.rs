//! Boundary points as quasi-geodesic rays `prefix · template(n)` from the origin.

use super::action::{GroupAction, Isometry, Point};
use super::word::WordTemplate;
use crate::error::{LabError, Result};
use crate::half::HalfInt;

#[derive(Clone, Debug)]
pub struct Ray {
    prefix: Isometry,
    template: WordTemplate,
}

impl Ray {
    /// A ray from a template with parameter `n`, such as `"(ab)^n"` or `"b a^n"`.
    pub fn parse(action: &GroupAction, template: &str) -> Result<Ray> {
        let template = WordTemplate::parse(action.alphabet(), template)?;
        if !template.has_param() {
            return Err(LabError::Parse(format!("`{}` has no parameter n", template.source())));
        }
        Ok(Ray {
            prefix: action.identity(),
            template,
        })
    }

    /// `g^{+}`, the attracting end of `g`, as the ray `g^n`.
    pub fn attractor(action: &GroupAction, g: &Isometry) -> Ray {
        Self::parse(action, &format!("({})^n", action.format(g))).expect("formatted words parse")
    }

    /// `g^{-}`, the ray `g^{-n}`.
    pub fn repeller(action: &GroupAction, g: &Isometry) -> Ray {
        Self::parse(action, &format!("({})^-n", action.format(g))).expect("formatted words parse")
    }

    /// `g·ξ`.
    pub fn translate(&self, action: &GroupAction, g: &Isometry) -> Ray {
        Ray {
            prefix: action.mul(g, &self.prefix),
            template: self.template.clone(),
        }
    }

    pub fn describe(&self, action: &GroupAction) -> String {
        if self.prefix.is_identity() {
            self.template.source().to_string()
        } else {
            format!("{}·{}", action.format(&self.prefix), self.template.source())
        }
    }

    pub fn element(&self, action: &GroupAction, n: u32) -> Isometry {
        let w = self.template.eval(action.alphabet(), n as i64);
        action.mul(&self.prefix, &action.from_word(&w))
    }

    pub fn point(&self, action: &GroupAction, n: u32) -> Point {
        action.orbit(&self.element(action, n))
    }

    /// The first orbit point at distance at least `len` from `o`.
    pub fn at_length(&self, action: &GroupAction, len: u32) -> Result<Point> {
        let cap = 4 * len + 16;
        for n in 0..=cap {
            let p = self.point(action, n);
            if action.dist(&action.origin(), &p) >= len {
                return Ok(p);
            }
        }
        Err(LabError::NotLoxodromic(self.describe(action)))
    }
}

/// `⟨ξ, η⟩_o` approximated by the Gromov product of the points at length `scale`.
pub fn boundary_product(action: &GroupAction, xi: &Ray, eta: &Ray, scale: u32) -> Result<HalfInt> {
    let x = xi.at_length(action, scale)?;
    let y = eta.at_length(action, scale)?;
    Ok(action.gromov(&x, &y, &action.origin()))
}

/// `⟨ξ, y⟩_o` for a point `y`.
pub fn ray_point_product(action: &GroupAction, xi: &Ray, y: &Point, scale: u32) -> Result<HalfInt> {
    let x = xi.at_length(action, scale)?;
    Ok(action.gromov(&x, y, &action.origin()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn products_of_rays_in_f2() {
        let g = GroupAction::f2();
        let a = Ray::parse(&g, "a^n").unwrap();
        let ab = Ray::parse(&g, "(ab)^n").unwrap();
        let b = Ray::parse(&g, "b^n").unwrap();
        assert_eq!(boundary_product(&g, &a, &ab, 10).unwrap(), HalfInt::from_int(1));
        assert_eq!(boundary_product(&g, &a, &b, 10).unwrap(), HalfInt::ZERO);
        assert_eq!(boundary_product(&g, &a, &a, 10).unwrap(), HalfInt::from_int(10));
        let t = a.translate(&g, &g.parse("b").unwrap());
        assert_eq!(t.describe(&g), "b·a^n");
        assert_eq!(boundary_product(&g, &t, &b, 10).unwrap(), HalfInt::from_int(1));
    }

    #[test]
    fn elliptic_template_never_escapes() {
        let g = GroupAction::z3_z4();
        let r = Ray::parse(&g, "s^n").unwrap();
        assert!(r.at_length(&g, 5).is_err());
    }
}
