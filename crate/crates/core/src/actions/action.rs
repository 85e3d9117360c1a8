//! Marked groups acting on their Cayley graph, on a coned-off Cayley graph, or on a custom graph.

use std::cmp::Ordering;
use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::custom::CustomAction;
use super::word::{Alphabet, Factor, Word};
use crate::error::{LabError, Result};
use crate::graph::VertexId;
use crate::half::HalfInt;

pub const DEFAULT_WORKING_RADIUS: u32 = 40;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Geometry {
    /// Word metric on the Cayley graph of the standard generators.
    #[default]
    Cayley,
    /// Cayley graph with one cone vertex per coset of each free factor.
    ConedOff,
}

/// A group element in normal form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Isometry(pub(crate) Word);

impl Isometry {
    pub fn word(&self) -> &Word {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_identity()
    }
}

/// A vertex of the space acted on.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Point {
    Elem(Word),
    /// Cone over the coset `rep·<x_factor>`; `rep` never ends in that factor.
    Cone { rep: Word, factor: u8 },
    Vertex(u32),
}

#[derive(Clone, Debug)]
pub struct GroupAction {
    alphabet: Alphabet,
    geometry: Geometry,
    custom: Option<Arc<CustomAction>>,
    radius: u32,
    family: &'static str,
}

impl GroupAction {
    pub fn free(rank: usize) -> Result<Self> {
        Ok(GroupAction {
            alphabet: Alphabet::free(rank)?,
            geometry: Geometry::Cayley,
            custom: None,
            radius: DEFAULT_WORKING_RADIUS,
            family: "free",
        })
    }

    pub fn free_product(factors: Vec<Factor>) -> Result<Self> {
        Ok(GroupAction {
            alphabet: Alphabet::new(factors)?,
            geometry: Geometry::Cayley,
            custom: None,
            radius: DEFAULT_WORKING_RADIUS,
            family: "free_product",
        })
    }

    pub fn custom(action: CustomAction) -> Self {
        GroupAction {
            alphabet: action.alphabet().clone(),
            geometry: Geometry::Cayley,
            radius: action.graph().radius(),
            custom: Some(Arc::new(action)),
            family: "custom",
        }
    }

    /// `a, b` free of rank two.
    pub fn f2() -> Self {
        Self::free(2).expect("rank two is valid")
    }

    /// `Z/3 * Z/4` on `s, t`.
    pub fn z3_z4() -> Self {
        Self::free_product(vec![Factor::finite('s', 3), Factor::finite('t', 4)]).expect("valid")
    }

    /// `Z * Z/3` on `a, s`.
    pub fn z_z3() -> Self {
        Self::free_product(vec![Factor::infinite('a'), Factor::finite('s', 3)]).expect("valid")
    }

    /// `Z/2 * Z` on `s, a`; its Cayley graph is the tree with vertex degrees 3.
    pub fn z2_z() -> Self {
        Self::free_product(vec![Factor::finite('s', 2), Factor::infinite('a')]).expect("valid")
    }

    pub fn with_geometry(mut self, geometry: Geometry) -> Result<Self> {
        if self.custom.is_some() && geometry != Geometry::Cayley {
            return Err(LabError::InvalidArgument("custom actions have a fixed geometry".into()));
        }
        self.geometry = geometry;
        Ok(self)
    }

    pub fn with_radius(mut self, radius: u32) -> Self {
        self.radius = radius;
        self
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn geometry(&self) -> Geometry {
        self.geometry
    }

    pub fn family(&self) -> &'static str {
        self.family
    }

    pub fn working_radius(&self) -> u32 {
        self.radius
    }

    pub fn custom_action(&self) -> Option<&CustomAction> {
        self.custom.as_deref()
    }

    pub fn is_coned(&self) -> bool {
        self.geometry == Geometry::ConedOff
    }

    fn canon(&self, w: Word) -> Isometry {
        match &self.custom {
            Some(c) => Isometry(c.canonical(&w)),
            None => Isometry(w),
        }
    }

    pub fn identity(&self) -> Isometry {
        Isometry(Word::identity())
    }

    pub fn from_word(&self, w: &Word) -> Isometry {
        self.canon(self.alphabet.normalize(w.syllables()))
    }

    pub fn parse(&self, s: &str) -> Result<Isometry> {
        Ok(self.canon(self.alphabet.parse(s)?))
    }

    pub fn format(&self, g: &Isometry) -> String {
        self.alphabet.format(&g.0)
    }

    pub fn mul(&self, g: &Isometry, h: &Isometry) -> Isometry {
        self.canon(self.alphabet.mul(&g.0, &h.0))
    }

    pub fn inverse(&self, g: &Isometry) -> Isometry {
        self.canon(self.alphabet.inverse(&g.0))
    }

    pub fn pow(&self, g: &Isometry, n: i64) -> Isometry {
        self.canon(self.alphabet.pow(&g.0, n))
    }

    pub fn conjugate(&self, g: &Isometry, by: &Isometry) -> Isometry {
        self.mul(&self.mul(by, g), &self.inverse(by))
    }

    pub fn generators(&self) -> Vec<Isometry> {
        self.alphabet.generators().into_iter().map(|w| self.canon(w)).collect()
    }

    pub fn shortlex_cmp(&self, g: &Isometry, h: &Isometry) -> Ordering {
        self.alphabet.shortlex_cmp(&g.0, &h.0)
    }

    /// Least `k` in `1..=max` with `g^k = e`.
    pub fn element_order(&self, g: &Isometry, max: u32) -> Option<u32> {
        let mut acc = g.clone();
        for k in 1..=max {
            if acc.is_identity() {
                return Some(k);
            }
            acc = self.mul(&acc, g);
        }
        None
    }

    /// Word length in the standard generators.
    pub fn word_length(&self, g: &Isometry) -> u32 {
        self.alphabet.cayley_len(&g.0)
    }

    pub fn origin(&self) -> Point {
        match &self.custom {
            Some(c) => Point::Vertex(c.graph().basepoint().0),
            None => Point::Elem(Word::identity()),
        }
    }

    fn cone(&self, rep: Word, factor: u8) -> Point {
        Point::Cone {
            rep: rep.strip_trailing(factor),
            factor,
        }
    }

    pub fn act(&self, g: &Isometry, p: &Point) -> Point {
        match p {
            Point::Elem(x) => Point::Elem(self.alphabet.mul(&g.0, x)),
            Point::Cone { rep, factor } => self.cone(self.alphabet.mul(&g.0, rep), *factor),
            Point::Vertex(v) => Point::Vertex(self.custom.as_ref().map_or(*v, |c| c.act(&g.0, *v))),
        }
    }

    /// `g·o`.
    pub fn orbit(&self, g: &Isometry) -> Point {
        self.act(g, &self.origin())
    }

    fn len(&self, w: &Word) -> u32 {
        match self.geometry {
            Geometry::Cayley => self.alphabet.cayley_len(w),
            Geometry::ConedOff => self.alphabet.coned_len(w),
        }
    }

    /// Exact distance in the ambient space.
    pub fn dist(&self, p: &Point, q: &Point) -> u32 {
        let a = &self.alphabet;
        match (p, q) {
            (Point::Elem(x), Point::Elem(y)) => self.len(&a.mul(&a.inverse(x), y)),
            (Point::Cone { rep, factor }, Point::Elem(y)) | (Point::Elem(y), Point::Cone { rep, factor }) => {
                1 + self.len(&a.mul(&a.inverse(rep), y).strip_leading(*factor))
            }
            (Point::Cone { rep: r1, factor: i }, Point::Cone { rep: r2, factor: j }) => {
                if i == j && r1 == r2 {
                    0
                } else {
                    let w = a.mul(&a.inverse(r1), r2);
                    2 + self.len(&w.strip_leading(*i).strip_trailing(*j))
                }
            }
            (Point::Vertex(u), Point::Vertex(v)) => {
                let c = self.custom.as_ref().expect("vertex points belong to custom actions");
                c.graph().distance(VertexId(*u), VertexId(*v))
            }
            _ => panic!("points from different spaces"),
        }
    }

    /// `d(o, g·o)`.
    pub fn displacement(&self, g: &Isometry) -> u32 {
        self.dist(&self.origin(), &self.orbit(g))
    }

    pub fn gromov(&self, x: &Point, y: &Point, base: &Point) -> HalfInt {
        HalfInt::from_doubled(
            self.dist(base, x) as i64 + self.dist(base, y) as i64 - self.dist(x, y) as i64,
        )
    }

    pub fn in_ball(&self, p: &Point) -> bool {
        self.dist(&self.origin(), p) <= self.radius
    }

    pub fn require_in_ball(&self, p: &Point) -> Result<()> {
        if self.in_ball(p) {
            Ok(())
        } else {
            Err(LabError::OutOfBall(self.point_label(p)))
        }
    }

    pub fn point_label(&self, p: &Point) -> String {
        match p {
            Point::Elem(w) => self.alphabet.format(w),
            Point::Cone { rep, factor } => {
                let letter = self.alphabet.factors()[*factor as usize].letter;
                if rep.is_identity() {
                    format!("<{letter}>")
                } else {
                    format!("{}<{letter}>", self.alphabet.format(rep))
                }
            }
            Point::Vertex(v) => match &self.custom {
                Some(c) => c.graph().label(VertexId(*v)).to_string(),
                None => format!("#{v}"),
            },
        }
    }

    /// Parses a point label as produced by [`point_label`](Self::point_label).
    pub fn parse_point(&self, s: &str) -> Result<Point> {
        let s = s.trim();
        if let Some(c) = &self.custom {
            return Ok(Point::Vertex(c.graph().vertex(s)?.0));
        }
        if let Some(body) = s.strip_suffix('>') {
            let (rep, letter) = body
                .rsplit_once('<')
                .ok_or_else(|| LabError::Parse(format!("bad cone label `{s}`")))?;
            let mut chars = letter.chars();
            let factor = match (chars.next(), chars.next()) {
                (Some(c), None) => self.alphabet.factor_of(c),
                _ => None,
            }
            .ok_or_else(|| LabError::UnknownCoset(s.to_string()))?;
            let rep = if rep.is_empty() { Word::identity() } else { self.alphabet.parse(rep)? };
            return Ok(self.cone(rep, factor));
        }
        Ok(Point::Elem(self.alphabet.parse(s)?))
    }

    /// Neighbours of a point. Cones over infinite factors have infinitely many;
    /// for those only the window `rep·x^k`, `|k| ≤ 2`, is returned.
    pub fn neighbors(&self, p: &Point) -> Vec<Point> {
        let a = &self.alphabet;
        match p {
            Point::Elem(x) => {
                let mut out: Vec<Point> =
                    a.generators().iter().map(|s| Point::Elem(a.mul(x, s))).collect();
                if self.is_coned() {
                    for i in 0..a.factors().len() as u8 {
                        out.push(self.cone(x.clone(), i));
                    }
                }
                out
            }
            Point::Cone { rep, factor } => {
                let m = a.order(*factor) as i64;
                let ks: Vec<i64> = if m == 0 {
                    (-2..=2).collect()
                } else {
                    (0..m).map(|k| a.reduce_exp(*factor, k) as i64).collect()
                };
                ks.into_iter()
                    .map(|k| Point::Elem(a.mul(rep, &a.syllable(*factor, k))))
                    .collect()
            }
            Point::Vertex(v) => {
                let c = self.custom.as_ref().expect("custom");
                c.graph().neighbors(VertexId(*v)).iter().map(|u| Point::Vertex(u.0)).collect()
            }
        }
    }

    /// Neighbours of `p` one step closer to `target`.
    pub fn successors(&self, p: &Point, target: &Point) -> Vec<Point> {
        let d = self.dist(p, target);
        if d == 0 {
            return Vec::new();
        }
        let candidates = match p {
            Point::Cone { rep, factor } if self.alphabet.order(*factor) == 0 => {
                let t = match target {
                    Point::Elem(y) => y,
                    Point::Cone { rep, .. } => rep,
                    Point::Vertex(_) => unreachable!(),
                };
                let w = self.alphabet.mul(&self.alphabet.inverse(rep), t);
                let k = match w.first() {
                    Some(s) if s.factor == *factor => s.exp as i64,
                    _ => 0,
                };
                let mut ks: Vec<i64> = (k - 2..=k + 2).collect();
                if !ks.contains(&0) {
                    ks.push(0);
                }
                ks.into_iter()
                    .map(|k| Point::Elem(self.alphabet.mul(rep, &self.alphabet.syllable(*factor, k))))
                    .collect()
            }
            _ => self.neighbors(p),
        };
        let mut out: Vec<Point> = Vec::new();
        for c in candidates {
            if self.dist(&c, target) + 1 == d && !out.contains(&c) {
                out.push(c);
            }
        }
        out
    }

    /// A geodesic from `x` to `y`, taking the first successor at each step.
    pub fn geodesic(&self, x: &Point, y: &Point) -> Vec<Point> {
        let mut path = vec![x.clone()];
        let mut cur = x.clone();
        while cur != *y {
            cur = self.successors(&cur, y).into_iter().next().expect("successor exists");
            path.push(cur.clone());
        }
        path
    }

    /// Geodesic from `o` to `g·o` following the normal form of `g`; in the coned-off
    /// geometry syllables of length at least three pass through their cone.
    pub fn normal_path(&self, g: &Isometry) -> Vec<Point> {
        if self.custom.is_some() {
            return self.geodesic(&self.origin(), &self.orbit(g));
        }
        let a = &self.alphabet;
        let mut path = vec![Point::Elem(Word::identity())];
        let mut cur = Word::identity();
        for s in g.0.syllables() {
            let k = s.exp.unsigned_abs();
            if self.is_coned() && k >= 3 {
                path.push(self.cone(cur.clone(), s.factor));
                cur = a.mul(&cur, &a.syllable(s.factor, s.exp as i64));
                path.push(Point::Elem(cur.clone()));
            } else {
                let step = a.syllable(s.factor, s.exp.signum() as i64);
                for _ in 0..k {
                    cur = a.mul(&cur, &step);
                    path.push(Point::Elem(cur.clone()));
                }
            }
        }
        path
    }

    /// True iff every geodesic from `x` to `z` passes through `w`. Endpoints are guards.
    pub fn is_guard(&self, w: &Point, x: &Point, z: &Point) -> bool {
        if w == x || w == z {
            return true;
        }
        if self.dist(x, w) + self.dist(w, z) != self.dist(x, z) {
            return false;
        }
        let mut seen: HashSet<Point> = HashSet::from([x.clone()]);
        let mut queue = VecDeque::from([x.clone()]);
        while let Some(p) = queue.pop_front() {
            for q in self.successors(&p, z) {
                if q == *z {
                    return false;
                }
                if q != *w && seen.insert(q.clone()) {
                    queue.push_back(q);
                }
            }
        }
        true
    }

    /// Elements of word length at most `r`, in shortlex order.
    pub fn elements_within(&self, r: u32, cap: usize) -> Result<Vec<Isometry>> {
        if let Some(c) = &self.custom {
            return Ok(c
                .words()
                .iter()
                .filter(|w| c.alphabet().cayley_len(w) <= r)
                .map(|w| Isometry(w.clone()))
                .collect());
        }
        let gens = self.alphabet.generators();
        let mut out = vec![Isometry(Word::identity())];
        let mut frontier = vec![Word::identity()];
        for _ in 0..r {
            let mut next = Vec::new();
            let mut seen = HashSet::new();
            for x in &frontier {
                for s in &gens {
                    let y = self.alphabet.mul(x, s);
                    if self.alphabet.cayley_len(&y) > self.alphabet.cayley_len(x) && seen.insert(y.clone()) {
                        next.push(y);
                    }
                }
            }
            if out.len() + next.len() > cap {
                return Err(LabError::ResourceLimit {
                    count: out.len() + next.len(),
                    cap,
                });
            }
            out.extend(next.iter().cloned().map(Isometry));
            frontier = next;
        }
        Ok(out)
    }
}

impl fmt::Display for Isometry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0.syllables())
    }
}
