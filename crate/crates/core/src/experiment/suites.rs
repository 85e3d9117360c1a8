//! The built-in experiment suites.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use super::config::Params;
use super::report::{Check, Constant};
use super::svg;
use crate::actions::{build_ball, Factor, Geometry, GroupAction, GroupSpec, Isometry, Point, Ray};
use crate::coned::{build_coned_off, cone_accumulation, unique_minimum_scan, verify_bcp};
use crate::dynamics::{
    bounded_axis_probe, extreme_proximality_probe, fixed_pair_density_probe, free_semigroup_certificate, myrberg_ray,
    north_south_probe, paradoxical_towers, pnai_certificate, strongly_faithful_probe, tamedness_probe,
    BoundarySample, DEFAULT_SCALE,
};
use crate::error::{LabError, Result};
use crate::graph::{BallLimits, SamplingPolicy};
use crate::horo::patch::DEFAULT_MIN_TAIL;
use crate::horo::{equivariance_sides, horofunction_of_point, limit_along_sequence, local_minimum_map, HorofunctionPatch, MinimumReport};
use crate::projection::{
    build_axis_family, build_complex, least_connected_k, least_construct_power, least_forcing_constant,
    minimal_loxodromic_construct, myrberg_injectivity_probe, power_chain, verify_bgit, verify_projection_axioms,
};
use crate::projection::family::DEFAULT_MEMBER_PERIODS;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ParamKind {
    UInt,
    Word,
    UIntList,
    WordList,
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct ParamInfo {
    pub name: &'static str,
    pub kind: ParamKind,
    pub doc: &'static str,
}

const fn p(name: &'static str, kind: ParamKind, doc: &'static str) -> ParamInfo {
    ParamInfo { name, kind, doc }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DefaultInstance {
    F2,
    Z3Z4,
    ZZ3,
    Z2Z,
}

#[derive(Debug, Serialize)]
pub struct SuiteInfo {
    pub name: &'static str,
    pub description: &'static str,
    pub default_instance: DefaultInstance,
    pub default_radius: u32,
    /// Draws random samples, so a seed is mandatory.
    pub sampling: bool,
    pub params: &'static [ParamInfo],
}

impl SuiteInfo {
    pub fn default_instance(&self) -> GroupSpec {
        let fp = |factors: Vec<Factor>| GroupSpec::FreeProduct {
            factors,
            geometry: Geometry::Cayley,
        };
        match self.default_instance {
            DefaultInstance::F2 => GroupSpec::Free {
                rank: 2,
                geometry: Geometry::Cayley,
            },
            DefaultInstance::Z3Z4 => fp(vec![Factor::finite('s', 3), Factor::finite('t', 4)]),
            DefaultInstance::ZZ3 => fp(vec![Factor::infinite('a'), Factor::finite('s', 3)]),
            DefaultInstance::Z2Z => fp(vec![Factor::finite('s', 2), Factor::infinite('a')]),
        }
    }
}

use ParamKind::{UInt, UIntList, Word, WordList};

pub static SUITES: &[SuiteInfo] = &[
    SuiteInfo {
        name: "tree-smoke",
        description: "Ball, four-point and horofunction invariants: axioms of every point and limit patch, Busemann stabilisation, local minima",
        default_instance: DefaultInstance::F2,
        default_radius: 8,
        sampling: true,
        params: &[
            p("limit_patches", UInt, "number of ray limits checked (20)"),
            p("delta_samples", UInt, "sampled quadruples for the four-point estimate (20000)"),
            p("minimum_radius", UInt, "points x with |x| at most this get Π(b_x) = {x} checked (6)"),
            p("ray", Word, "ray whose Busemann stabilisation is measured (a^n)"),
        ],
    },
    SuiteInfo {
        name: "equivariance",
        description: "(g·b_ξ)(y) = b_ξ(g⁻¹y) − b_ξ(g⁻¹o) on seeded random triples",
        default_instance: DefaultInstance::F2,
        default_radius: 8,
        sampling: true,
        params: &[
            p("count", UInt, "number of triples (1000)"),
            p("element_length", UInt, "largest |g| (4)"),
            p("ray_length", UInt, "prefix length of the sampled rays (3)"),
        ],
    },
    SuiteInfo {
        name: "delta",
        description: "Four-point hyperbolicity constant of the ball, exhaustive when small",
        default_instance: DefaultInstance::F2,
        default_radius: 3,
        sampling: true,
        params: &[
            p("exhaustive_cap", UInt, "largest ball scanned exhaustively (60)"),
            p("samples", UInt, "quadruples sampled otherwise (50000)"),
        ],
    },
    SuiteInfo {
        name: "projection-axioms",
        description: "Projection axioms and κ for a family of translated axes",
        default_instance: DefaultInstance::F2,
        default_radius: 0,
        sampling: false,
        params: &[
            p("seeds", WordList, "loxodromics whose axes are translated ([a])"),
            p("translates", WordList, "translating elements ([e, b, b^2, b^3, ab, Ab])"),
            p("expected_kappa", UInt, "pin κ to this value"),
            p("k", UInt, "K for the exported projection complex (1)"),
        ],
    },
    SuiteInfo {
        name: "forcing",
        description: "Projection complex of a chain family: least forcing constant, connectivity and bounded geodesic images",
        default_instance: DefaultInstance::F2,
        default_radius: 0,
        sampling: false,
        params: &[
            p("h", Word, "chain step, U_i = h^i·Ax(f) (ba^4)"),
            p("f", Word, "axis seed (a)"),
            p("count", UInt, "members (7)"),
            p("k", UInt, "K for the complex (2)"),
        ],
    },
    SuiteInfo {
        name: "minimal-loxodromic",
        description: "Least n with g fⁿ built from a chain whose forcing and minimal-class checks pass",
        default_instance: DefaultInstance::F2,
        default_radius: 0,
        sampling: false,
        params: &[
            p("g", Word, "(b)"),
            p("f", Word, "(a)"),
            p("ks", UIntList, "values of K ([0, 1, 2, 3])"),
            p("n_max", UInt, "largest power tried (6)"),
        ],
    },
    SuiteInfo {
        name: "bcp",
        description: "Bounded coset penetration on the coned-off ball: least K*",
        default_instance: DefaultInstance::Z3Z4,
        default_radius: 5,
        sampling: false,
        params: &[
            p("k", UInt, "K tested (2)"),
            p("expected_k", UInt, "pin K* to this value"),
        ],
    },
    SuiteInfo {
        name: "coned-lemmas",
        description: "Unique minima at cone points and accumulation of conjugated rays at cones",
        default_instance: DefaultInstance::ZZ3,
        default_radius: 5,
        sampling: false,
        params: &[
            p("peripheral", Word, "generator of the infinite peripheral factor (a)"),
            p("base", Word, "ray conjugated towards the cone ((sa)^n)"),
            p("conjugators", UIntList, "powers p_n of the peripheral generator ([1, 3, 6, 10])"),
        ],
    },
    SuiteInfo {
        name: "north-south",
        description: "North-south dynamics of a loxodromic on a boundary sample, and n₀ against the resolution",
        default_instance: DefaultInstance::F2,
        default_radius: 0,
        sampling: false,
        params: &[
            p("g", Word, "(ab)"),
            p("length", UInt, "prefix length of sampled rays (4)"),
            p("count", UInt, "rays (50)"),
            p("resolution", UInt, "T (3)"),
            p("n_max", UInt, "(10)"),
            p("resolutions", UIntList, "T values for the n₀ curve ([1, 2, 3, 4, 5])"),
        ],
    },
    SuiteInfo {
        name: "proximality",
        description: "Extreme proximality and density of fixed pairs",
        default_instance: DefaultInstance::F2,
        default_radius: 0,
        sampling: false,
        params: &[
            p("sources", WordList, "rays moved into the target ([b^n, (bab)^n])"),
            p("target", Word, "(a^n)"),
            p("pair", WordList, "targets for the fixed points ([a^n, b^n])"),
            p("resolution", UInt, "(3)"),
            p("depth", UInt, "search depth (6)"),
        ],
    },
    SuiteInfo {
        name: "free-semigroup",
        description: "Free semigroup certificate for A f and free product certificate for a, f",
        default_instance: DefaultInstance::F2,
        default_radius: 0,
        sampling: false,
        params: &[
            p("generators", WordList, "the set A ([a, A])"),
            p("depth", UInt, "search depth for f (4)"),
            p("length", UInt, "products of at most this many factors are compared (10)"),
            p("pnai", WordList, "the pair a, f ([a, b])"),
            p("pnai_length", UInt, "(8)"),
        ],
    },
    SuiteInfo {
        name: "bounded-axis",
        description: "Bounded axis constant τ of an elliptic element against a loxodromic axis",
        default_instance: DefaultInstance::Z2Z,
        default_radius: 0,
        sampling: false,
        params: &[
            p("a", Word, "elliptic element (s)"),
            p("h", Word, "loxodromic (a)"),
            p("range", UInt, "n ranges over [-range, range] (3)"),
            p("expected_tau", UInt, "pin τ to this value"),
        ],
    },
    SuiteInfo {
        name: "towers",
        description: "Paradoxical towers, disjointness and covering on a ball",
        default_instance: DefaultInstance::F2,
        default_radius: 6,
        sampling: false,
        params: &[
            p("d", WordList, "([a, b, A, B])"),
            p("f", WordList, "three weakly independent loxodromics ([a, b, aB])"),
        ],
    },
    SuiteInfo {
        name: "myrberg",
        description: "Myrberg-type ray prefixes: fellow-travel lengths and the singleton check on a ball",
        default_instance: DefaultInstance::F2,
        default_radius: 10,
        sampling: false,
        params: &[
            p("omega", UIntList, "([1, 2, 3])"),
            p("l", WordList, "loxodromics h_i, cycled ([ab])"),
            p("family", WordList, "candidates for f_i ([a, b])"),
            p("fellow_radius", UInt, "(0)"),
        ],
    },
    SuiteInfo {
        name: "faithful",
        description: "Strongly faithful witness ray and tamedness of a normal closure",
        default_instance: DefaultInstance::F2,
        default_radius: 4,
        sampling: false,
        params: &[
            p("elements", WordList, "([a, b, ab])"),
            p("sample_length", UInt, "(3)"),
            p("sample_count", UInt, "(40)"),
            p("b", Word, "(a)"),
            p("c", Word, "(baB)"),
            p("max_length", UInt, "word length of sampled loxodromics (4)"),
            p("count", UInt, "(200)"),
        ],
    },
];

pub fn find_suite(name: &str) -> Option<&'static SuiteInfo> {
    SUITES.iter().find(|s| s.name == name)
}

pub(crate) struct Context<'a> {
    pub action: GroupAction,
    pub radius: u32,
    pub params: Params<'a>,
    pub seed: u64,
    pub limits: BallLimits,
}

#[derive(Default)]
pub(crate) struct Output {
    pub checks: Vec<Check>,
    pub constants: Vec<Constant>,
    /// `(suffix, contents)`.
    pub artifacts: Vec<(String, String)>,
    pub details: Value,
}

impl Output {
    fn check(&mut self, name: &str, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check::new(name, passed, detail));
    }

    fn constant(&mut self, name: &str, operation: &str, value: impl Serialize) {
        self.constants.push(Constant {
            name: name.into(),
            operation: operation.into(),
            value: serde_json::to_value(value).expect("constants serialise"),
        });
    }
}

fn iso(a: &GroupAction, s: &str) -> Result<Isometry> {
    a.parse(s)
}

fn isos(a: &GroupAction, ws: &[String]) -> Result<Vec<Isometry>> {
    ws.iter().map(|w| a.parse(w)).collect()
}

fn rays(a: &GroupAction, ws: &[String]) -> Result<Vec<Ray>> {
    ws.iter().map(|w| Ray::parse(a, w)).collect()
}

pub(crate) fn run_suite(name: &str, ctx: &Context) -> Result<Output> {
    match name {
        "tree-smoke" => tree_smoke(ctx),
        "equivariance" => equivariance(ctx),
        "delta" => delta(ctx),
        "projection-axioms" => projection_axioms(ctx),
        "forcing" => forcing(ctx),
        "minimal-loxodromic" => minimal_loxodromic(ctx),
        "bcp" => bcp(ctx),
        "coned-lemmas" => coned_lemmas(ctx),
        "north-south" => north_south(ctx),
        "proximality" => proximality(ctx),
        "free-semigroup" => free_semigroup(ctx),
        "bounded-axis" => bounded_axis(ctx),
        "towers" => towers(ctx),
        "myrberg" => myrberg(ctx),
        "faithful" => faithful(ctx),
        other => Err(LabError::InvalidArgument(format!("unknown suite `{other}`"))),
    }
}

/// `value(o) = 0` and `|h(u) − h(v)| ≤ 1` across every edge, checked directly.
fn axioms_hold(g: &crate::graph::BallGraph, patch: &HorofunctionPatch) -> bool {
    patch.value(g.basepoint()) == 0 && g.edges().all(|(u, v)| (patch.value(u) - patch.value(v)).abs() <= 1)
}

fn is_tree(a: &GroupAction) -> bool {
    a.custom_action().is_none() && !a.is_coned() && a.alphabet().factors().iter().all(|f| f.order == 0)
}

fn tree_smoke(ctx: &Context) -> Result<Output> {
    let a = &ctx.action;
    let r = ctx.radius;
    let mut out = Output::default();
    let ball = build_ball(a, r, ctx.limits)?;
    let g = ball.graph();
    if a.custom_action().is_none() && !a.is_coned() {
        let n = a.elements_within(r, ctx.limits.max_vertices)?.len();
        out.check("ball-size", n == g.len(), format!("{} vertices, {n} elements within {r}", g.len()));
    }
    out.check("certified", g.certified(), format!("radius {r}"));
    let est = g.estimate_delta(SamplingPolicy::Sampled {
        count: ctx.params.uint("delta_samples", 20_000) as usize,
        seed: ctx.seed,
    });
    out.constant("delta", "four_point_estimate", est.delta);
    if is_tree(a) {
        out.check("tree-delta", est.delta.doubled() == 0, format!("δ = {} over {} quadruples", est.delta, est.quadruples));
    }
    // Every point horofunction.
    let bad = g
        .vertices()
        .find(|&y| horofunction_of_point(&ball, y).map_or(true, |p| !axioms_hold(g, &p)));
    out.checks.push(Check::with_witness(
        "point-patch-axioms",
        bad.is_none(),
        format!("{} point horofunctions", g.len()),
        bad.map(|y| g.label(y).to_string()),
    ));
    // Limits along sampled rays.
    let count = ctx.params.uint("limit_patches", 20) as usize;
    let sample = BoundarySample::enumerate(a, 3, count, 1, None)?;
    let horizon = 2 * r + 12;
    let mut limits = Vec::new();
    let mut failures = Vec::new();
    for ray in &sample.rays {
        let terms: Vec<Point> = (0..horizon).map(|n| ray.point(a, n)).collect();
        match limit_along_sequence(&ball, &terms, &ray.describe(a), DEFAULT_MIN_TAIL) {
            Ok((p, _)) if axioms_hold(g, &p) => limits.push(p),
            Ok(_) => failures.push(ray.describe(a)),
            Err(e) => failures.push(format!("{}: {e}", ray.describe(a))),
        }
    }
    out.checks.push(Check::with_witness(
        "limit-patch-axioms",
        failures.is_empty() && limits.len() == count,
        format!("{} of {count} limit patches", limits.len()),
        failures.first().cloned(),
    ));
    let descent = limits
        .iter()
        .all(|p| matches!(local_minimum_map(&ball, p, 2.min(r.saturating_sub(1))), Ok(MinimumReport::InfiniteDescent { .. })));
    out.check("limit-patches-descend", descent, "every limit patch reports infinite descent");
    // Busemann stabilisation along one ray.
    let ray = Ray::parse(a, &ctx.params.word("ray", "a^n"))?;
    let terms: Vec<Point> = (0..horizon).map(|n| ray.point(a, n)).collect();
    let (bus, _) = limit_along_sequence(&ball, &terms, &ray.describe(a), DEFAULT_MIN_TAIL)?;
    let stab = bus.stabilization().expect("limit patches record stabilisation");
    let late = g.vertices().find(|&x| stab[x.index()] > g.depth(x) + 1);
    out.checks.push(Check::with_witness(
        "busemann-stabilization",
        late.is_none(),
        format!("index at most d(o, x) + 1, max {}", bus.max_stabilization()),
        late.map(|x| format!("{} stabilises at {}", g.label(x), stab[x.index()])),
    ));
    out.constant("max_stabilization", "limit_along_sequence", bus.max_stabilization());
    let mut hist = vec![0u64; bus.max_stabilization() as usize + 1];
    for &s in stab {
        hist[s as usize] += 1;
    }
    out.artifacts.push((
        "stabilization.svg".into(),
        svg::histogram(&format!("stabilisation index of {}", ray.describe(a)), "index", &hist),
    ));
    // Local minima of point horofunctions.
    if r >= 1 {
        let m = (ctx.params.uint("minimum_radius", 6) as u32).min(r - 1);
        let inner: Vec<_> = g.vertices().filter(|&x| g.depth(x) <= m).collect();
        let wrong = inner.iter().copied().find(|&x| {
            let p = horofunction_of_point(&ball, x).expect("checked above");
            !matches!(local_minimum_map(&ball, &p, r - m), Ok(MinimumReport::FiniteMinimum { ref min_set, .. }) if min_set == &[x])
        });
        out.checks.push(Check::with_witness(
            "local-minimum-of-points",
            wrong.is_none(),
            format!("Π(b_x) = {{x}} for {} points with |x| ≤ {m}", inner.len()),
            wrong.map(|x| g.label(x).to_string()),
        ));
    }
    out.details = json!({ "vertices": g.len(), "edges": g.edge_count(), "delta_quadruples": est.quadruples });
    Ok(out)
}

fn equivariance(ctx: &Context) -> Result<Output> {
    let a = &ctx.action;
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed);
    let count = ctx.params.uint("count", 1000) as usize;
    let el = ctx.params.uint("element_length", 4) as u32;
    let gs = a.elements_within(el, ctx.limits.max_vertices)?;
    let ys = a.elements_within(ctx.radius, ctx.limits.max_vertices)?;
    let sample = BoundarySample::enumerate(a, ctx.params.uint("ray_length", 3) as u32, usize::MAX, 1, None)?;
    if sample.rays.is_empty() {
        return Err(LabError::Precondition("no rays to sample".into()));
    }
    let horizon = 2 * (ctx.radius + 2 * el) + 12;
    let mut out = Output::default();
    let mut witness = None;
    for _ in 0..count {
        let g = gs.choose(&mut rng).expect("nonempty");
        let xi = sample.rays.choose(&mut rng).expect("nonempty");
        let y = a.orbit(ys.choose(&mut rng).expect("nonempty"));
        let terms: Vec<Point> = (0..horizon).map(|n| xi.point(a, n)).collect();
        let (l, rr) = equivariance_sides(a, g, &terms, &y, DEFAULT_MIN_TAIL)?;
        if l != rr && witness.is_none() {
            witness = Some(format!("g = {}, ξ = {}, y = {}: {l} ≠ {rr}", a.format(g), xi.describe(a), a.point_label(&y)));
        }
    }
    out.checks.push(Check::with_witness(
        "equivariance",
        witness.is_none(),
        format!("{count} triples, |g| ≤ {el}, |y| ≤ {}", ctx.radius),
        witness,
    ));
    Ok(out)
}

fn delta(ctx: &Context) -> Result<Output> {
    let ball = build_ball(&ctx.action, ctx.radius, ctx.limits)?;
    let g = ball.graph();
    let cap = ctx.params.uint("exhaustive_cap", 60) as usize;
    let policy = if g.len() <= cap {
        SamplingPolicy::Exhaustive
    } else {
        SamplingPolicy::Sampled {
            count: ctx.params.uint("samples", 50_000) as usize,
            seed: ctx.seed,
        }
    };
    let est = g.estimate_delta(policy);
    let mut out = Output::default();
    out.constant("delta", "four_point_estimate", est.delta);
    if is_tree(&ctx.action) {
        out.check("tree-delta", est.delta.doubled() == 0, format!("δ = {}", est.delta));
    }
    out.details = serde_json::to_value(&est)?;
    Ok(out)
}

fn projection_axioms(ctx: &Context) -> Result<Output> {
    let a = &ctx.action;
    let seeds = isos(a, &ctx.params.words("seeds", &["a"]))?;
    let translates = isos(a, &ctx.params.words("translates", &["e", "b", "b^2", "b^3", "ab", "Ab"]))?;
    let fam = build_axis_family(a, &seeds, &translates)?;
    let rep = verify_projection_axioms(&fam, None);
    let mut out = Output::default();
    let first = rep.witnesses.first().cloned();
    out.checks.push(Check::with_witness("axiom-1", rep.axiom1, format!("{} members", fam.len()), first.clone()));
    out.checks.push(Check::with_witness("axiom-2", rep.axiom2, format!("κ = {}", rep.kappa), first.clone()));
    out.checks.push(Check::with_witness(
        "axiom-3",
        rep.axiom3,
        format!("at most {} large projections", rep.axiom3_max_count),
        first.clone(),
    ));
    out.checks.push(Check::with_witness("triangle-inequality", rep.triangle_inequality, "d_U", first));
    if let Some(k) = ctx.params.opt_uint("expected_kappa") {
        out.check("kappa-pinned", rep.kappa as u64 == k, format!("κ = {}, expected {k}", rep.kappa));
    }
    out.constant("kappa", "verify_projection_axioms", rep.kappa);
    let pc = build_complex(&fam, ctx.params.uint("k", 1) as u32)?;
    out.artifacts.push(("complex.dot".into(), pc.graph.to_dot("projection_complex")));
    out.details = serde_json::to_value(&rep)?;
    Ok(out)
}

fn forcing(ctx: &Context) -> Result<Output> {
    let a = &ctx.action;
    let h = iso(a, &ctx.params.word("h", "ba^4"))?;
    let f = iso(a, &ctx.params.word("f", "a"))?;
    let count = ctx.params.uint("count", 7) as usize;
    let periods = DEFAULT_MEMBER_PERIODS.max(a.word_length(&h) as i64);
    let fam = power_chain(a, &h, &f, count, periods)?;
    let k = ctx.params.uint("k", 2) as u32;
    let pc = build_complex(&fam, k)?;
    let rep = least_forcing_constant(&pc, &fam);
    let mut out = Output::default();
    out.check("connected", pc.connected, format!("K = {k}, {} members", fam.len()));
    out.checks.push(Check::with_witness(
        "forcing",
        rep.passed,
        format!("{} deletion tests at K̂ = {}", rep.checks, rep.k_hat),
        rep.witnesses.first().cloned(),
    ));
    out.constant("kappa", "build_axis_family", fam.kappa());
    out.constant("k_hat", "least_forcing_constant", rep.k_hat);
    out.constant("least_connected_k", "least_connected_k", least_connected_k(&fam, 16)?);
    let n = fam.len();
    if n >= 4 {
        let path: Vec<usize> = (0..=n - 4).collect();
        match verify_bgit(&pc, &fam, &path, n - 1, None) {
            Ok(b) => {
                out.check("bgit", true, format!("max d_V(U_0, U_i) = {} along {} members", b.value, path.len()));
                out.constant("k0", "verify_bgit", b.value);
            }
            Err(e) => out.check("bgit", false, e.to_string()),
        }
    }
    out.artifacts.push(("complex.dot".into(), pc.graph.to_dot("projection_complex")));
    out.details = serde_json::to_value(&rep)?;
    Ok(out)
}

fn minimal_loxodromic(ctx: &Context) -> Result<Output> {
    let a = &ctx.action;
    let g = iso(a, &ctx.params.word("g", "b"))?;
    let f = iso(a, &ctx.params.word("f", "a"))?;
    let n_max = ctx.params.uint("n_max", 6) as u32;
    let mut out = Output::default();
    let mut rows = Vec::new();
    for k in ctx.params.uints("ks", &[0, 1, 2, 3]) {
        let k = k as u32;
        match least_construct_power(a, &g, &f, k, n_max)? {
            Some(n) => {
                let (h, rep) = minimal_loxodromic_construct(a, &g, &f, n, k)?;
                out.check(&format!("construct-k{k}"), rep.passed(), format!("{} at n = {n}", a.format(&h)));
                out.constant(&format!("least_n_k{k}"), "least_construct_power", n);
                rows.push(serde_json::to_value(&rep)?);
            }
            None => out.check(&format!("construct-k{k}"), false, format!("no n ≤ {n_max} works")),
        }
    }
    out.details = Value::Array(rows);
    Ok(out)
}

fn bcp(ctx: &Context) -> Result<Output> {
    let g = build_coned_off(&ctx.action, ctx.radius, ctx.limits)?;
    let k = ctx.params.uint("k", 2) as u32;
    let rep = verify_bcp(&g, k);
    let mut out = Output::default();
    out.checks.push(Check::with_witness(
        "bcp",
        rep.passed,
        format!("K = {k}, K* = {}, {} deletion tests over {} cosets", rep.k_least, rep.checks, rep.cosets),
        rep.witnesses.first().cloned(),
    ));
    out.check("projection-diameter", rep.projection_diameter_ok, "diam π_{gP}(x) ≤ max(K*, 1)");
    out.check("lipschitz", rep.lipschitz_ok, "d_{gP} ≤ max(K*, 1) across edges");
    if let Some(e) = ctx.params.opt_uint("expected_k") {
        out.check("k-star-pinned", rep.k_least as u64 == e, format!("K* = {}, expected {e}", rep.k_least));
    }
    out.constant("k_star", "verify_bcp", rep.k_least);
    out.details = serde_json::to_value(&rep)?;
    Ok(out)
}

fn coned_lemmas(ctx: &Context) -> Result<Output> {
    let g = build_coned_off(&ctx.action, ctx.radius, ctx.limits)?;
    let a = g.action();
    let per = ctx.params.word("peripheral", "a");
    let x = iso(a, &per)?;
    let seq: Vec<Point> = (0..2 * ctx.radius + 12).map(|n| a.orbit(&a.pow(&x, n as i64))).collect();
    let scan = unique_minimum_scan(&g, &[(format!("{per}^n"), seq)], 2.min(ctx.radius.saturating_sub(1)))?;
    let mut out = Output::default();
    out.check(
        "minimum-at-cone",
        scan[0].unique && scan[0].at_cone,
        format!("min set {:?}, value {}", scan[0].min_set, scan[0].min_value),
    );
    let base = Ray::parse(a, &ctx.params.word("base", "(sa)^n"))?;
    let ps: Vec<Isometry> = ctx
        .params
        .uints("conjugators", &[1, 3, 6, 10])
        .into_iter()
        .map(|n| a.pow(&x, n as i64))
        .collect();
    let acc = cone_accumulation(&g, &g.coset(&format!("<{per}>"))?, &ps, &base)?;
    out.check(
        "accumulation",
        acc.accumulation.converges,
        format!("conjugators {:?}", acc.conjugators),
    );
    out.details = json!({ "scan": scan, "accumulation": acc });
    Ok(out)
}

fn north_south(ctx: &Context) -> Result<Output> {
    let g = iso(&ctx.action, &ctx.params.word("g", "ab"))?;
    let len = ctx.params.uint("length", 4) as u32;
    let count = ctx.params.uint("count", 50) as usize;
    let t = ctx.params.uint("resolution", 3) as u32;
    let n_max = ctx.params.uint("n_max", 10) as u32;
    // gⁿ for n ≤ n_max moves read-off points up to this far out.
    let reach = n_max * ctx.action.word_length(&g) + DEFAULT_SCALE.max(t);
    let wide;
    let a = if ctx.action.custom_action().is_none() && reach > ctx.action.working_radius() {
        wide = ctx.action.clone().with_radius(reach);
        &wide
    } else {
        &ctx.action
    };
    let minus = Ray::repeller(a, &g);
    let sample = BoundarySample::enumerate(a, len, count, t, Some(&minus))?;
    let mut out = Output::default();
    out.check("sample-size", sample.rays.len() == count, format!("{} rays avoiding g⁻ at T = {t}", sample.rays.len()));
    let rep = north_south_probe(a, &g, &sample, n_max)?;
    let n0_ok = rep.n0.is_some();
    out.checks.push(Check::with_witness(
        "north-south",
        n0_ok,
        format!("n₀ = {:?} with n_max = {n_max}", rep.n0),
        rep.escaping.first().cloned(),
    ));
    if let Some(n0) = rep.n0 {
        let all = rep.inside[n0 as usize..].iter().all(|&c| c == sample.rays.len());
        out.check("stays-inside", all, format!("every ray inside for {n0} ≤ n ≤ {n_max}"));
        out.constant("n0", "north_south_probe", n0);
    }
    // n₀ against T on one sample that avoids g⁻ at the smallest T.
    let mut ts: Vec<u32> = ctx.params.uints("resolutions", &[1, 2, 3, 4, 5]).into_iter().map(|x| x as u32).collect();
    ts.sort_unstable();
    ts.dedup();
    let mut curve = Vec::new();
    if let Some(&t0) = ts.first() {
        let common = BoundarySample::enumerate(a, len, count, t0, Some(&minus))?;
        for &tt in &ts {
            let s = BoundarySample::new(common.rays.clone(), tt, DEFAULT_SCALE.max(tt))?;
            let r = north_south_probe(a, &g, &s, n_max)?;
            curve.push((tt, r.n0));
        }
        let known: Vec<u32> = curve.iter().filter_map(|c| c.1).collect();
        let monotone = known.windows(2).all(|w| w[0] <= w[1]) && curve.iter().skip_while(|c| c.1.is_some()).all(|c| c.1.is_none());
        out.check("monotone-in-t", monotone, format!("n₀ by T: {curve:?}"));
        let pts: Vec<(i64, i64)> = curve.iter().filter_map(|&(tt, n)| n.map(|n| (tt as i64, n as i64))).collect();
        out.artifacts.push((
            "n0_vs_t.svg".into(),
            svg::line_plot(&format!("n0 against T for {}", a.format(&g)), "T", "n0", &pts),
        ));
    }
    out.details = json!({ "report": rep, "curve": curve });
    Ok(out)
}

fn proximality(ctx: &Context) -> Result<Output> {
    let a = &ctx.action;
    let t = ctx.params.uint("resolution", 3) as u32;
    let depth = ctx.params.uint("depth", 6) as u32;
    let sources = rays(a, &ctx.params.words("sources", &["b^n", "(bab)^n"]))?;
    let target = Ray::parse(a, &ctx.params.word("target", "a^n"))?;
    let pair = rays(a, &ctx.params.words("pair", &["a^n", "b^n"]))?;
    if pair.len() != 2 {
        return Err(LabError::InvalidArgument("pair needs two rays".into()));
    }
    let mut out = Output::default();
    let (g, rep) = extreme_proximality_probe(a, &sources, &target, t, depth, DEFAULT_SCALE)?;
    out.check("proximality", true, format!("{} after {} candidates", a.format(&g), rep.searched));
    out.constant("proximal_element", "extreme_proximality_probe", a.format(&g));
    let (h, fp) = fixed_pair_density_probe(a, (&pair[0], &pair[1]), t, depth, DEFAULT_SCALE)?;
    out.check("fixed-pair", true, format!("{} by {}", a.format(&h), fp.method));
    out.constant("fixed_pair_element", "fixed_pair_density_probe", a.format(&h));
    out.details = json!({ "proximality": rep, "fixed_pair": fp });
    Ok(out)
}

fn free_semigroup(ctx: &Context) -> Result<Output> {
    let a = &ctx.action;
    let gens = isos(a, &ctx.params.words("generators", &["a", "A"]))?;
    let l = ctx.params.uint("length", 10) as u32;
    let (f, cert) = free_semigroup_certificate(a, &gens, ctx.params.uint("depth", 4) as u32, l)?;
    let expected: u64 = (1..=l).map(|k| (gens.len() as u64).pow(k)).sum();
    let mut out = Output::default();
    out.check(
        "free-semigroup",
        cert.products == expected,
        format!("{} products of at most {l} factors of A·{} are distinct", cert.products, a.format(&f)),
    );
    out.constant("f", "free_semigroup_certificate", &cert.f);
    out.constant("tau", "free_semigroup_certificate", cert.tau);
    let pn = isos(a, &ctx.params.words("pnai", &["a", "b"]))?;
    let pl = ctx.params.uint("pnai_length", 8) as u32;
    let pnai = match pn.as_slice() {
        [x, y] => match pnai_certificate(a, x, y, pl) {
            Ok(c) => {
                out.check("free-product", true, format!("{} alternating words up to length {pl}", c.words));
                serde_json::to_value(&c)?
            }
            Err(LabError::RelationFound(w)) => {
                out.checks.push(Check::with_witness("free-product", false, "relation found", Some(w)));
                Value::Null
            }
            Err(e) => return Err(e),
        },
        _ => return Err(LabError::InvalidArgument("pnai needs two elements".into())),
    };
    out.details = json!({ "semigroup": cert, "pnai": pnai });
    Ok(out)
}

fn bounded_axis(ctx: &Context) -> Result<Output> {
    let a = &ctx.action;
    let x = iso(a, &ctx.params.word("a", "s"))?;
    let h = iso(a, &ctx.params.word("h", "a"))?;
    let n = ctx.params.uint("range", 3) as i64;
    let rep = bounded_axis_probe(a, &x, &h, -n..=n)?;
    let mut out = Output::default();
    out.check("fixed-points-apart", true, format!("τ = {} over {} powers", rep.tau, rep.values.len()));
    if let Some(e) = ctx.params.opt_uint("expected_tau") {
        out.check("tau-pinned", rep.tau as u64 == e, format!("τ = {}, expected {e}", rep.tau));
    }
    out.constant("tau", "bounded_axis_probe", rep.tau);
    out.details = serde_json::to_value(&rep)?;
    Ok(out)
}

fn towers(ctx: &Context) -> Result<Output> {
    let a = &ctx.action;
    let d = isos(a, &ctx.params.words("d", &["a", "b", "A", "B"]))?;
    let f = isos(a, &ctx.params.words("f", &["a", "b", "aB"]))?;
    let f: [Isometry; 3] = f
        .try_into()
        .map_err(|_| LabError::InvalidArgument("f needs exactly three elements".into()))?;
    let mut out = Output::default();
    match paradoxical_towers(a, &d, &f, ctx.radius) {
        Ok(c) => {
            out.check("disjoint", c.disjoint, format!("{} ball elements, {} parametrised", c.checked, c.parametrised));
            out.check("covering", c.covering, format!("ball of radius {}", c.radius));
            out.check("partition", c.partition, "each element in exactly one g_i A_i");
            out.constant("f0", "paradoxical_towers", &c.f0);
            out.details = serde_json::to_value(&c)?;
        }
        Err(LabError::VerificationFailure(w)) => {
            out.checks.push(Check::with_witness("towers", false, "certificate failed", Some(w)));
        }
        Err(e) => return Err(e),
    }
    Ok(out)
}

fn myrberg(ctx: &Context) -> Result<Output> {
    let a = &ctx.action;
    let omega: Vec<u32> = ctx.params.uints("omega", &[1, 2, 3]).into_iter().map(|x| x as u32).collect();
    let l = isos(a, &ctx.params.words("l", &["ab"]))?;
    let fam = isos(a, &ctx.params.words("family", &["a", "b"]))?;
    let ray = myrberg_ray(a, &omega, &l, &fam, ctx.params.uint("fellow_radius", 0) as u32)?;
    let lengths: Vec<u32> = ray.segments.iter().map(|s| s.length).collect();
    let mut out = Output::default();
    out.check("increasing-segments", ray.strictly_increasing, format!("fellow-travel lengths {lengths:?}"));
    out.constant("element", "myrberg_ray", &ray.element);
    out.constant("c", "myrberg_ray", ray.c.to_string());
    let ball = build_ball(a, ctx.radius, ctx.limits)?;
    let step = iso(a, "b").or_else(|_| Ok::<_, LabError>(a.generators()[0].clone()))?;
    let shifted: Vec<Point> = ray
        .path
        .iter()
        .map(|p| match p {
            Point::Elem(w) => a.orbit(&a.mul(&a.from_word(w), &step)),
            other => other.clone(),
        })
        .collect();
    let drift: Vec<Point> = (0..3 * ctx.radius + 12).map(|n| a.orbit(&a.pow(&step, n as i64))).collect();
    let sparse: Vec<Point> = ray.path.iter().step_by(2).cloned().collect();
    let comps = vec![
        ("shifted".to_string(), shifted),
        (format!("{}^n", a.format(&step)), drift),
        ("sparse".to_string(), sparse),
    ];
    match myrberg_injectivity_probe(&ball, &ray, &comps, DEFAULT_MIN_TAIL) {
        Ok(inj) => {
            out.check("guard-chain", inj.guard_chain, "segment middles guard o from later points");
            out.check("singleton", inj.singleton, format!("{} competitors", inj.competitors.len()));
            out.details = json!({ "ray": ray, "injectivity": inj });
        }
        Err(e) => {
            out.check("singleton", false, e.to_string());
            out.details = json!({ "ray": ray });
        }
    }
    Ok(out)
}

fn faithful(ctx: &Context) -> Result<Output> {
    let a = &ctx.action;
    let ball = build_ball(a, ctx.radius, ctx.limits)?;
    let fs = isos(a, &ctx.params.words("elements", &["a", "b", "ab"]))?;
    let sample = BoundarySample::enumerate(
        a,
        ctx.params.uint("sample_length", 3) as u32,
        ctx.params.uint("sample_count", 40) as usize,
        1,
        None,
    )?;
    let mut out = Output::default();
    let faithful = match strongly_faithful_probe(&ball, &fs, &sample) {
        Ok((r, rep)) => {
            out.check("strongly-faithful", true, format!("{} moved by every element", r.describe(a)));
            serde_json::to_value(&rep)?
        }
        Err(LabError::SearchExhausted(w)) => {
            out.checks.push(Check::with_witness("strongly-faithful", false, "no witness ray", Some(w)));
            Value::Null
        }
        Err(e) => return Err(e),
    };
    let b = iso(a, &ctx.params.word("b", "a"))?;
    let c = iso(a, &ctx.params.word("c", "baB"))?;
    let tam = tamedness_probe(
        a,
        &b,
        &c,
        ctx.params.uint("max_length", 4) as u32,
        ctx.params.uint("count", 200) as usize,
        DEFAULT_SCALE,
    )?;
    out.checks.push(Check::with_witness(
        "tamed",
        tam.tamed,
        format!("{} pairs: {} equal, {} disjoint", tam.pairs, tam.equal, tam.disjoint),
        tam.intermediate.first().map(|(x, y)| format!("{x} and {y} share one fixed point")),
    ));
    out.details = json!({ "faithful": faithful, "tamedness": tam });
    Ok(out)
}
