//! Running configurations and writing their outputs.

use std::path::{Path, PathBuf};
use std::time::Instant;

use rayon::prelude::*;
use serde_json::Value;

use super::config::{ExperimentConfig, ExperimentSpec, Params};
use super::report::{Check, ExperimentReport, ExperimentTiming, Report, Timing};
use super::suites::{run_suite, Context};
use crate::actions::build_ball;
use crate::error::{LabError, Result};
use crate::graph::BallLimits;

#[derive(Clone, Debug)]
pub struct RunOptions {
    /// Overrides the seed in the file.
    pub seed: Option<u64>,
    /// Worker threads; 0 lets rayon decide.
    pub jobs: usize,
    /// Overrides `max_vertices` in the file.
    pub max_vertices: Option<usize>,
    /// Directory that relative paths inside instances resolve against.
    pub base_dir: PathBuf,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            seed: None,
            jobs: 0,
            max_vertices: None,
            base_dir: PathBuf::from("."),
        }
    }
}

#[derive(Clone, Debug)]
pub struct RunOutcome {
    pub report: Report,
    pub timing: Timing,
    /// `(file name, contents)` of the plots and graphs produced.
    pub artifacts: Vec<(String, String)>,
}

/// Per-experiment seed, so adding an experiment leaves the others' samples unchanged.
pub fn experiment_seed(seed: u64, index: usize) -> u64 {
    seed ^ (index as u64 + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15)
}

fn limits(cfg: &ExperimentConfig, opts: &RunOptions) -> BallLimits {
    let mut l = BallLimits::default();
    if let Some(m) = opts.max_vertices.or(cfg.max_vertices) {
        l.max_vertices = m;
    }
    l
}

fn pool(jobs: usize) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| LabError::InvalidArgument(format!("thread pool: {e}")))
}

/// Runs every experiment. Resource limits abort the run; any other error becomes a
/// failed `run` check carrying the error as its witness.
pub fn run_config(cfg: &ExperimentConfig, opts: &RunOptions) -> Result<RunOutcome> {
    let seed = opts.seed.or(cfg.seed);
    if seed.is_none() {
        if let Some(s) = cfg.needs_seed() {
            return Err(LabError::InvalidArgument(format!("suite `{s}` samples randomly and needs a seed")));
        }
    }
    let limits = limits(cfg, opts);
    let start = Instant::now();
    let results: Vec<_> = pool(opts.jobs)?.install(|| {
        cfg.experiments
            .par_iter()
            .enumerate()
            .map(|(i, e)| {
                let t = Instant::now();
                let r = run_one(i, e, seed.map_or(0, |s| experiment_seed(s, i)), limits, &opts.base_dir);
                (r, t.elapsed().as_millis())
            })
            .collect()
    });
    let mut experiments = Vec::new();
    let mut artifacts = Vec::new();
    let mut times = Vec::new();
    for (i, (r, ms)) in results.into_iter().enumerate() {
        let (rep, arts) = r?;
        times.push(ExperimentTiming {
            index: i,
            suite: rep.suite.clone(),
            ms,
        });
        experiments.push(rep);
        artifacts.extend(arts);
    }
    let report = Report {
        id: cfg.id.clone(),
        seed,
        passed: experiments.iter().all(|e| e.passed),
        experiments,
    };
    Ok(RunOutcome {
        report,
        timing: Timing {
            total_ms: start.elapsed().as_millis(),
            experiments: times,
        },
        artifacts,
    })
}

type Artifacts = Vec<(String, String)>;

fn run_one(
    index: usize,
    e: &ExperimentSpec,
    seed: u64,
    limits: BallLimits,
    base: &Path,
) -> Result<(ExperimentReport, Artifacts)> {
    let mut rep = ExperimentReport {
        index,
        suite: e.suite.clone(),
        instance: e.instance.clone(),
        radius: e.radius,
        passed: false,
        checks: Vec::new(),
        constants: Vec::new(),
        artifacts: Vec::new(),
        details: Value::Null,
    };
    let out = e.instance.build(base).and_then(|action| {
        let ctx = Context {
            action,
            radius: e.radius,
            params: Params { map: &e.params },
            seed,
            limits,
        };
        run_suite(&e.suite, &ctx)
    });
    let mut files = Vec::new();
    match out {
        Ok(o) => {
            rep.checks = o.checks;
            rep.constants = o.constants;
            rep.details = o.details;
            for (suffix, body) in o.artifacts {
                let name = format!("e{index}-{}-{suffix}", e.suite);
                rep.artifacts.push(name.clone());
                files.push((name, body));
            }
        }
        Err(err @ LabError::ResourceLimit { .. }) => return Err(err),
        Err(err) => rep.checks.push(Check::new("run", false, err.to_string())),
    }
    rep.passed = !rep.checks.is_empty() && rep.checks.iter().all(|c| c.passed);
    Ok((rep, files))
}

/// Writes `report.json`, `timing.json`, `checks.csv`, `constants.csv` and the artifacts.
pub fn write_outputs(outcome: &RunOutcome, dir: &Path) -> Result<Vec<PathBuf>> {
    std::fs::create_dir_all(dir)?;
    let mut files = vec![
        ("report.json".to_string(), outcome.report.to_json()),
        ("timing.json".to_string(), serde_json::to_string_pretty(&outcome.timing)? + "\n"),
        ("checks.csv".to_string(), outcome.report.checks_csv()),
        ("constants.csv".to_string(), outcome.report.constants_csv()),
    ];
    files.extend(outcome.artifacts.iter().cloned());
    files
        .into_iter()
        .map(|(name, body)| {
            let p = dir.join(name);
            std::fs::write(&p, body)?;
            Ok(p)
        })
        .collect()
}

/// Writes the ball of every experiment's instance as DOT, GraphML and adjacency CSV.
pub fn export_config(cfg: &ExperimentConfig, opts: &RunOptions, dir: &Path) -> Result<Vec<PathBuf>> {
    std::fs::create_dir_all(dir)?;
    let limits = limits(cfg, opts);
    let mut written = Vec::new();
    for (i, e) in cfg.experiments.iter().enumerate() {
        let action = e.instance.build(&opts.base_dir)?;
        let ball = build_ball(&action, e.radius, limits)?;
        let g = ball.graph();
        let stem = format!("e{i}-{}-ball", e.suite);
        for (ext, body) in [
            ("dot", g.to_dot(&format!("ball_{i}"))),
            ("graphml", g.to_graphml()),
            ("csv", g.to_adjacency_csv()),
        ] {
            let p = dir.join(format!("{stem}.{ext}"));
            std::fs::write(&p, body)?;
            written.push(p);
        }
    }
    Ok(written)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeds_differ_per_experiment() {
        assert_ne!(experiment_seed(7, 0), experiment_seed(7, 1));
        assert_eq!(experiment_seed(7, 3), experiment_seed(7, 3));
    }

    #[test]
    fn errors_become_failed_checks() {
        let cfg = ExperimentConfig::parse(
            r#"{"id":"t","experiments":[{"suite":"bounded-axis","params":{"a":"a","h":"s"}}]}"#,
        )
        .unwrap();
        let out = run_config(&cfg, &RunOptions::default()).unwrap();
        let c = &out.report.experiments[0].checks[0];
        assert_eq!(c.name, "run");
        assert!(!out.report.passed && c.witness.is_some());
    }

    #[test]
    fn vertex_cap_aborts() {
        let cfg = ExperimentConfig::parse(r#"{"id":"t","max_vertices":10,"experiments":[{"suite":"bcp"}]}"#).unwrap();
        assert!(matches!(run_config(&cfg, &RunOptions::default()), Err(LabError::ResourceLimit { .. })));
    }

    #[test]
    fn sampling_needs_a_seed() {
        let cfg = ExperimentConfig::parse(r#"{"id":"t","experiments":[{"suite":"delta","radius":1}]}"#).unwrap();
        assert!(run_config(&cfg, &RunOptions::default()).is_err());
        let opts = RunOptions {
            seed: Some(1),
            ..Default::default()
        };
        assert!(run_config(&cfg, &opts).unwrap().report.passed);
    }
}
