//! Configuration-driven experiment runs: validation, the suite catalogue and reports.

pub mod config;
pub mod report;
pub mod run;
pub mod suites;
pub mod svg;

pub use config::{Diagnostic, ExperimentConfig, ExperimentSpec, MAX_RADIUS};
pub use report::{Check, Constant, ExperimentReport, ExperimentTiming, Report, Timing};
pub use run::{experiment_seed, export_config, run_config, write_outputs, RunOptions, RunOutcome};
pub use suites::{find_suite, ParamInfo, ParamKind, SuiteInfo, SUITES};
