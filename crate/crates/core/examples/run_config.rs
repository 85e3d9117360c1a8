//! Running an experiment configuration from code instead of the `horolab` binary.
//!
//! cargo run --release --example run_config

use horolab::experiment::{run_config, ExperimentConfig, RunOptions};

const CONFIG: &str = r#"{
  "id": "example",
  "seed": 11,
  "experiments": [
    {"suite": "delta", "radius": 3},
    {"suite": "bcp", "instance": {"family": "free_product", "factors": [{"letter": "a", "order": 0}, {"letter": "s", "order": 3}]}, "radius": 4},
    {"suite": "bounded-axis", "params": {"expected_tau": 0}}
  ]
}"#;

fn main() -> horolab::Result<()> {
    let cfg = ExperimentConfig::parse(CONFIG).map_err(|d| horolab::LabError::Config {
        pointer: d[0].pointer.clone(),
        message: d[0].message.clone(),
    })?;
    let out = run_config(&cfg, &RunOptions::default())?;
    print!("{}", out.report.checks_csv());
    print!("{}", out.report.constants_csv());
    println!("all passed: {}", out.report.passed);
    Ok(())
}
