//! Thin command-line front end over `horolab::experiment`.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use horolab::experiment::{export_config, run_config, write_outputs, ExperimentConfig, RunOptions, SUITES};

#[derive(Parser)]
#[command(name = "horolab", version, about = "Run horolab experiment configurations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run every experiment in a config and write reports.
    Run(RunArgs),
    /// List the built-in suites and their parameters.
    List,
    /// Check a config against the schema and the suite catalogue.
    Validate {
        #[arg(long)]
        config: PathBuf,
    },
    /// Write the ball of each experiment's instance as DOT, GraphML and CSV.
    Export(RunArgs),
}

#[derive(Args)]
struct RunArgs {
    #[arg(long)]
    config: PathBuf,
    /// Overrides the seed in the config.
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, default_value = "out")]
    out: PathBuf,
    /// Worker threads; 0 uses every core.
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    /// Overrides `max_vertices` in the config.
    #[arg(long)]
    max_vertices: Option<usize>,
}

impl RunArgs {
    fn options(&self) -> RunOptions {
        RunOptions {
            seed: self.seed,
            jobs: self.jobs,
            max_vertices: self.max_vertices,
            base_dir: self.config.parent().map(Path::to_path_buf).unwrap_or_default(),
        }
    }
}

fn load(path: &Path) -> Result<ExperimentConfig, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    ExperimentConfig::parse(&text).map_err(|ds| {
        ds.iter()
            .map(|d| format!("{}: {d}", path.display()))
            .collect::<Vec<_>>()
            .join("\n")
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::List => {
            for s in SUITES {
                println!("{:<20} {}", s.name, s.description);
                for p in s.params {
                    println!("    {:<16} {:<36} {}", p.name, p.kind.describe(), p.doc);
                }
            }
            Ok(true)
        }
        Command::Validate { config } => load(&config).map(|c| {
            println!("{}: ok, {} experiments", config.display(), c.experiments.len());
            true
        }),
        Command::Run(args) => load(&args.config).and_then(|cfg| {
            let outcome = run_config(&cfg, &args.options()).map_err(|e| e.to_string())?;
            write_outputs(&outcome, &args.out).map_err(|e| e.to_string())?;
            for e in &outcome.report.experiments {
                let failed = e.checks.iter().filter(|c| !c.passed).count();
                let verdict = if e.passed { "pass" } else { "FAIL" };
                println!("{verdict} {} {} ({} checks, {failed} failed)", e.index, e.suite, e.checks.len());
            }
            println!("report written to {}", args.out.join("report.json").display());
            Ok(outcome.report.passed)
        }),
        Command::Export(args) => load(&args.config).and_then(|cfg| {
            let files = export_config(&cfg, &args.options(), &args.out).map_err(|e| e.to_string())?;
            println!("{} files written to {}", files.len(), args.out.display());
            Ok(true)
        }),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(msg) => {
            eprintln!("{msg}");
            ExitCode::from(2)
        }
    }
}
