//! Command-line front end: verification suites, trajectories, Legendre
//! tables, and the cotangent obstruction experiment.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

pub mod commands;
pub mod config;
pub mod error;
pub mod output;
pub mod parallel;

use commands::verify::Suite;
use config::{Format, RunConfig};
use error::{exit, CliError};

#[derive(Debug, Parser)]
#[command(name = "loopmech", version, about = "Discrete mechanics on the unit octonions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run an identity suite and report per-check results.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        /// Write a JSON report here.
        #[arg(long)]
        report: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Iterate the discrete Euler-Lagrange step from a configured point.
    Trajectory(RunArgs),
    /// Evaluate both Legendre maps and their Jacobian ranks at configured points.
    Legendre(RunArgs),
    /// Sample the cotangent obstruction.
    Obstruction {
        #[arg(long)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Restrict samples to the quaternionic subalgebra spanned by e0..e3.
        #[arg(long)]
        quaternionic: bool,
        /// `json` prints the report instead of the text summary.
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Write a JSON report here.
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
pub struct RunArgs {
    /// Path to the JSON run configuration.
    #[arg(value_name = "CONFIG", conflicts_with = "config")]
    pub config_path: Option<PathBuf>,
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Overrides the configured seed.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Overrides the configured output format.
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Overrides the configured output path.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

impl RunArgs {
    fn resolve(&self) -> Result<config::Resolved, CliError> {
        let path = self
            .config_path
            .as_ref()
            .or(self.config.as_ref())
            .ok_or_else(|| CliError::Config("a configuration file is required".into()))?;
        let mut raw = RunConfig::load(path)?;
        if let Some(seed) = self.seed {
            raw.seed = seed;
        }
        let mut cfg = raw.resolve()?;
        if let Some(f) = self.format {
            cfg.format = f;
        }
        if let Some(p) = &self.output {
            cfg.output_path = Some(p.clone());
        }
        Ok(cfg)
    }
}

/// Runs one parsed command and returns its exit code. Diagnostics go to
/// standard error.
pub fn run(cli: Cli) -> u8 {
    match dispatch(cli.command) {
        Ok(()) => exit::OK,
        Err(e) => {
            eprintln!("loopmech: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(command: Command) -> Result<(), CliError> {
    match command {
        Command::Verify { suite, report, seed } => {
            commands::verify::run(suite, seed, parallel::worker_count()?, report.as_deref())
        }
        Command::Trajectory(args) => commands::trajectory::run(&args.resolve()?),
        Command::Legendre(args) => commands::legendre::run(&args.resolve()?),
        Command::Obstruction {
            trials,
            seed,
            quaternionic,
            format,
            report,
        } => commands::obstruction::run(
            trials,
            seed,
            quaternionic,
            parallel::worker_count()?,
            format,
            report.as_deref(),
        ),
    }
}
