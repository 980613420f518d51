//! `fxrisk` — batch front end for FX-adjusted credit-risk parameters.
//!
//! Subcommands: `adjust` (FX-adjust every pair of a portfolio file),
//! `check` (consistency residuals of an adjusted file), `curve`
//! (homogeneous adjusted-correlation curve), and `simulate` (Monte
//! Carlo cross-check of the closed forms).
//!
//! Exit codes: 0 success, 1 consistency violation, 2 parse/validation
//! error, 3 model-validity error, 4 domain violation. Every failure
//! prints a single diagnostic line to stderr, prefixed with the failing
//! row or field. Output is byte-stable: the same inputs, flags, and
//! seeds always produce identical bytes.

mod commands;
mod numfmt;
mod portfolio;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use commands::{CurveInputs, SimulateInputs};

/// A command failure: exit code plus a single-line diagnostic.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    pub fn new(code: i32, message: String) -> Self {
        Self { code, message }
    }
}

/// Simulation scheme selector for `--mode`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    /// One-period latent-variable sampling.
    Reduced,
    /// Full lognormal path sampling (requires process columns).
    #[value(name = "gbm_path")]
    GbmPath,
}

/// FX parameters supplied on the command line, overriding the `[fx]`
/// section of the input file.
#[derive(Args)]
pub struct FxFlags {
    /// Mean of the one-year log FX ratio (defaults to 0).
    #[arg(long, conflicts_with = "unit_mean_fx", allow_negative_numbers = true)]
    pub nu: Option<f64>,

    /// Volatility of the one-year log FX ratio.
    #[arg(long)]
    pub tau: Option<f64>,

    /// Set nu = -tau^2/2 so the FX rate has unit mean in levels.
    #[arg(long)]
    pub unit_mean_fx: bool,
}

#[derive(Parser)]
#[command(
    name = "fxrisk",
    version,
    about = "FX adjustments of default probabilities and asset correlations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute FX-adjusted PDs and correlations for every pair.
    Adjust {
        /// Portfolio file ([fx] / [borrowers] / [pairs] sections).
        portfolio: PathBuf,
        /// Write output here instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
        #[command(flatten)]
        fx: FxFlags,
    },
    /// Verify the consistency condition on an adjusted file.
    Check {
        /// CSV produced by `adjust`.
        adjusted: PathBuf,
        /// Largest acceptable |residual|.
        #[arg(long, default_value_t = 1e-6)]
        tolerance: f64,
        /// Write output here instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Tabulate the homogeneous adjusted-correlation curve.
    Curve {
        /// Curve-spec file ([curve] section); alternative to the flags.
        #[arg(conflicts_with_all = ["p", "rho", "grid", "points", "max"])]
        spec: Option<PathBuf>,
        /// Original PD shared by both borrowers, in (0, 0.5).
        #[arg(long)]
        p: Option<f64>,
        /// Original asset correlation, below 1.
        #[arg(long, allow_negative_numbers = true)]
        rho: Option<f64>,
        /// Comma-separated adjusted PDs, strictly increasing in (p, 0.5).
        #[arg(long, value_delimiter = ',', conflicts_with_all = ["points", "max"])]
        grid: Option<Vec<f64>>,
        /// Generate an evenly spaced grid of this many points instead.
        #[arg(long)]
        points: Option<usize>,
        /// Upper end of the generated grid.
        #[arg(long, default_value_t = 0.4999)]
        max: f64,
        /// Write output here instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Monte Carlo cross-check of the closed forms, pair by pair.
    Simulate {
        /// Portfolio file; gbm_path mode needs process columns.
        portfolio: PathBuf,
        /// Number of samples per pair.
        #[arg(long, default_value_t = 1_000_000)]
        n: usize,
        /// Base seed; pair k draws from seed + k.
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Sampling scheme.
        #[arg(long, value_enum, default_value = "reduced")]
        mode: Mode,
        /// Path increments per year (gbm_path mode).
        #[arg(long, default_value_t = 12)]
        steps: usize,
        /// Write output here instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
        #[command(flatten)]
        fx: FxFlags,
    },
}

fn run(cli: Cli) -> Result<(), Failure> {
    match &cli.command {
        Command::Adjust {
            portfolio,
            output,
            fx,
        } => commands::cmd_adjust(portfolio, output.as_ref(), fx),
        Command::Check {
            adjusted,
            tolerance,
            output,
        } => commands::cmd_check(adjusted, *tolerance, output.as_ref()),
        Command::Curve {
            spec,
            p,
            rho,
            grid,
            points,
            max,
            output,
        } => {
            let inputs = CurveInputs {
                spec: spec.as_ref(),
                p: *p,
                rho: *rho,
                grid: grid.as_deref(),
                points: *points,
                max: *max,
            };
            commands::cmd_curve(&inputs, output.as_ref())
        }
        Command::Simulate {
            portfolio,
            n,
            seed,
            mode,
            steps,
            output,
            fx,
        } => {
            let inputs = SimulateInputs {
                portfolio,
                n: *n,
                seed: *seed,
                mode: *mode,
                steps: *steps,
            };
            commands::cmd_simulate(&inputs, output.as_ref(), fx)
        }
    }
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => {}
        Err(f) => {
            eprintln!("{}", f.message);
            std::process::exit(f.code);
        }
    }
}
