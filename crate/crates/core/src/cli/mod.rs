//! Command-line front end.
//!
//! Exit codes: 0 success, 1 runtime or I/O failure (including a failed
//! `verify`), 2 invalid input. Angles are radians unless `--degrees` is given.
//! The default seed can be set with `TELEPORT_SIM_SEED`.

mod commands;
pub mod verify;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::qstate::Alpha;

pub use commands::{cmd_montecarlo, cmd_otp, cmd_sweep, cmd_teleport};

pub const SEED_ENV: &str = "TELEPORT_SIM_SEED";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("i/o error: {0}")]
    Io(#[from] io::Error),
    #[error("verification failed: {0}")]
    VerifyFailed(String),
    #[error(transparent)]
    Sim(crate::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Invalid(_) => 2,
            CliError::Io(_) | CliError::VerifyFailed(_) | CliError::Sim(_) => 1,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "teleport-sim", version, about = "Qubit teleportation through a partially dephased EPR pair")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Teleport one input state and report all four Bell branches.
    Teleport(TeleportArgs),
    /// Tabulate probability and fidelity over a (phi, alpha) grid.
    Sweep(SweepArgs),
    /// Estimate the spin-up probability by sampling protocol runs.
    Montecarlo(MonteCarloArgs),
    /// Run the classical one-time-pad protocol on random bits.
    Otp(OtpArgs),
    /// Run the built-in consistency checks.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DataFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    /// Write to this file instead of stdout.
    #[arg(long, short = 'o')]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct TeleportArgs {
    /// Population of |up>.
    #[arg(long)]
    pub rho00: f64,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub rho01_re: f64,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub rho01_im: f64,
    #[arg(long, value_parser = parse_alpha)]
    pub alpha: Alpha,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    pub format: ReportFormat,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub phi_min: f64,
    /// Defaults to pi (or 180 with --degrees).
    #[arg(long, allow_negative_numbers = true)]
    pub phi_max: Option<f64>,
    #[arg(long, default_value_t = crate::experiment::DEFAULT_PHI_STEPS)]
    pub phi_steps: usize,
    #[arg(long, default_value_t = 0.0, value_parser = parse_alpha_f64)]
    pub alpha_min: f64,
    #[arg(long, default_value_t = 1.0, value_parser = parse_alpha_f64)]
    pub alpha_max: f64,
    #[arg(long, default_value_t = crate::experiment::DEFAULT_ALPHA_STEPS)]
    pub alpha_steps: usize,
    /// Add a Monte Carlo estimate with this many shots per grid point.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub shots: Option<u64>,
    #[arg(long, env = SEED_ENV, default_value_t = 0)]
    pub seed: u64,
    /// Interpret angles as degrees.
    #[arg(long)]
    pub degrees: bool,
    #[arg(long, value_enum, default_value_t = DataFormat::Csv)]
    pub format: DataFormat,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct MonteCarloArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub phi: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub phi_m: f64,
    #[arg(long, value_parser = parse_alpha)]
    pub alpha: Alpha,
    #[arg(long, default_value_t = 100_000, value_parser = clap::value_parser!(u64).range(1..))]
    pub shots: u64,
    #[arg(long, env = SEED_ENV, default_value_t = 0)]
    pub seed: u64,
    /// Interpret angles as degrees.
    #[arg(long)]
    pub degrees: bool,
    /// Draw Bell outcomes from traced probabilities instead of uniformly.
    #[arg(long)]
    pub trace_outcomes: bool,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    pub format: ReportFormat,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct OtpArgs {
    #[arg(long, default_value_t = 10_000, value_parser = clap::value_parser!(u64).range(1..))]
    pub shots: u64,
    #[arg(long, env = SEED_ENV, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    pub format: ReportFormat,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[arg(long, env = SEED_ENV, default_value_t = 0)]
    pub seed: u64,
    /// Random cases per randomized check.
    #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
    pub cases: u64,
    #[command(flatten)]
    pub out: OutputArgs,
}

fn parse_alpha(s: &str) -> Result<Alpha, String> {
    let v: f64 = s.parse().map_err(|e| format!("{e}"))?;
    Alpha::new(v).map_err(|e| e.to_string())
}

fn parse_alpha_f64(s: &str) -> Result<f64, String> {
    parse_alpha(s).map(Alpha::value)
}

pub(crate) fn to_radians(x: f64, degrees: bool) -> f64 {
    if degrees {
        x.to_radians()
    } else {
        x
    }
}

impl Command {
    fn output(&self) -> Option<&PathBuf> {
        match self {
            Command::Teleport(a) => a.out.output.as_ref(),
            Command::Sweep(a) => a.out.output.as_ref(),
            Command::Montecarlo(a) => a.out.output.as_ref(),
            Command::Otp(a) => a.out.output.as_ref(),
            Command::Verify(a) => a.out.output.as_ref(),
        }
    }
}

/// Runs `command`, writing its report or data to `out`.
pub fn execute(command: &Command, out: &mut dyn Write) -> Result<(), CliError> {
    match command {
        Command::Teleport(args) => cmd_teleport(args, out),
        Command::Sweep(args) => cmd_sweep(args, out),
        Command::Montecarlo(args) => cmd_montecarlo(args, out),
        Command::Otp(args) => cmd_otp(args, out),
        Command::Verify(args) => verify::cmd_verify(args, out),
    }
}

/// Runs `cli`, sending output to `--output` or stdout.
pub fn run(cli: &Cli) -> Result<(), CliError> {
    match cli.command.output() {
        Some(path) => {
            let mut file = BufWriter::new(File::create(path)?);
            execute(&cli.command, &mut file)?;
            file.flush()?;
            Ok(())
        }
        None => {
            let stdout = io::stdout();
            let mut lock = stdout.lock();
            execute(&cli.command, &mut lock)?;
            lock.flush()?;
            Ok(())
        }
    }
}
