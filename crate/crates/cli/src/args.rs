use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "hardy",
    version,
    about = "Sharp constants of power-weighted Hardy inequalities"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Root of the beta equation.
    Beta(IntervalArgs),
    /// K, M and their comparison at one point.
    Constants(IntervalArgs),
    /// Lowest eigenvalue of the finite-difference Sturm-Liouville problem.
    Eigen(EigenArgs),
    /// Integral-form inequality on seeded random functions and the extremal.
    VerifyIntegral(VerifyArgs),
    /// Differential-form inequality on seeded random functions and the extremal.
    VerifyDifferential(VerifyArgs),
    /// Shell constant and separable Rayleigh quotient.
    Shell(ShellArgs),
    /// Constants over a grid of exponents and ratios.
    Sweep(SweepArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Bc {
    /// Dirichlet at both ends; lowest eigenvalue is M.
    Dirichlet,
    /// Robin at the left end; lowest eigenvalue is K.
    Robin,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    /// Write to this file instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct IntervalArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: f64,
    #[arg(long, default_value_t = 1.0)]
    pub a: f64,
    #[arg(long)]
    pub b: f64,
    /// Root-finder tolerance on |g(beta)| and bracket width.
    #[arg(long, default_value_t = 1e-12)]
    pub tol: f64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct EigenArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: f64,
    #[arg(long, default_value_t = 1.0)]
    pub a: f64,
    #[arg(long)]
    pub b: f64,
    /// Number of grid cells; Richardson uses this and twice this.
    #[arg(long, default_value_t = 1000)]
    pub grid: usize,
    #[arg(long, value_enum, default_value = "dirichlet")]
    pub bc: Bc,
    #[arg(long, default_value_t = 1e-12)]
    pub tol: f64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: f64,
    #[arg(long, default_value_t = 1.0)]
    pub a: f64,
    #[arg(long)]
    pub b: f64,
    #[arg(long, default_value_t = 1000)]
    pub samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Relative tolerance of every component integral.
    #[arg(long, default_value_t = 1e-10)]
    pub tol: f64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct ShellArgs {
    /// Ambient dimension.
    #[arg(long)]
    pub n: u32,
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: f64,
    #[arg(long)]
    pub r1: f64,
    #[arg(long)]
    pub r2: f64,
    /// Angular Rayleigh quotient of the separable factor.
    #[arg(long, default_value_t = 0.0)]
    pub mu: f64,
    #[arg(long, default_value_t = 1e-10)]
    pub tol: f64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
    pub alphas: Vec<f64>,
    /// Ratios b/a; each point uses a = 1.
    #[arg(long, value_delimiter = ',', required = true)]
    pub ratios: Vec<f64>,
    /// Dimensions n for extra shell-constant columns.
    #[arg(long, value_delimiter = ',')]
    pub dims: Vec<u32>,
    #[arg(long, default_value_t = 1e-12)]
    pub tol: f64,
    #[command(flatten)]
    pub output: OutputArgs,
}
