use thiserror::Error;

/// Failure modes shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum HardyError {
    #[error("alpha = 1 is excluded from the integral form (the coefficient 2/(1 - alpha) is undefined)")]
    AlphaExcluded,

    #[error(
        "no root of the beta equation for alpha = {alpha} and ln(b/a) = {log_ratio}; \
         for alpha > 1 a root exists only when alpha < {existence_bound}"
    )]
    NoRoot {
        alpha: f64,
        log_ratio: f64,
        existence_bound: f64,
    },

    #[error("invalid interval: need 0 < a < b < inf, got a = {a}, b = {b}")]
    InvalidInterval { a: f64, b: f64 },

    #[error("invalid shell: need n >= 2 and 0 < r1 < r2 < inf, got n = {n}, r1 = {r1}, r2 = {r2}")]
    InvalidShell { n: u32, r1: f64, r2: f64 },

    #[error("point {x} lies outside [{lo}, {hi}]")]
    DomainError { x: f64, lo: f64, hi: f64 },

    #[error("invalid tolerance {0}; must be finite and positive")]
    InvalidTolerance(f64),

    #[error("root solver stalled at bracket [{lo}, {hi}] with residual {residual:e}")]
    SolverStalled { lo: f64, hi: f64, residual: f64 },

    #[error(
        "quadrature did not reach tolerance {tolerance:e} within {panels} panels \
         (error estimate {estimate:e})"
    )]
    QuadratureFailure {
        tolerance: f64,
        estimate: f64,
        panels: usize,
    },

    #[error("degenerate input: {0}")]
    DegenerateInput(&'static str),

    #[error("test function `{0}` has no derivative evaluator")]
    MissingDerivative(String),

    #[error("test function `{0}` does not vanish at both endpoints")]
    NotVanishing(String),

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("inverse iteration did not converge: residual {residual:e} after {steps} steps")]
    ConvergenceFailure { residual: f64, steps: usize },
}

impl HardyError {
    /// Stable kebab-case identifier for machine-readable error reports.
    pub fn code(&self) -> &'static str {
        match self {
            HardyError::AlphaExcluded => "alpha-excluded",
            HardyError::NoRoot { .. } => "no-root",
            HardyError::InvalidInterval { .. } => "invalid-interval",
            HardyError::InvalidShell { .. } => "invalid-shell",
            HardyError::DomainError { .. } => "domain-error",
            HardyError::InvalidTolerance(_) => "invalid-tolerance",
            HardyError::SolverStalled { .. } => "solver-stalled",
            HardyError::QuadratureFailure { .. } => "quadrature-failure",
            HardyError::DegenerateInput(_) => "degenerate-input",
            HardyError::MissingDerivative(_) => "missing-derivative",
            HardyError::NotVanishing(_) => "not-vanishing",
            HardyError::InvalidGrid(_) => "invalid-grid",
            HardyError::ConvergenceFailure { .. } => "convergence-failure",
        }
    }
}

pub type Result<T> = std::result::Result<T, HardyError>;

pub(crate) fn check_tolerance(tol: f64) -> Result<()> {
    if tol.is_finite() && tol > 0.0 {
        Ok(())
    } else {
        Err(HardyError::InvalidTolerance(tol))
    }
}
