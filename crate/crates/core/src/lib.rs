//! Optimal power-weighted Hardy inequalities on finite intervals `(a, b)`,
//! `0 < a < b`, and on spherical shells `r1 < |x| < r2` in `R^n`.
//!
//! The crate computes the sharp constants of the two one-dimensional forms
//!
//! * integral form: `∫ x^α |h|² ≥ K ∫ x^(α-2) (∫_a^x |h|)²`, with
//!   `K = (1-α)²/4 + β²` and `β` the root of a transcendental equation;
//! * differential form: `∫ x^α |f'|² ≥ M ∫ x^(α-2) |f|²` for `f` vanishing at
//!   both ends, with `M = (1-α)²/4 + (π / ln(b/a))²`;
//!
//! and the shell constant `(2-α-n)²/4 + (π / ln(r2/r1))²`. Alongside the
//! closed forms it provides the machinery that checks them without trusting
//! them: extremal functions and their ODE/boundary residuals, adaptive
//! Gauss–Kronrod quadrature for the Hardy functionals, seeded admissible test
//! functions, and a finite-difference Sturm–Liouville eigensolver that
//! recovers both constants as lowest eigenvalues.
//!
//! ```
//! use hardy_core::{differential_constant, integral_constant, WeightedInterval};
//!
//! let iv = WeightedInterval::new(0.0, 1.0, std::f64::consts::E).unwrap();
//! let k = integral_constant(&iv, 1e-12).unwrap().integral.unwrap();
//! let m = differential_constant(&iv).differential.unwrap();
//! assert!(k < m);
//! ```

pub mod constants;
pub mod error;
pub mod extremals;
pub mod quadrature;
mod root;
pub mod shells;
pub mod spectral;

pub use constants::{
    beta_equation, beta_root, differential_constant, existence_bound, hardy_constants, integral_constant, BetaRoot,
    Branch, HardyConstants, WeightedInterval, DEFAULT_BETA_TOL,
};
pub use error::{HardyError, Result};
pub use extremals::{ClosedFormFunction, Family};
pub use quadrature::{
    differential_form_functional, integral_form_functional, random_admissible, Boundary, PolyKind, QuadratureResult,
    TestFunction,
};
pub use shells::{radial_reduction, separable_rayleigh, shell_constant, ShellDomain};
pub use spectral::{lowest_eigenvalue, EigenResult, LeftBoundary, SlProblem};
