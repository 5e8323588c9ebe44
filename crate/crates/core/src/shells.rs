//! Spherical shells `A_n(r1, r2) = { r1 < |x| < r2 } ⊂ R^n`.
//!
//! In polar coordinates `|∇f|² = |∂_r f|² + r⁻² |∇_S f|²` and the volume
//! element carries `r^(n-1)`, so for radial `f` the shell inequality is the
//! one-dimensional differential form with exponent `α + n - 1`. For a
//! separable `f(r, θ) = g(r) p(θ)` the surface integrals cancel in the ratio
//! and only the angular quotient `μ = ∫|∇_S p|² / ∫|p|²` survives.

use crate::constants::{differential_constant, WeightedInterval};
use crate::error::{HardyError, Result};
use crate::quadrature::{differential_form_functional, TestFunction};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShellDomain {
    n: u32,
    alpha: f64,
    r1: f64,
    r2: f64,
}

impl ShellDomain {
    pub fn new(n: u32, alpha: f64, r1: f64, r2: f64) -> Result<Self> {
        let ok = n >= 2 && r1.is_finite() && r2.is_finite() && r1 > 0.0 && r1 < r2 && alpha.is_finite();
        if !ok {
            return Err(HardyError::InvalidShell { n, r1, r2 });
        }
        Ok(Self { n, alpha, r1, r2 })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn r1(&self) -> f64 {
        self.r1
    }

    pub fn r2(&self) -> f64 {
        self.r2
    }
}

/// `(r1, r2)` with exponent `α + n - 1`.
pub fn radial_reduction(sd: &ShellDomain) -> WeightedInterval {
    WeightedInterval::new(sd.alpha + (sd.n as f64 - 1.0), sd.r1, sd.r2)
        .expect("shell invariants imply a valid interval")
}

/// `(2-α-n)²/4 + (π / ln(r2/r1))²`.
pub fn shell_constant(sd: &ShellDomain) -> f64 {
    differential_constant(&radial_reduction(sd))
        .differential
        .expect("differential constant always exists")
}

/// Angular quotient of the degree-one spherical harmonics on `S^(n-1)`.
pub fn first_harmonic_mu(n: u32) -> f64 {
    n as f64 - 1.0
}

/// Shell Rayleigh quotient of `g(r) p(θ)`, split into its radial part and
/// the angular quotient `μ` of `p`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeparableQuotient {
    pub radial: f64,
    pub angular: f64,
}

impl SeparableQuotient {
    pub fn value(&self) -> f64 {
        self.radial + self.angular
    }
}

/// `[∫ r^(α+n-1) g'² + μ ∫ r^(α+n-3) g²] / ∫ r^(α+n-3) g²` for `g` vanishing
/// at `r1` and `r2`.
pub fn separable_rayleigh(g: &TestFunction, mu: f64, sd: &ShellDomain, tol: f64) -> Result<SeparableQuotient> {
    if !(mu >= 0.0 && mu.is_finite()) {
        return Err(HardyError::DegenerateInput(
            "angular quotient must be finite and nonnegative",
        ));
    }
    let radial = differential_form_functional(g, &radial_reduction(sd), tol)?.value;
    Ok(SeparableQuotient { radial, angular: mu })
}
