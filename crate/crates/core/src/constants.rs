//! The root `β` of the transcendental equation and the closed-form sharp
//! constants of the integral and differential Hardy inequalities.
//!
//! `β` solves `[2/(1-α)] β + tan(β L) = 0` on `(0, π/L) \ {π/(2L)}`, with
//! `L = ln(b/a)`. The solver works with the tan-free equivalent
//!
//! ```text
//! g(β) = [2/(1-α)] β cos(β L) + sin(β L)
//! ```
//!
//! which is smooth on the whole interval and equals `1` at `β = π/(2L)`, so the
//! excluded point can never be reported as a root. For `α < 1` the root lies
//! in `(π/(2L), π/L)`; for `α > 1` it lies in `(0, π/(2L))` and exists only
//! when `α < 1 + 2/L`.

use std::f64::consts::{FRAC_PI_2, PI};

use crate::error::{check_tolerance, HardyError, Result};
use crate::root::safeguarded_secant;

/// Default absolute tolerance of [`beta_root`].
pub const DEFAULT_BETA_TOL: f64 = 1e-12;

/// Number of cells in the existence scan for `α > 1`.
const EXISTENCE_SCAN_CELLS: usize = 2048;

/// Finite interval `(a, b)` with `0 < a < b < ∞` carrying a power exponent `α`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeightedInterval {
    alpha: f64,
    a: f64,
    b: f64,
}

impl WeightedInterval {
    pub fn new(alpha: f64, a: f64, b: f64) -> Result<Self> {
        if !(a.is_finite() && b.is_finite() && a > 0.0 && a < b) || !alpha.is_finite() {
            return Err(HardyError::InvalidInterval { a, b });
        }
        Ok(Self { alpha, a, b })
    }

    /// The interval `(1, b)` used by the unit-normalized lemmas.
    pub fn unit(alpha: f64, b: f64) -> Result<Self> {
        Self::new(alpha, 1.0, b)
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn ratio(&self) -> f64 {
        self.b / self.a
    }

    /// `L = ln(b/a)`, recomputed on every call.
    pub fn log_ratio(&self) -> f64 {
        (self.b / self.a).ln()
    }

    /// The half-line constant `(1-α)²/4`.
    pub fn baseline(&self) -> f64 {
        let d = 1.0 - self.alpha;
        0.25 * d * d
    }

    /// Same endpoints, different exponent.
    pub fn with_alpha(&self, alpha: f64) -> Result<Self> {
        Self::new(alpha, self.a, self.b)
    }

    /// The scaled copy `(1, b/a)` with the same exponent.
    pub fn normalized(&self) -> Self {
        Self {
            alpha: self.alpha,
            a: 1.0,
            b: self.b / self.a,
        }
    }

    pub fn contains(&self, x: f64) -> bool {
        x >= self.a && x <= self.b
    }

    pub(crate) fn check_point(&self, x: f64) -> Result<()> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(HardyError::DomainError {
                x,
                lo: self.a,
                hi: self.b,
            })
        }
    }
}

/// Which half of `(0, π/L)` holds the root.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    BelowHalfPi,
    AboveHalfPi,
}

impl Branch {
    pub fn as_str(&self) -> &'static str {
        match self {
            Branch::BelowHalfPi => "below-half-pi",
            Branch::AboveHalfPi => "above-half-pi",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BetaRoot {
    pub beta: f64,
    /// `g(β)` for the tan-free defining function.
    pub residual: f64,
    /// Final bracketing interval.
    pub bracket: (f64, f64),
    pub branch: Branch,
    pub iterations: usize,
}

/// `g(β) = [2/(1-α)] β cos(β L) + sin(β L)`.
pub fn beta_equation(alpha: f64, log_ratio: f64, beta: f64) -> f64 {
    let k = 2.0 / (1.0 - alpha);
    let t = beta * log_ratio;
    k * beta * t.cos() + t.sin()
}

/// For `α > 1` a root exists exactly when `α < 1 + 2/L`.
pub fn existence_bound(log_ratio: f64) -> f64 {
    1.0 + 2.0 / log_ratio
}

/// Solves for `β` to absolute residual and bracket width `tol`.
pub fn beta_root(iv: &WeightedInterval, tol: f64) -> Result<BetaRoot> {
    check_tolerance(tol)?;
    let alpha = iv.alpha();
    if alpha == 1.0 {
        return Err(HardyError::AlphaExcluded);
    }
    let l = iv.log_ratio();
    let upper = PI / l;
    let half = FRAC_PI_2 / l;
    let eps = 1e-12 * upper;
    let g = |beta: f64| beta_equation(alpha, l, beta);

    let (lo, hi, branch) = if alpha < 1.0 {
        // g(π/(2L)) = 1 > 0 and g(π/L) = -[2/(1-α)] π/L < 0.
        (half + eps, upper - eps, Branch::AboveHalfPi)
    } else {
        let no_root = || HardyError::NoRoot {
            alpha,
            log_ratio: l,
            existence_bound: existence_bound(l),
        };
        let (lo, hi) = scan_sign_change(&g, eps, half - eps, EXISTENCE_SCAN_CELLS).ok_or_else(no_root)?;
        (lo, hi, Branch::BelowHalfPi)
    };

    let mut r = safeguarded_secant(g, lo, hi, tol)?;
    // g = cos(βL) · (tan form); tighten so the tan form also meets `tol`.
    let c = (r.root * l).cos().abs();
    if c < 1.0 && r.value.abs() > tol * c && r.lo < r.hi {
        if let Ok(refined) = safeguarded_secant(g, r.lo, r.hi, tol * c) {
            let first = r.iterations;
            r = refined;
            r.iterations += first;
        }
    }
    // Newton steps inside the final bracket bring g down to rounding level,
    // which keeps boundary values of the extremal small even where x^p is large.
    let k = 2.0 / (1.0 - alpha);
    let dg = |b: f64| k * ((b * l).cos() - b * l * (b * l).sin()) + l * (b * l).cos();
    for _ in 0..3 {
        let next = r.root - r.value / dg(r.root);
        let gn = g(next);
        if !(next >= r.lo && next <= r.hi && gn.abs() < r.value.abs()) {
            break;
        }
        r.root = next;
        r.value = gn;
    }
    Ok(BetaRoot {
        beta: r.root,
        residual: r.value,
        bracket: (r.lo, r.hi),
        branch,
        iterations: r.iterations,
    })
}

/// First cell of a uniform scan of `[lo, hi]` on which `f` strictly changes
/// sign, or whose right end is an interior zero.
fn scan_sign_change<F: Fn(f64) -> f64>(f: &F, lo: f64, hi: f64, cells: usize) -> Option<(f64, f64)> {
    let step = (hi - lo) / cells as f64;
    let mut x0 = lo;
    let mut f0 = f(x0);
    for i in 1..=cells {
        let x1 = if i == cells { hi } else { lo + step * i as f64 };
        let f1 = f(x1);
        if f0 * f1 < 0.0 || (f1 == 0.0 && i < cells) {
            return Some((x0, x1));
        }
        x0 = x1;
        f0 = f1;
    }
    None
}

/// The sharp constants for one parameter point. Fields that were not
/// requested, or do not exist, are `None`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HardyConstants {
    /// `(1-α)²/4`.
    pub baseline: f64,
    /// `K = (1-α)²/4 + β²`.
    pub integral: Option<f64>,
    /// `M = (1-α)²/4 + (π/L)²`.
    pub differential: Option<f64>,
    pub beta: Option<BetaRoot>,
}

impl HardyConstants {
    /// `Some(K < M)` when both constants are present.
    pub fn integral_below_differential(&self) -> Option<bool> {
        Some(self.integral? < self.differential?)
    }
}

pub fn integral_constant(iv: &WeightedInterval, tol: f64) -> Result<HardyConstants> {
    let root = beta_root(iv, tol)?;
    Ok(HardyConstants {
        baseline: iv.baseline(),
        integral: Some(iv.baseline() + root.beta * root.beta),
        differential: None,
        beta: Some(root),
    })
}

pub fn differential_constant(iv: &WeightedInterval) -> HardyConstants {
    let w = PI / iv.log_ratio();
    HardyConstants {
        baseline: iv.baseline(),
        integral: None,
        differential: Some(iv.baseline() + w * w),
        beta: None,
    }
}

/// Both constants; `K` is absent (with the reason returned alongside) when
/// `α = 1` or no root exists.
pub fn hardy_constants(iv: &WeightedInterval, tol: f64) -> (HardyConstants, Option<HardyError>) {
    let m = differential_constant(iv);
    match integral_constant(iv, tol) {
        Ok(k) => (
            HardyConstants {
                differential: m.differential,
                ..k
            },
            None,
        ),
        Err(e) => (m, Some(e)),
    }
}
