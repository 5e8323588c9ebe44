//! Weighted integrals on `[a, b]` and the two Hardy functionals
//!
//! ```text
//! Q[h] = ∫ x^α h² / ∫ x^(α-2) (∫_a^x |h|)²        (integral form, Q >= K)
//! R[f] = ∫ x^α f'² / ∫ x^(α-2) f²                 (differential form, R >= M)
//! ```
//!
//! whose infima are the sharp constants. The inner integral of `Q` starts at
//! the left endpoint `a`.

mod adaptive;
mod functions;
mod suite;

pub use adaptive::{integrate, QuadratureResult, Tolerance, MAX_PANELS};
pub use functions::{
    random_admissible, random_polynomial, sample_seed, Boundary, PolyKind, Polynomial, RealFn, TestFunction,
};
pub use suite::{differential_inequality_suite, integral_inequality_suite, InequalityReport, SUITE_MAX_DEGREE};

pub(crate) use adaptive::{integrate_with, Cumulative};

use crate::constants::WeightedInterval;
use crate::error::{check_tolerance, HardyError, Result};

/// Absolute tolerance for standalone component integrals.
pub const DEFAULT_COMPONENT_TOL: f64 = 1e-10;

/// Which square enters a weighted integral.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Square {
    Value,
    Derivative,
}

/// `∫_a^b x^power · g(x)²` with `g = f` or `g = f'`, to absolute tolerance `tol`.
pub fn weighted_integral(
    f: &TestFunction,
    power: f64,
    iv: &WeightedInterval,
    square: Square,
    tol: f64,
) -> Result<QuadratureResult> {
    check_tolerance(tol)?;
    weighted_square(f, power, iv, square, Tolerance::absolute(tol))
}

fn weighted_square(
    f: &TestFunction,
    power: f64,
    iv: &WeightedInterval,
    square: Square,
    tol: Tolerance,
) -> Result<QuadratureResult> {
    match square {
        Square::Value => integrate_with(
            &|x: f64| {
                let v = f.value(x);
                x.powf(power) * v * v
            },
            iv.a(),
            iv.b(),
            tol,
        ),
        Square::Derivative => {
            if !f.has_derivative() {
                return Err(HardyError::MissingDerivative(f.label().to_owned()));
            }
            integrate_with(
                &|x: f64| {
                    let d = f.derivative(x).expect("checked above");
                    x.powf(power) * d * d
                },
                iv.a(),
                iv.b(),
                tol,
            )
        }
    }
}

/// `∫_a^x |h(t)| dt`.
pub fn cumulative_abs(h: &TestFunction, iv: &WeightedInterval, x: f64, tol: f64) -> Result<f64> {
    check_tolerance(tol)?;
    iv.check_point(x)?;
    if x == iv.a() {
        return Ok(0.0);
    }
    let abs_h = |t: f64| h.value(t).abs();
    Ok(integrate_with(&abs_h, iv.a(), x, Tolerance::absolute(tol))?.value)
}

/// Value of a Rayleigh-type ratio together with its two components.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FunctionalValue {
    pub value: f64,
    pub numerator: f64,
    pub denominator: f64,
}

fn ratio(numerator: f64, denominator: f64) -> Result<FunctionalValue> {
    if !(denominator > 0.0 && denominator.is_finite()) {
        return Err(HardyError::DegenerateInput(
            "denominator vanishes; the test function is numerically zero",
        ));
    }
    Ok(FunctionalValue {
        value: numerator / denominator,
        numerator,
        denominator,
    })
}

/// `∫_a^b x^(α-2) (∫_a^x |h|)² dx` via a tabulated running integral of `|h|`.
pub fn integral_form_denominator(h: &TestFunction, iv: &WeightedInterval, tol: Tolerance) -> Result<f64> {
    let abs_h = |t: f64| h.value(t).abs();
    let running = Cumulative::new(&abs_h, iv.a(), iv.b(), tol)?;
    let w = iv.alpha() - 2.0;
    let outer = |x: f64| {
        let c = running.at(x);
        x.powf(w) * c * c
    };
    Ok(integrate_with(&outer, iv.a(), iv.b(), tol)?.value)
}

/// The same denominator after interchanging the order of integration:
///
/// ```text
/// ∫∫ |h(s)||h(t)| W(max(s,t)) ds dt = 2 ∫_a^b |h(t)| W(t) ∫_a^t |h(s)| ds dt,
/// W(t) = ∫_t^b x^(α-2) dx,
/// ```
///
/// with the inner integral recomputed adaptively at every outer node. Costs
/// O(n²) evaluations; meant as an independent cross-check.
pub fn order_swapped_denominator(h: &TestFunction, iv: &WeightedInterval, tol: Tolerance) -> Result<f64> {
    let (a, b) = (iv.a(), iv.b());
    let e = iv.alpha() - 1.0;
    let tail_weight = |t: f64| {
        if e == 0.0 {
            (b / t).ln()
        } else {
            (b.powf(e) - t.powf(e)) / e
        }
    };
    let abs_h = |t: f64| h.value(t).abs();
    let failure = std::cell::Cell::new(None);
    let outer = |t: f64| {
        let inner = match integrate_with(&abs_h, a, t, tol) {
            Ok(r) => r.value,
            Err(err) => {
                failure.set(Some(err));
                0.0
            }
        };
        2.0 * abs_h(t) * tail_weight(t) * inner
    };
    let value = integrate_with(&outer, a, b, tol)?.value;
    match failure.into_inner() {
        Some(err) => Err(err),
        None => Ok(value),
    }
}

/// `Q[h]`, with every component integral held to relative tolerance `tol`.
pub fn integral_form_functional(h: &TestFunction, iv: &WeightedInterval, tol: f64) -> Result<FunctionalValue> {
    check_tolerance(tol)?;
    let rel = Tolerance::relative(tol);
    let numerator = weighted_square(h, iv.alpha(), iv, Square::Value, rel)?.value;
    let denominator = integral_form_denominator(h, iv, rel)?;
    ratio(numerator, denominator)
}

/// `R[f]` for `f` vanishing at both ends, components to relative tolerance `tol`.
pub fn differential_form_functional(f: &TestFunction, iv: &WeightedInterval, tol: f64) -> Result<FunctionalValue> {
    check_tolerance(tol)?;
    if f.boundary() != Boundary::Vanishing {
        return Err(HardyError::NotVanishing(f.label().to_owned()));
    }
    if !f.has_derivative() {
        return Err(HardyError::MissingDerivative(f.label().to_owned()));
    }
    let rel = Tolerance::relative(tol);
    let numerator = weighted_square(f, iv.alpha(), iv, Square::Derivative, rel)?.value;
    let denominator = weighted_square(f, iv.alpha() - 2.0, iv, Square::Value, rel)?.value;
    ratio(numerator, denominator)
}
