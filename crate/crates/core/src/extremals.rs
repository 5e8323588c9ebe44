//! Closed-form solutions and extremal functions, and numerical checks of the
//! claims made about them.
//!
//! Every family has the shape
//!
//! ```text
//! scale · (x/s)^p · (A cos(ω ln(x/s)) + B sin(ω ln(x/s)))
//! ```
//!
//! | family          | s  | p             | ω     | A            | B |
//! |-----------------|----|---------------|-------|--------------|---|
//! | `y1`            | 1  | -(α+1)/2      | C     | 1            | 0 |
//! | `y2`            | 1  | -(α+1)/2      | C     | 0            | 1 |
//! | `y0`            | 1  | -(α+1)/2      | C₀    | 2C₀/(1-α)    | 1 |
//! | `h-integral`    | a  | -(α+1)/2      | β     | 2β/(1-α)     | 1 |
//! | `f-differential`| a  | (1-α)/2       | π/L   | 0            | 1 |
//! | `f-shell-radial`| r1 | (2-α-n)/2     | π/L   | 0            | 1 |
//!
//! The last two carry `scale = s^p`, so they equal `x^p sin(ω ln(x/s))`.
//! `y1`, `y2`, `y0` live on the unit-normalized interval `[1, b/a]`.
//!
//! `y1`, `y2`, `y0` and `h-integral` solve `-(x^(2-α) (x^α y)')' = λ y`
//! with `λ = (1-α)²/4 + ω²`; the two sine families solve
//! `-x^(2-α) (x^α f')' = λ f`.

use crate::constants::{beta_root, WeightedInterval};
use crate::error::{HardyError, Result};
use crate::quadrature::{integrate_with, Boundary, Cumulative, TestFunction, Tolerance};
use crate::shells::{radial_reduction, ShellDomain};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Y1,
    Y2,
    Y0,
    HIntegral,
    FDifferential,
    FShellRadial,
}

impl Family {
    pub fn as_str(&self) -> &'static str {
        match self {
            Family::Y1 => "y1",
            Family::Y2 => "y2",
            Family::Y0 => "y0",
            Family::HIntegral => "h-integral",
            Family::FDifferential => "f-differential",
            Family::FShellRadial => "f-shell-radial",
        }
    }

    /// Whether the family solves the integral-form operator
    /// `-(x^(2-α)(x^α y)')'` (as opposed to `-x^(2-α)(x^α y')'`).
    fn solves_integral_operator(&self) -> bool {
        matches!(self, Family::Y1 | Family::Y2 | Family::Y0 | Family::HIntegral)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClosedFormFunction {
    family: Family,
    domain: WeightedInterval,
    scale: f64,
    shift: f64,
    power: f64,
    frequency: f64,
    cos_coef: f64,
    sin_coef: f64,
}

impl ClosedFormFunction {
    /// `y1` or `y2` with frequency `c` on `[1, b/a]`.
    pub fn ode_solution(family: Family, c: f64, iv: &WeightedInterval) -> Result<Self> {
        let (cos_coef, sin_coef) = match family {
            Family::Y1 => (1.0, 0.0),
            Family::Y2 => (0.0, 1.0),
            _ => return Err(HardyError::DegenerateInput("ode_solution takes the y1 or y2 family")),
        };
        let domain = iv.normalized();
        Ok(Self {
            family,
            domain,
            scale: 1.0,
            shift: 1.0,
            power: -(domain.alpha() + 1.0) / 2.0,
            frequency: c,
            cos_coef,
            sin_coef,
        })
    }

    /// `y0` on `[1, b/a]` with `C₀ = β` solved to `tol`.
    pub fn y0(iv: &WeightedInterval, tol: f64) -> Result<Self> {
        let domain = iv.normalized();
        let c0 = beta_root(&domain, tol)?.beta;
        Self::y0_with_frequency(&domain, c0)
    }

    /// `y0` with a caller-chosen frequency, e.g. a perturbed root.
    pub fn y0_with_frequency(iv: &WeightedInterval, c0: f64) -> Result<Self> {
        let domain = iv.normalized();
        if domain.alpha() == 1.0 {
            return Err(HardyError::AlphaExcluded);
        }
        Ok(Self {
            family: Family::Y0,
            domain,
            scale: 1.0,
            shift: 1.0,
            power: -(domain.alpha() + 1.0) / 2.0,
            frequency: c0,
            cos_coef: 2.0 * c0 / (1.0 - domain.alpha()),
            sin_coef: 1.0,
        })
    }

    /// Extremal of the integral form on `[a, b]`.
    pub fn h_integral(iv: &WeightedInterval, tol: f64) -> Result<Self> {
        let beta = beta_root(iv, tol)?.beta;
        Ok(Self {
            family: Family::HIntegral,
            domain: *iv,
            scale: 1.0,
            shift: iv.a(),
            power: -(iv.alpha() + 1.0) / 2.0,
            frequency: beta,
            cos_coef: 2.0 * beta / (1.0 - iv.alpha()),
            sin_coef: 1.0,
        })
    }

    /// Extremal of the differential form on `[a, b]`.
    pub fn f_differential(iv: &WeightedInterval) -> Self {
        let power = (1.0 - iv.alpha()) / 2.0;
        Self {
            family: Family::FDifferential,
            domain: *iv,
            scale: iv.a().powf(power),
            shift: iv.a(),
            power,
            frequency: std::f64::consts::PI / iv.log_ratio(),
            cos_coef: 0.0,
            sin_coef: 1.0,
        }
    }

    /// Radial extremal of the shell inequality on `[r1, r2]`.
    pub fn f_shell_radial(sd: &ShellDomain) -> Self {
        let power = (2.0 - sd.alpha() - sd.n() as f64) / 2.0;
        Self {
            family: Family::FShellRadial,
            domain: radial_reduction(sd),
            scale: sd.r1().powf(power),
            shift: sd.r1(),
            power,
            frequency: std::f64::consts::PI / (sd.r2() / sd.r1()).ln(),
            cos_coef: 0.0,
            sin_coef: 1.0,
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// Interval the function is defined on; for the shell family its `alpha`
    /// is the reduced exponent `α + n - 1`.
    pub fn domain(&self) -> &WeightedInterval {
        &self.domain
    }

    pub fn frequency(&self) -> f64 {
        self.frequency
    }

    /// The eigenvalue `(1-α)²/4 + ω²` attached to the family's ODE.
    pub fn eigenvalue(&self) -> f64 {
        let q = if self.family.solves_integral_operator() {
            self.power + 1.0
        } else {
            self.power
        };
        // For the integral operator (1-α)/2 = p + 1; for τ_α it is p itself.
        q * q + self.frequency * self.frequency
    }

    pub fn eval(&self, x: f64) -> Result<f64> {
        self.domain.check_point(x)?;
        Ok(self.value_at(x))
    }

    pub fn derivative(&self, x: f64) -> Result<f64> {
        self.domain.check_point(x)?;
        Ok(self.derivative_at(x))
    }

    /// Evaluation without the domain check; the formula is analytic on `x > 0`.
    pub fn value_at(&self, x: f64) -> f64 {
        let t = (x / self.shift).ln();
        let (s, c) = (self.frequency * t).sin_cos();
        self.scale * (self.power * t).exp() * (self.cos_coef * c + self.sin_coef * s)
    }

    pub fn derivative_at(&self, x: f64) -> f64 {
        let t = (x / self.shift).ln();
        let (s, c) = (self.frequency * t).sin_cos();
        let (p, w, a, b) = (self.power, self.frequency, self.cos_coef, self.sin_coef);
        self.scale * (p * t).exp() / x * ((p * a + w * b) * c + (p * b - w * a) * s)
    }

    /// The inner flux of the family's operator, formed analytically:
    /// `x^(2-α)(x^α y)' = x² y' + α x y` or `x^α y'`.
    fn flux(&self, x: f64) -> f64 {
        let alpha = self.domain.alpha();
        if self.family.solves_integral_operator() {
            x * x * self.derivative_at(x) + alpha * x * self.value_at(x)
        } else {
            x.powf(alpha) * self.derivative_at(x)
        }
    }

    /// Applies the family's operator at `x` with the outer derivative taken
    /// by a 4th-order central difference of the flux.
    fn apply_operator(&self, x: f64) -> f64 {
        let (a, b) = (self.domain.a(), self.domain.b());
        let h = (1e-4 * (b - a)).min(0.5 * (x - a)).min(0.5 * (b - x));
        let du = (-self.flux(x + 2.0 * h) + 8.0 * self.flux(x + h) - 8.0 * self.flux(x - h) + self.flux(x - 2.0 * h))
            / (12.0 * h);
        if self.family.solves_integral_operator() {
            -du
        } else {
            -x.powf(2.0 - self.domain.alpha()) * du
        }
    }

    pub fn to_test_function(&self) -> TestFunction {
        let f = *self;
        let boundary = match self.family {
            Family::FDifferential | Family::FShellRadial => Boundary::Vanishing,
            _ => Boundary::Free,
        };
        TestFunction::new(self.family.as_str(), boundary, move |x| f.value_at(x))
            .with_derivative(move |x| f.derivative_at(x))
    }
}

/// `y1(x)` or `y2(x)` with frequency `c` on `[1, b/a]`.
pub fn eval_ode_solution(family: Family, c: f64, iv: &WeightedInterval, x: f64) -> Result<f64> {
    ClosedFormFunction::ode_solution(family, c, iv)?.eval(x)
}

/// `y0`, `h-integral` or `f-differential` at `x`.
pub fn eval_extremal(family: Family, iv: &WeightedInterval, x: f64, tol: f64) -> Result<f64> {
    let f = match family {
        Family::Y0 => ClosedFormFunction::y0(iv, tol)?,
        Family::HIntegral => ClosedFormFunction::h_integral(iv, tol)?,
        Family::FDifferential => ClosedFormFunction::f_differential(iv),
        _ => {
            return Err(HardyError::DegenerateInput(
                "eval_extremal takes y0, h-integral or f-differential",
            ))
        }
    };
    f.eval(x)
}

/// `n` points uniform in `ln x` on `[lo, hi]`, endpoints included.
pub fn log_uniform_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    match n {
        0 => vec![],
        1 => vec![lo],
        _ => {
            let (l0, l1) = (lo.ln(), hi.ln());
            (0..n)
                .map(|i| match i {
                    0 => lo,
                    i if i == n - 1 => hi,
                    i => (l0 + (l1 - l0) * i as f64 / (n - 1) as f64).exp(),
                })
                .collect()
        }
    }
}

/// `n` points uniform in `ln x` strictly inside `(lo, hi)`.
pub fn log_uniform_interior(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    let mut g = log_uniform_grid(lo, hi, n + 2);
    g.pop();
    g.remove(0);
    g
}

/// `max |L f - λ f|` over `grid`, with `L` the family's operator.
pub fn ode_residual(f: &ClosedFormFunction, lambda: f64, grid: &[f64]) -> Result<f64> {
    let (a, b) = (f.domain().a(), f.domain().b());
    grid.iter().try_fold(0.0f64, |acc, &x| {
        if !(x > a && x < b) {
            return Err(HardyError::DomainError { x, lo: a, hi: b });
        }
        Ok(acc.max((f.apply_operator(x) - lambda * f.value_at(x)).abs()))
    })
}

/// `(|y0'(1) + α y0(1)|, |y0(b)|)` on the normalized interval.
pub fn boundary_residuals(iv: &WeightedInterval, tol: f64) -> Result<(f64, f64)> {
    boundary_residuals_of(&ClosedFormFunction::y0(iv, tol)?)
}

pub fn boundary_residuals_of(y0: &ClosedFormFunction) -> Result<(f64, f64)> {
    let d = y0.domain();
    let robin = (y0.derivative(1.0)? + d.alpha() * y0.eval(1.0)?).abs();
    let dirichlet = y0.eval(d.b())?.abs();
    Ok((robin, dirichlet))
}

/// `min |y0|` over `grid_size` log-uniform points of `[1, b - δ]`,
/// `δ = 10⁻³ (b - 1)`.
pub fn nonvanishing_check(iv: &WeightedInterval, grid_size: usize, tol: f64) -> Result<f64> {
    if grid_size < 2 {
        return Err(HardyError::InvalidGrid(format!(
            "need at least 2 points, got {grid_size}"
        )));
    }
    let y0 = ClosedFormFunction::y0(iv, tol)?;
    let b = y0.domain().b();
    let right = b - 1e-3 * (b - 1.0);
    Ok(log_uniform_grid(1.0, right, grid_size)
        .into_iter()
        .map(|x| y0.value_at(x).abs())
        .fold(f64::INFINITY, f64::min))
}

/// `y1 y2' - y2 y1'` at `x`; equals `C x^(-(α+2))`.
pub fn wronskian(c: f64, iv: &WeightedInterval, x: f64) -> Result<f64> {
    let y1 = ClosedFormFunction::ode_solution(Family::Y1, c, iv)?;
    let y2 = ClosedFormFunction::ode_solution(Family::Y2, c, iv)?;
    Ok(y1.eval(x)? * y2.derivative(x)? - y2.eval(x)? * y1.derivative(x)?)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IdentityCheck {
    pub x: f64,
    pub lhs: f64,
    pub rhs: f64,
    pub error: f64,
}

fn check_points(iv: &WeightedInterval, points: &[f64]) -> Result<()> {
    points.iter().try_for_each(|&x| iv.check_point(x))
}

/// `∫_x^b s^(α-2) ∫_1^s y0(t) dt ds` against `x^α y0(x) / L₀` at each point,
/// on the normalized interval. Component quadratures run at `tol / 100`.
pub fn tail_integral_identity(iv: &WeightedInterval, points: &[f64], tol: f64) -> Result<Vec<IdentityCheck>> {
    crate::error::check_tolerance(tol)?;
    let y0 = ClosedFormFunction::y0(iv, tol.min(1e-12))?;
    let d = *y0.domain();
    check_points(&d, points)?;
    let l0 = y0.eigenvalue();
    let q = Tolerance::absolute(1e-2 * tol);
    let f = |t: f64| y0.value_at(t);
    let running = Cumulative::new(&f, 1.0, d.b(), q)?;
    let w = d.alpha() - 2.0;
    let outer = |s: f64| s.powf(w) * running.at(s);
    points
        .iter()
        .map(|&x| {
            let lhs = integrate_with(&outer, x, d.b(), q)?.value;
            let rhs = x.powf(d.alpha()) * y0.value_at(x) / l0;
            Ok(IdentityCheck {
                x,
                lhs,
                rhs,
                error: (lhs - rhs).abs(),
            })
        })
        .collect()
}

/// The optimal weight `G(t) = |y0(t)|⁻¹ ∫_t^b x^(α-2) ∫_1^x |y0|` against
/// `t^α / L₀` at interior points of the normalized interval.
pub fn weight_identity(iv: &WeightedInterval, points: &[f64], tol: f64) -> Result<Vec<IdentityCheck>> {
    crate::error::check_tolerance(tol)?;
    let y0 = ClosedFormFunction::y0(iv, tol.min(1e-12))?;
    let d = *y0.domain();
    check_points(&d, points)?;
    let l0 = y0.eigenvalue();
    let q = Tolerance::absolute(1e-2 * tol);
    let abs_y0 = |t: f64| y0.value_at(t).abs();
    let running = Cumulative::new(&abs_y0, 1.0, d.b(), q)?;
    let w = d.alpha() - 2.0;
    let outer = |s: f64| s.powf(w) * running.at(s);
    points
        .iter()
        .map(|&t| {
            let g = integrate_with(&outer, t, d.b(), q)?.value / abs_y0(t);
            let rhs = t.powf(d.alpha()) / l0;
            Ok(IdentityCheck {
                x: t,
                lhs: g,
                rhs,
                error: (g - rhs).abs(),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::integral_constant;
    use std::f64::consts::{E, PI};

    // Frozen from an independent 30-digit bisection (see constants tests).
    const BETA_ALPHA0_L1: f64 = 1.836_597_203_152_125_7;

    fn unit(alpha: f64, b: f64) -> WeightedInterval {
        WeightedInterval::unit(alpha, b).unwrap()
    }

    #[test]
    fn ode_solutions_at_one_and_e() {
        for alpha in [-1.0, 0.0, 2.5] {
            let iv = unit(alpha, 3.0);
            assert_eq!(eval_ode_solution(Family::Y1, 0.7, &iv, 1.0).unwrap(), 1.0);
            assert_eq!(eval_ode_solution(Family::Y2, 0.7, &iv, 1.0).unwrap(), 0.0);
            let v = eval_ode_solution(Family::Y1, PI, &iv, E).unwrap();
            let expect = -(-(alpha + 1.0) / 2.0f64).exp();
            assert!((v - expect).abs() < 1e-15, "{v} {expect}");
        }
        assert!(matches!(
            eval_ode_solution(Family::Y1, 1.0, &unit(0.0, 3.0), 0.5),
            Err(HardyError::DomainError { .. })
        ));
    }

    #[test]
    fn f_differential_values() {
        let iv = unit(0.0, E);
        assert_eq!(eval_extremal(Family::FDifferential, &iv, 1.0, 1e-12).unwrap(), 0.0);
        assert!(eval_extremal(Family::FDifferential, &iv, E, 1e-12).unwrap().abs() < 1e-15);
        for (alpha, a, b) in [(0.0, 1.0, E), (5.0, 0.5, 4.0), (-2.0, 2.0, 9.0)] {
            let iv = WeightedInterval::new(alpha, a, b).unwrap();
            let x = (a * b).sqrt();
            let v = eval_extremal(Family::FDifferential, &iv, x, 1e-12).unwrap();
            let expect = (a * b).powf((1.0 - alpha) / 4.0);
            assert!((v - expect).abs() <= 1e-14 * expect);
        }
    }

    #[test]
    fn h_integral_endpoints() {
        let iv = unit(0.0, E);
        let h0 = eval_extremal(Family::HIntegral, &iv, 1.0, 1e-12).unwrap();
        assert!((h0 - 2.0 * BETA_ALPHA0_L1).abs() < 1e-11);
        assert!(eval_extremal(Family::HIntegral, &iv, E, 1e-12).unwrap().abs() < 1e-12);
        assert_eq!(
            eval_extremal(Family::HIntegral, &unit(1.0, E), 1.5, 1e-12).unwrap_err(),
            HardyError::AlphaExcluded
        );
        assert!(matches!(
            eval_extremal(Family::HIntegral, &unit(3.0, E), 1.5, 1e-12),
            Err(HardyError::NoRoot { .. })
        ));
    }

    #[test]
    fn y0_is_combination_of_y1_y2() {
        for alpha in [-3.0, 0.0, 0.9, 1.5] {
            let iv = unit(alpha, 4.0);
            let y0 = ClosedFormFunction::y0(&iv, 1e-12).unwrap();
            let c0 = y0.frequency();
            let y1 = ClosedFormFunction::ode_solution(Family::Y1, c0, &iv).unwrap();
            let y2 = ClosedFormFunction::ode_solution(Family::Y2, c0, &iv).unwrap();
            for x in log_uniform_grid(1.0, 4.0, 50) {
                let combo = 2.0 * c0 / (1.0 - alpha) * y1.value_at(x) + y2.value_at(x);
                assert!((y0.value_at(x) - combo).abs() <= 1e-14 * combo.abs().max(1e-300) + 1e-15);
            }
        }
    }

    #[test]
    fn h_integral_is_scaled_y0() {
        for (alpha, a, b) in [(0.0, 2.0, 2.0 * E), (-1.0, 0.5, 7.0), (1.5, 3.0, 12.0)] {
            let iv = WeightedInterval::new(alpha, a, b).unwrap();
            let h = ClosedFormFunction::h_integral(&iv, 1e-12).unwrap();
            let y0 = ClosedFormFunction::y0(&iv, 1e-12).unwrap();
            for x in log_uniform_grid(a, b, 40) {
                let (hv, yv) = (h.value_at(x), y0.value_at(x / a));
                assert!((hv - yv).abs() <= 1e-14 * hv.abs() + 1e-15, "{x}: {hv} {yv}");
            }
        }
    }

    #[test]
    fn derivatives_are_second_order_consistent() {
        // A short log-length keeps the frequencies high enough that truncation,
        // not rounding, dominates the difference quotient at h = 1e-5.
        let iv = WeightedInterval::new(0.5, 1.5, 2.5).unwrap();
        let sd = ShellDomain::new(3, 0.0, 1.5, 2.5).unwrap();
        let funcs = [
            ClosedFormFunction::ode_solution(Family::Y1, 1.3, &iv).unwrap(),
            ClosedFormFunction::ode_solution(Family::Y2, 1.3, &iv).unwrap(),
            ClosedFormFunction::y0(&iv, 1e-12).unwrap(),
            ClosedFormFunction::h_integral(&iv, 1e-12).unwrap(),
            ClosedFormFunction::f_differential(&iv),
            ClosedFormFunction::f_shell_radial(&sd),
        ];
        for f in funcs {
            let d = f.domain();
            let x = (d.a() * d.b()).sqrt();
            let exact = f.derivative_at(x);
            let err = |h: f64| ((f.value_at(x + h) - f.value_at(x - h)) / (2.0 * h) - exact).abs();
            let (e4, e5) = (err(1e-4), err(1e-5));
            assert!(
                e4 <= 1e-6 * exact.abs().max(1.0) * f.frequency().powi(3),
                "{:?}",
                f.family()
            );
            // Slope over the decade h = 1e-4 → 1e-5 (two decades of error).
            let slope = (e4 / e5).log10();
            assert!((slope - 2.0).abs() < 0.2, "{:?}: slope {slope}", f.family());
        }
    }

    #[test]
    fn ode_residuals_small_and_negative_control() {
        for alpha in [-2.0, 0.0, 2.0] {
            let iv = unit(alpha, E);
            let grid = log_uniform_interior(1.0, E, 100);
            let c = 1.7;
            let lambda = 0.25 * (1.0 - alpha) * (1.0 - alpha) + c * c;
            for fam in [Family::Y1, Family::Y2] {
                let y = ClosedFormFunction::ode_solution(fam, c, &iv).unwrap();
                assert!(ode_residual(&y, lambda, &grid).unwrap() <= 1e-6);
            }
            let y1 = ClosedFormFunction::ode_solution(Family::Y1, c, &iv).unwrap();
            let off = ode_residual(&y1, lambda + 1.0, &grid).unwrap();
            let max_y1 = grid.iter().map(|&x| y1.value_at(x).abs()).fold(0.0, f64::max);
            assert!((off - max_y1).abs() < 1e-6);
            assert!(off > 1e-3);

            let y0 = ClosedFormFunction::y0(&iv, 1e-12).unwrap();
            assert!(ode_residual(&y0, y0.eigenvalue(), &grid).unwrap() <= 1e-6);
            let f = ClosedFormFunction::f_differential(&iv);
            assert!(ode_residual(&f, f.eigenvalue(), &grid).unwrap() <= 1e-6);
        }
    }

    #[test]
    fn boundary_conditions_hold() {
        for alpha in [0.0, 2.0] {
            let (robin, dirichlet) = boundary_residuals(&unit(alpha, E), 1e-12).unwrap();
            assert!(robin <= 1e-12 && dirichlet <= 1e-12, "{alpha}: {robin} {dirichlet}");
        }
        let y0 = ClosedFormFunction::y0_with_frequency(&unit(0.0, E), BETA_ALPHA0_L1 + 1e-3).unwrap();
        let (_, dirichlet) = boundary_residuals_of(&y0).unwrap();
        assert!(dirichlet > 1e-4);
    }

    #[test]
    fn y0_does_not_vanish() {
        for alpha in [0.0, 2.0] {
            assert!(nonvanishing_check(&unit(alpha, E), 10_000, 1e-12).unwrap() > 0.0);
        }
        let iv = unit(0.0, E);
        let y0 = ClosedFormFunction::y0(&iv, 1e-12).unwrap();
        let right = E - 1e-3 * (E - 1.0);
        let two = nonvanishing_check(&iv, 2, 1e-12).unwrap();
        assert_eq!(two, (2.0 * y0.frequency()).min(y0.value_at(right).abs()));
        assert!(matches!(
            nonvanishing_check(&iv, 1, 1e-12),
            Err(HardyError::InvalidGrid(_))
        ));
    }

    #[test]
    fn wronskian_never_vanishes() {
        let iv = unit(0.3, 5.0);
        for x in log_uniform_grid(1.0, 5.0, 1000) {
            let w = wronskian(1.1, &iv, x).unwrap();
            assert!((w - 1.1 * x.powf(-2.3)).abs() < 1e-13);
        }
    }

    #[test]
    fn tail_identity_at_ends() {
        let iv = unit(0.0, E);
        let k = integral_constant(&iv, 1e-12).unwrap().integral.unwrap();
        let checks = tail_integral_identity(&iv, &[1.0, E], 1e-10).unwrap();
        assert!((checks[0].rhs - 2.0 * BETA_ALPHA0_L1 / k).abs() < 1e-12);
        assert!((checks[0].rhs - 1.013_829_391_360_293_6).abs() < 1e-11);
        assert!(checks[0].error <= 1e-10);
        assert_eq!(checks[1].lhs, 0.0);
        assert!(checks[1].rhs.abs() < 1e-12);
    }

    #[test]
    fn weight_identity_interior() {
        let iv = unit(-1.0, 10.0);
        let pts = log_uniform_interior(1.0, 10.0, 16);
        for c in weight_identity(&iv, &pts, 1e-10).unwrap() {
            assert!(c.error <= 1e-8, "{c:?}");
        }
    }
}
