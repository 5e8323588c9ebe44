//! Bracketed scalar root finding: secant steps safeguarded by bisection.

use crate::error::{HardyError, Result};

const MAX_ITER: usize = 400;

#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Bracketed {
    pub root: f64,
    pub value: f64,
    pub lo: f64,
    pub hi: f64,
    pub iterations: usize,
}

/// Finds a zero of `f` in `[lo, hi]`, where `f(lo)` and `f(hi)` differ in sign.
///
/// Terminates once `|f(root)| <= tol` and the bracket is no wider than `tol`.
/// Each step tries the secant through the two most recent iterates and falls
/// back to bisection when the secant point leaves the half of the bracket
/// adjacent to the current iterate, or when two consecutive steps failed to
/// halve the bracket.
pub(crate) fn safeguarded_secant<F>(f: F, mut lo: f64, mut hi: f64, tol: f64) -> Result<Bracketed>
where
    F: Fn(f64) -> f64,
{
    debug_assert!(lo < hi);
    let mut f_lo = f(lo);
    let mut f_hi = f(hi);
    if f_lo == 0.0 {
        return Ok(Bracketed {
            root: lo,
            value: 0.0,
            lo,
            hi: lo,
            iterations: 0,
        });
    }
    if f_hi == 0.0 {
        return Ok(Bracketed {
            root: hi,
            value: 0.0,
            lo: hi,
            hi,
            iterations: 0,
        });
    }
    if f_lo.signum() == f_hi.signum() {
        return Err(HardyError::SolverStalled {
            lo,
            hi,
            residual: f_lo.abs().min(f_hi.abs()),
        });
    }

    // (x, fx) is the latest iterate, (prev, f_prev) the one before it.
    let (mut x, mut fx, mut prev, mut f_prev) = if f_lo.abs() < f_hi.abs() {
        (lo, f_lo, hi, f_hi)
    } else {
        (hi, f_hi, lo, f_lo)
    };
    let mut slow_steps = 0usize;

    for iter in 1..=MAX_ITER {
        let width = hi - lo;
        if fx.abs() <= tol && width <= tol {
            return Ok(Bracketed {
                root: x,
                value: fx,
                lo,
                hi,
                iterations: iter - 1,
            });
        }
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            // Bracket is two adjacent floats.
            let (root, value) = if f_lo.abs() <= f_hi.abs() {
                (lo, f_lo)
            } else {
                (hi, f_hi)
            };
            if value.abs() <= tol {
                return Ok(Bracketed {
                    root,
                    value,
                    lo,
                    hi,
                    iterations: iter - 1,
                });
            }
            return Err(HardyError::SolverStalled {
                lo,
                hi,
                residual: value.abs(),
            });
        }

        let mut cand = if slow_steps >= 2 || fx == f_prev {
            mid
        } else {
            x - fx * (x - prev) / (fx - f_prev)
        };
        let (near, far) = if x <= mid { (x, mid) } else { (mid, x) };
        if !(cand > near && cand < far) && cand != mid {
            cand = mid;
        }
        // Minimum step so the bracket can shrink below `tol` around a converged iterate.
        let min_step = 0.5 * tol;
        if (cand - x).abs() < min_step {
            cand = if mid > x { x + min_step } else { x - min_step };
            cand = cand.clamp(lo, hi);
            if cand <= lo || cand >= hi {
                cand = mid;
            }
        }

        let fc = f(cand);
        if fc == 0.0 {
            return Ok(Bracketed {
                root: cand,
                value: 0.0,
                lo: cand,
                hi: cand,
                iterations: iter,
            });
        }
        if fc.signum() == f_lo.signum() {
            lo = cand;
            f_lo = fc;
        } else {
            hi = cand;
            f_hi = fc;
        }
        if hi - lo > 0.5 * width {
            slow_steps += 1;
        } else {
            slow_steps = 0;
        }
        prev = x;
        f_prev = fx;
        x = cand;
        fx = fc;
    }
    Err(HardyError::SolverStalled {
        lo,
        hi,
        residual: fx.abs(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_sqrt_two() {
        let r = safeguarded_secant(|x| x * x - 2.0, 0.0, 2.0, 1e-14).unwrap();
        assert!((r.root - 2f64.sqrt()).abs() < 1e-14);
        assert!(r.hi - r.lo <= 1e-14);
    }

    #[test]
    fn flat_function_falls_back_to_bisection() {
        // Secant steps crawl on x^9; bisection keeps the iteration count bounded.
        let r = safeguarded_secant(|x: f64| (x - 0.3).powi(9), -1.0, 2.0, 1e-12).unwrap();
        assert!((r.root - 0.3).abs() < 1e-1);
        assert!(r.iterations < MAX_ITER);
    }

    #[test]
    fn rejects_unbracketed() {
        assert!(safeguarded_secant(|x| x * x + 1.0, -1.0, 1.0, 1e-12).is_err());
    }

    #[test]
    fn unreachable_tolerance_stalls() {
        let err = safeguarded_secant(|x| x - 1.0 / 3.0 + 1e-3, 0.0, 1.0, 1e-30).unwrap_err();
        assert!(matches!(err, HardyError::SolverStalled { .. }));
    }
}
