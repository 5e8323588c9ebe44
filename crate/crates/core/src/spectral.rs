//! Finite-difference Sturm–Liouville oracle.
//!
//! Discretizes `-(p y')' + q y = λ w y` on a uniform grid in `x` with the
//! conservative three-point scheme, reduces the generalized pencil to a
//! symmetric tridiagonal matrix by diagonal scaling, and locates the lowest
//! eigenvalues by Sturm-sequence bisection. Nothing here uses the closed-form
//! constants, so agreement with them is an independent check.
//!
//! Two problems matter:
//!
//! * [`SlProblem::dirichlet`]: `p = x^α`, `w = x^(α-2)`, Dirichlet at both
//!   ends. Its lowest eigenvalue is the differential-form constant `M`.
//! * [`SlProblem::integral_form`]: the boundary value problem satisfied by
//!   the integral-form extremal on `[1, b/a]`,
//!   `-(x^(2-α)(x^α y)')' = λ y`, `y'(1) + α y(1) = 0`, `y(b/a) = 0`.
//!   Multiplying by `x^α` gives the self-adjoint form
//!   `-(x^(α+2) y')' - α x^α y = λ x^α y`. Its lowest eigenvalue is `K`.

use crate::constants::WeightedInterval;
use crate::error::{HardyError, Result};

/// Smallest grid (number of cells) accepted by [`assemble`].
pub const MIN_GRID: usize = 8;

const BISECTION_REL_WIDTH: f64 = 1e-13;
const INVERSE_ITERATION_STEPS: usize = 50;
const INVERSE_ITERATION_TOL: f64 = 1e-10;

/// Condition at the left end; the right end is always Dirichlet.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum LeftBoundary {
    Dirichlet,
    /// `y'(a) + σ y(a) = 0`.
    Robin(f64),
}

/// `coef · x^exponent`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerTerm {
    pub coef: f64,
    pub exponent: f64,
}

impl PowerTerm {
    fn at(&self, x: f64) -> f64 {
        self.coef * x.powf(self.exponent)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SlProblem {
    a: f64,
    b: f64,
    p_exponent: f64,
    w_exponent: f64,
    potential: Option<PowerTerm>,
    left: LeftBoundary,
}

impl SlProblem {
    /// `-(x^p_exp y')' = λ x^w_exp y` on `iv`'s endpoints.
    pub fn new(iv: &WeightedInterval, p_exponent: f64, w_exponent: f64, left: LeftBoundary) -> Self {
        Self {
            a: iv.a(),
            b: iv.b(),
            p_exponent,
            w_exponent,
            potential: None,
            left,
        }
    }

    pub fn with_potential(mut self, coef: f64, exponent: f64) -> Self {
        self.potential = Some(PowerTerm { coef, exponent });
        self
    }

    /// `-(x^α y')' = λ x^(α-2) y`, `y(a) = y(b) = 0`.
    pub fn dirichlet(iv: &WeightedInterval) -> Self {
        Self::new(iv, iv.alpha(), iv.alpha() - 2.0, LeftBoundary::Dirichlet)
    }

    /// The Robin–Dirichlet problem of the integral-form extremal, posed on
    /// the normalized interval `[1, b/a]`.
    pub fn integral_form(iv: &WeightedInterval) -> Self {
        let unit = iv.normalized();
        let alpha = unit.alpha();
        Self::new(&unit, alpha + 2.0, alpha, LeftBoundary::Robin(alpha)).with_potential(-alpha, alpha)
    }

    pub fn endpoints(&self) -> (f64, f64) {
        (self.a, self.b)
    }

    pub fn left(&self) -> LeftBoundary {
        self.left
    }

    fn p(&self, x: f64) -> f64 {
        x.powf(self.p_exponent)
    }

    fn w(&self, x: f64) -> f64 {
        x.powf(self.w_exponent)
    }

    fn q(&self, x: f64) -> f64 {
        self.potential.map_or(0.0, |t| t.at(x))
    }
}

/// Symmetric tridiagonal matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Tridiagonal {
    pub diag: Vec<f64>,
    pub off: Vec<f64>,
}

impl Tridiagonal {
    pub fn len(&self) -> usize {
        self.diag.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diag.is_empty()
    }

    /// Number of eigenvalues strictly below `x` (negative pivots of `T - x I`).
    pub fn count_below(&self, x: f64) -> usize {
        let tiny = f64::MIN_POSITIVE / f64::EPSILON;
        let mut count = 0;
        let mut prev = 1.0;
        for i in 0..self.diag.len() {
            let mut q = self.diag[i] - x;
            if i > 0 {
                q -= self.off[i - 1] * self.off[i - 1] / prev;
            }
            // A vanishing pivot is perturbed to a tiny negative one and counted.
            if q.abs() < tiny {
                q = -tiny;
            }
            if q < 0.0 {
                count += 1;
            }
            prev = q;
        }
        count
    }

    pub fn gershgorin(&self) -> (f64, f64) {
        let n = self.diag.len();
        (0..n).fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), i| {
            let r = if i > 0 { self.off[i - 1].abs() } else { 0.0 } + if i + 1 < n { self.off[i].abs() } else { 0.0 };
            (lo.min(self.diag[i] - r), hi.max(self.diag[i] + r))
        })
    }

    pub fn norm_inf(&self) -> f64 {
        let (lo, hi) = self.gershgorin();
        lo.abs().max(hi.abs())
    }

    /// Bracket `[lo, hi]` around the `k`-th smallest eigenvalue (0-based),
    /// with `count_below(lo) <= k < count_below(hi)`.
    pub fn bisect(&self, k: usize) -> (f64, f64) {
        let (mut lo, mut hi) = self.gershgorin();
        let pad = f64::EPSILON * self.norm_inf().max(1.0);
        lo -= pad;
        hi += pad;
        loop {
            let mid = 0.5 * (lo + hi);
            let width = hi - lo;
            if width <= BISECTION_REL_WIDTH * lo.abs().max(hi.abs()) || mid <= lo || mid >= hi {
                return (lo, hi);
            }
            if self.count_below(mid) > k {
                hi = mid;
            } else {
                lo = mid;
            }
        }
    }

    fn matvec(&self, v: &[f64]) -> Vec<f64> {
        let n = v.len();
        (0..n)
            .map(|i| {
                let mut s = self.diag[i] * v[i];
                if i > 0 {
                    s += self.off[i - 1] * v[i - 1];
                }
                if i + 1 < n {
                    s += self.off[i] * v[i + 1];
                }
                s
            })
            .collect()
    }

    /// Solves `(T - shift I) x = rhs` without pivoting; the caller keeps the
    /// shifted matrix positive definite.
    fn solve_shifted(&self, shift: f64, rhs: &[f64]) -> Vec<f64> {
        let n = rhs.len();
        let mut d: Vec<f64> = self.diag.iter().map(|&v| v - shift).collect();
        let mut y = rhs.to_vec();
        for i in 1..n {
            let m = self.off[i - 1] / d[i - 1];
            d[i] -= m * self.off[i - 1];
            y[i] -= m * y[i - 1];
        }
        y[n - 1] /= d[n - 1];
        for i in (0..n - 1).rev() {
            y[i] = (y[i] - self.off[i] * y[i + 1]) / d[i];
        }
        y
    }
}

/// Discrete pencil `S y = λ W y` with `W` diagonal.
#[derive(Debug, Clone, PartialEq)]
pub struct Pencil {
    /// Grid points carrying unknowns.
    pub nodes: Vec<f64>,
    pub stiffness: Tridiagonal,
    pub mass: Vec<f64>,
}

impl Pencil {
    /// `W^(-1/2) S W^(-1/2)`.
    pub fn scaled(&self) -> Tridiagonal {
        let s: Vec<f64> = self.mass.iter().map(|m| m.sqrt().recip()).collect();
        Tridiagonal {
            diag: self.stiffness.diag.iter().zip(&s).map(|(d, si)| d * si * si).collect(),
            off: self
                .stiffness
                .off
                .iter()
                .enumerate()
                .map(|(i, e)| e * s[i] * s[i + 1])
                .collect(),
        }
    }
}

/// Conservative three-point discretization on `n` uniform cells.
///
/// Interior rows: diagonal `(p_{i-1/2} + p_{i+1/2})/h² + q_i`, off-diagonal
/// `-p_{i+1/2}/h²`, mass `w_i`. A Robin left end keeps `x_0 = a` as an
/// unknown on a half cell: diagonal `p_{1/2}/h² - σ p(a)/h + q(a)/2`, mass
/// `w(a)/2`, which leaves the matrix symmetric.
pub fn assemble(problem: &SlProblem, n: usize) -> Result<Pencil> {
    if n < MIN_GRID {
        return Err(HardyError::InvalidGrid(format!(
            "need at least {MIN_GRID} cells, got {n}"
        )));
    }
    let (a, b) = (problem.a, problem.b);
    let h = (b - a) / n as f64;
    let node = |i: usize| if i == n { b } else { a + h * i as f64 };
    let flux = |i: usize| problem.p(a + h * (i as f64 + 0.5)) / (h * h);

    let first = match problem.left {
        LeftBoundary::Dirichlet => 1,
        LeftBoundary::Robin(_) => 0,
    };
    let nodes: Vec<f64> = (first..n).map(node).collect();
    let mut diag = Vec::with_capacity(nodes.len());
    let mut mass = Vec::with_capacity(nodes.len());
    for i in first..n {
        let x = node(i);
        if i == 0 {
            let sigma = match problem.left {
                LeftBoundary::Robin(s) => s,
                LeftBoundary::Dirichlet => unreachable!(),
            };
            diag.push(flux(0) - sigma * problem.p(a) / h + 0.5 * problem.q(a));
            mass.push(0.5 * problem.w(a));
        } else {
            diag.push(flux(i - 1) + flux(i) + problem.q(x));
            mass.push(problem.w(x));
        }
    }
    let off = (first..n - 1).map(|i| -flux(i)).collect();
    Ok(Pencil {
        nodes,
        stiffness: Tridiagonal { diag, off },
        mass,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct EigenResult {
    pub lambda: f64,
    /// Second eigenvalue, for the spectral gap.
    pub next: f64,
    pub grid_size: usize,
    /// Observed order from grids `n/4, n/2, n` when `n` is divisible by 4.
    pub order_estimate: Option<f64>,
    /// Whether the sign-normalized ground state is positive at every node.
    pub eigenvector_positive: bool,
    pub eigenvector: Vec<f64>,
    pub nodes: Vec<f64>,
}

impl EigenResult {
    pub fn gap(&self) -> f64 {
        self.next - self.lambda
    }
}

/// Lowest eigenvalue only.
pub fn lowest_eigenvalue_only(problem: &SlProblem, n: usize) -> Result<f64> {
    let t = assemble(problem, n)?.scaled();
    let (lo, hi) = t.bisect(0);
    Ok(0.5 * (lo + hi))
}

pub fn lowest_eigenvalue(problem: &SlProblem, n: usize) -> Result<EigenResult> {
    let pencil = assemble(problem, n)?;
    let t = pencil.scaled();
    let (lo, hi) = t.bisect(0);
    let lambda = 0.5 * (lo + hi);
    let next = {
        let (l1, h1) = t.bisect(1);
        0.5 * (l1 + h1)
    };

    // count_below(lo) == 0, so T - shift is positive definite.
    let shift = lo - 1e-12 * lo.abs().max(1.0);
    let norm = t.norm_inf();
    let m = t.len();
    let mut v = vec![1.0 / (m as f64).sqrt(); m];
    let mut residual = f64::INFINITY;
    let mut converged = false;
    for _ in 0..INVERSE_ITERATION_STEPS {
        let mut x = t.solve_shifted(shift, &v);
        let len = x.iter().map(|e| e * e).sum::<f64>().sqrt();
        x.iter_mut().for_each(|e| *e /= len);
        let tx = t.matvec(&x);
        let rho: f64 = x.iter().zip(&tx).map(|(a, b)| a * b).sum();
        residual = tx
            .iter()
            .zip(&x)
            .map(|(a, b)| (a - rho * b).powi(2))
            .sum::<f64>()
            .sqrt();
        v = x;
        if residual <= INVERSE_ITERATION_TOL * norm {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(HardyError::ConvergenceFailure {
            residual,
            steps: INVERSE_ITERATION_STEPS,
        });
    }
    if v.iter().sum::<f64>() < 0.0 {
        v.iter_mut().for_each(|e| *e = -*e);
    }
    // Back to the unknowns of the pencil: y = W^(-1/2) v.
    let eigenvector: Vec<f64> = v.iter().zip(&pencil.mass).map(|(e, m)| e / m.sqrt()).collect();
    let eigenvector_positive = eigenvector.iter().all(|&e| e > 0.0);

    let order_estimate = if n.is_multiple_of(4) && n / 4 >= MIN_GRID {
        let coarse = lowest_eigenvalue_only(problem, n / 4)?;
        let mid = lowest_eigenvalue_only(problem, n / 2)?;
        Some(((coarse - mid) / (mid - lambda)).abs().log2())
    } else {
        None
    };

    Ok(EigenResult {
        lambda,
        next,
        grid_size: n,
        order_estimate,
        eigenvector_positive,
        eigenvector,
        nodes: pencil.nodes,
    })
}

/// `(4 λ(2n) - λ(n)) / 3`.
pub fn richardson_limit(problem: &SlProblem, n: usize) -> Result<f64> {
    let coarse = lowest_eigenvalue_only(problem, n)?;
    let fine = lowest_eigenvalue_only(problem, 2 * n)?;
    Ok((4.0 * fine - coarse) / 3.0)
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceStudy {
    pub order: f64,
    pub eigenvalues: Vec<(usize, f64)>,
    pub reference: Option<f64>,
}

/// Least-squares slope of `log|λ_n - λ_ref|` against `log h`.
///
/// Without a reference value the slope is taken from consecutive differences
/// `λ_k - λ_(k+1)`, which is exact for geometric grid sequences.
pub fn convergence_study(problem: &SlProblem, grids: &[usize], reference: Option<f64>) -> Result<ConvergenceStudy> {
    if grids.len() < 3 {
        return Err(HardyError::InvalidGrid(format!(
            "need at least 3 grids, got {}",
            grids.len()
        )));
    }
    if grids.windows(2).any(|w| w[1] <= w[0]) {
        return Err(HardyError::InvalidGrid("grids must be strictly increasing".into()));
    }
    if grids[0] < MIN_GRID {
        return Err(HardyError::InvalidGrid(format!(
            "need at least {MIN_GRID} cells, got {}",
            grids[0]
        )));
    }
    let (a, b) = problem.endpoints();
    let eigenvalues: Vec<(usize, f64)> = grids
        .iter()
        .map(|&n| lowest_eigenvalue_only(problem, n).map(|l| (n, l)))
        .collect::<Result<_>>()?;
    let step = |n: usize| (b - a) / n as f64;
    let points: Vec<(f64, f64)> = match reference {
        Some(r) => eigenvalues
            .iter()
            .map(|&(n, l)| (step(n).ln(), (l - r).abs().ln()))
            .collect(),
        None => eigenvalues
            .windows(2)
            .map(|w| (step(w[0].0).ln(), (w[0].1 - w[1].1).abs().ln()))
            .collect(),
    };
    Ok(ConvergenceStudy {
        order: least_squares_slope(&points),
        eigenvalues,
        reference,
    })
}

fn least_squares_slope(points: &[(f64, f64)]) -> f64 {
    let n = points.len() as f64;
    let mx = points.iter().map(|p| p.0).sum::<f64>() / n;
    let my = points.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = points.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = points.iter().map(|p| (p.0 - mx) * (p.0 - mx)).sum();
    sxy / sxx
}
