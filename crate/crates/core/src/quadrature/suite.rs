//! Seeded batches of admissible polynomials checked against a lower bound.

use rayon::prelude::*;

use super::functions::{random_admissible, sample_seed, PolyKind};
use super::{differential_form_functional, integral_form_functional};
use crate::constants::WeightedInterval;
use crate::error::Result;

/// Degrees of batch samples cycle through `0..=SUITE_MAX_DEGREE`.
pub const SUITE_MAX_DEGREE: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InequalityReport {
    pub samples: usize,
    /// Samples with `ratio < 1 - margin`.
    pub violations: usize,
    /// Smallest `functional / constant` over the batch.
    pub min_ratio: f64,
    pub worst_sample: usize,
}

fn run<F>(samples: usize, margin: f64, eval: F) -> Result<InequalityReport>
where
    F: Fn(usize) -> Result<f64> + Sync,
{
    let ratios: Vec<f64> = (0..samples).into_par_iter().map(&eval).collect::<Result<_>>()?;
    let (worst_sample, min_ratio) =
        ratios.iter().copied().enumerate().fold(
            (0, f64::INFINITY),
            |(wi, wv), (i, v)| if v < wv { (i, v) } else { (wi, wv) },
        );
    Ok(InequalityReport {
        samples,
        violations: ratios.iter().filter(|&&r| r < 1.0 - margin).count(),
        min_ratio,
        worst_sample,
    })
}

fn degree_of(index: usize) -> usize {
    index % (SUITE_MAX_DEGREE + 1)
}

/// `Q[h] / K` for `samples` free polynomials.
pub fn integral_inequality_suite(
    iv: &WeightedInterval,
    constant: f64,
    samples: usize,
    seed: u64,
    tol: f64,
    margin: f64,
) -> Result<InequalityReport> {
    run(samples, margin, |i| {
        let h = random_admissible(PolyKind::FreePoly, degree_of(i), sample_seed(seed, i as u64), iv);
        Ok(integral_form_functional(&h, iv, tol)?.value / constant)
    })
}

/// `R[f] / M` for `samples` polynomials vanishing at both ends.
pub fn differential_inequality_suite(
    iv: &WeightedInterval,
    constant: f64,
    samples: usize,
    seed: u64,
    tol: f64,
    margin: f64,
) -> Result<InequalityReport> {
    run(samples, margin, |i| {
        let f = random_admissible(PolyKind::VanishingPoly, degree_of(i), sample_seed(seed, i as u64), iv);
        Ok(differential_form_functional(&f, iv, tol)?.value / constant)
    })
}
