//! Test functions on `[a, b]` and the seeded polynomial families that sample
//! the admissible classes of both inequalities.

use std::fmt;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::constants::WeightedInterval;

pub type RealFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// Declared endpoint behavior of a test function.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Boundary {
    /// `f(a) = f(b) = 0`; required by the differential form.
    Vanishing,
    Free,
}

/// An evaluable real function with an optional analytic derivative.
#[derive(Clone)]
pub struct TestFunction {
    value: RealFn,
    derivative: Option<RealFn>,
    boundary: Boundary,
    label: String,
}

impl fmt::Debug for TestFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TestFunction")
            .field("label", &self.label)
            .field("boundary", &self.boundary)
            .field("has_derivative", &self.derivative.is_some())
            .finish()
    }
}

impl TestFunction {
    pub fn new<F>(label: impl Into<String>, boundary: Boundary, value: F) -> Self
    where
        F: Fn(f64) -> f64 + Send + Sync + 'static,
    {
        Self {
            value: Arc::new(value),
            derivative: None,
            boundary,
            label: label.into(),
        }
    }

    pub fn with_derivative<D>(mut self, derivative: D) -> Self
    where
        D: Fn(f64) -> f64 + Send + Sync + 'static,
    {
        self.derivative = Some(Arc::new(derivative));
        self
    }

    pub fn value(&self, x: f64) -> f64 {
        (self.value)(x)
    }

    pub fn derivative(&self, x: f64) -> Option<f64> {
        self.derivative.as_ref().map(|d| d(x))
    }

    pub fn has_derivative(&self) -> bool {
        self.derivative.is_some()
    }

    pub fn boundary(&self) -> Boundary {
        self.boundary
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// `c·f`, keeping the boundary tag and derivative.
    pub fn scaled(&self, c: f64) -> Self {
        let v = Arc::clone(&self.value);
        let d = self.derivative.clone();
        Self {
            value: Arc::new(move |x| c * v(x)),
            derivative: d.map(|d| Arc::new(move |x| c * d(x)) as RealFn),
            boundary: self.boundary,
            label: format!("{}*{}", c, self.label),
        }
    }

    /// `|f(a)|, |f(b)| <= 1e-12 · max|f|` over a 257-point sample.
    pub fn vanishes_at_ends(&self, iv: &WeightedInterval) -> bool {
        let (a, b) = (iv.a(), iv.b());
        let scale = (0..=256)
            .map(|i| self.value(a + (b - a) * i as f64 / 256.0).abs())
            .fold(0.0, f64::max);
        let bound = 1e-12 * scale;
        self.value(a).abs() <= bound && self.value(b).abs() <= bound
    }
}

/// Polynomial in the centered variable `t = (x - c)/w`, where `(c - w, c + w)`
/// is the interval it was drawn for.
#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial {
    coeffs: Vec<f64>,
    center: f64,
    half_width: f64,
}

impl Polynomial {
    pub fn new(coeffs: Vec<f64>, iv: &WeightedInterval) -> Self {
        Self {
            coeffs,
            center: 0.5 * (iv.a() + iv.b()),
            half_width: 0.5 * (iv.b() - iv.a()),
        }
    }

    pub fn coefficients(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn eval(&self, x: f64) -> f64 {
        let t = (x - self.center) / self.half_width;
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * t + c)
    }

    pub fn derivative(&self, x: f64) -> f64 {
        let t = (x - self.center) / self.half_width;
        let d = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .rev()
            .fold(0.0, |acc, (k, &c)| acc * t + k as f64 * c);
        d / self.half_width
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyKind {
    /// `(x - a)(b - x) p(x)`.
    VanishingPoly,
    /// `p(x)`.
    FreePoly,
}

/// Coefficients uniform in `[-1, 1]` from a ChaCha8 stream seeded by `seed`;
/// an all-zero draw is redrawn.
pub fn random_polynomial(degree: usize, seed: u64, iv: &WeightedInterval) -> Polynomial {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let coeffs: Vec<f64> = (0..=degree).map(|_| rng.random_range(-1.0..=1.0)).collect();
        if coeffs.iter().any(|&c| c != 0.0) {
            return Polynomial::new(coeffs, iv);
        }
    }
}

pub fn random_admissible(kind: PolyKind, degree: usize, seed: u64, iv: &WeightedInterval) -> TestFunction {
    let p = random_polynomial(degree, seed, iv);
    polynomial_test_function(kind, p, iv, format!("{kind:?}(deg={degree}, seed={seed})"))
}

pub(crate) fn polynomial_test_function(
    kind: PolyKind,
    p: Polynomial,
    iv: &WeightedInterval,
    label: String,
) -> TestFunction {
    let p = Arc::new(p);
    match kind {
        PolyKind::FreePoly => {
            let (pv, pd) = (Arc::clone(&p), p);
            TestFunction::new(label, Boundary::Free, move |x| pv.eval(x)).with_derivative(move |x| pd.derivative(x))
        }
        PolyKind::VanishingPoly => {
            let (a, b) = (iv.a(), iv.b());
            let (pv, pd) = (Arc::clone(&p), p);
            TestFunction::new(label, Boundary::Vanishing, move |x| (x - a) * (b - x) * pv.eval(x))
                .with_derivative(move |x| (a + b - 2.0 * x) * pd.eval(x) + (x - a) * (b - x) * pd.derivative(x))
        }
    }
}

/// Per-sample seed of a seeded batch (SplitMix64 of `base` and `index`).
pub fn sample_seed(base: u64, index: u64) -> u64 {
    let mut z = base ^ index.wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}
