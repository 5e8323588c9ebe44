//! Globally adaptive Gauss–Kronrod (7/15) integration on a finite interval.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{HardyError, Result};

/// Panel budget of a single adaptive integration.
pub const MAX_PANELS: usize = 10_000;

/// Relative floor applied to plain absolute requests so that tolerances
/// below the rounding level of the integrand still terminate.
pub(crate) const ROUNDOFF_FLOOR: f64 = 1e-13;

const INITIAL_PANELS: usize = 4;

#[allow(clippy::excessive_precision)]
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];

#[allow(clippy::excessive_precision)]
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

// Gauss weights for XGK[1], XGK[3], XGK[5], XGK[7].
#[allow(clippy::excessive_precision)]
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

/// Stopping rule: total error estimate `<= max(abs, rel * ∫|f|)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub abs: f64,
    pub rel: f64,
}

impl Tolerance {
    pub fn absolute(tol: f64) -> Self {
        Self {
            abs: tol,
            rel: ROUNDOFF_FLOOR,
        }
    }

    pub fn relative(tol: f64) -> Self {
        Self { abs: 0.0, rel: tol }
    }

    fn target(&self, resabs: f64) -> f64 {
        self.abs.max(self.rel * resabs)
    }

    fn request(&self) -> f64 {
        if self.abs > 0.0 {
            self.abs
        } else {
            self.rel
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureResult {
    pub value: f64,
    pub error_estimate: f64,
    pub panels: usize,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Panel {
    pub lo: f64,
    pub hi: f64,
    pub value: f64,
    pub error: f64,
    pub resabs: f64,
}

impl Eq for Panel {}

impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

/// 15-point Kronrod value on `[lo, hi]`.
pub(crate) fn kronrod15<F: Fn(f64) -> f64 + ?Sized>(f: &F, lo: f64, hi: f64) -> f64 {
    let c = 0.5 * (lo + hi);
    let h = 0.5 * (hi - lo);
    let mut sum = WGK[7] * f(c);
    for j in 0..7 {
        let dx = h * XGK[j];
        sum += WGK[j] * (f(c - dx) + f(c + dx));
    }
    sum * h
}

fn gk15<F: Fn(f64) -> f64 + ?Sized>(f: &F, lo: f64, hi: f64) -> Panel {
    let c = 0.5 * (lo + hi);
    let h = 0.5 * (hi - lo);
    let fc = f(c);
    let mut kronrod = WGK[7] * fc;
    let mut gauss = WG[3] * fc;
    let mut resabs = WGK[7] * fc.abs();
    for j in 0..7 {
        let dx = h * XGK[j];
        let (f1, f2) = (f(c - dx), f(c + dx));
        kronrod += WGK[j] * (f1 + f2);
        resabs += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            gauss += WG[j / 2] * (f1 + f2);
        }
    }
    Panel {
        lo,
        hi,
        value: kronrod * h,
        error: ((kronrod - gauss) * h).abs(),
        resabs: resabs * h.abs(),
    }
}

/// Adaptive panels covering `[lo, hi]`, sorted left to right.
pub(crate) fn adaptive_panels<F>(f: &F, lo: f64, hi: f64, tol: Tolerance) -> Result<Vec<Panel>>
where
    F: Fn(f64) -> f64 + ?Sized,
{
    adaptive_panels_with_budget(f, lo, hi, tol, MAX_PANELS)
}

fn adaptive_panels_with_budget<F>(f: &F, lo: f64, hi: f64, tol: Tolerance, budget: usize) -> Result<Vec<Panel>>
where
    F: Fn(f64) -> f64 + ?Sized,
{
    if lo == hi {
        return Ok(vec![Panel {
            lo,
            hi,
            value: 0.0,
            error: 0.0,
            resabs: 0.0,
        }]);
    }
    let mut heap = BinaryHeap::with_capacity(64);
    let width = (hi - lo) / INITIAL_PANELS as f64;
    for i in 0..INITIAL_PANELS {
        let p_lo = lo + width * i as f64;
        let p_hi = if i + 1 == INITIAL_PANELS {
            hi
        } else {
            lo + width * (i + 1) as f64
        };
        heap.push(gk15(f, p_lo, p_hi));
    }

    loop {
        let (err, resabs) = heap.iter().fold((0.0, 0.0), |(e, r), p| (e + p.error, r + p.resabs));
        if !err.is_finite() {
            return Err(HardyError::QuadratureFailure {
                tolerance: tol.request(),
                estimate: err,
                panels: heap.len(),
            });
        }
        if err <= tol.target(resabs) {
            break;
        }
        let worst = heap.pop().expect("heap is never empty");
        let mid = 0.5 * (worst.lo + worst.hi);
        if heap.len() + 2 > budget || mid <= worst.lo || mid >= worst.hi {
            heap.push(worst);
            return Err(HardyError::QuadratureFailure {
                tolerance: tol.request(),
                estimate: err,
                panels: heap.len(),
            });
        }
        heap.push(gk15(f, worst.lo, mid));
        heap.push(gk15(f, mid, worst.hi));
    }

    let mut panels = heap.into_vec();
    panels.sort_by(|p, q| p.lo.total_cmp(&q.lo));
    Ok(panels)
}

pub(crate) fn integrate_with<F>(f: &F, lo: f64, hi: f64, tol: Tolerance) -> Result<QuadratureResult>
where
    F: Fn(f64) -> f64 + ?Sized,
{
    let panels = adaptive_panels(f, lo, hi, tol)?;
    Ok(QuadratureResult {
        value: panels.iter().map(|p| p.value).sum(),
        error_estimate: panels.iter().map(|p| p.error).sum(),
        panels: panels.len(),
    })
}

/// `∫_lo^hi f` to absolute tolerance `tol`.
pub fn integrate<F>(f: F, lo: f64, hi: f64, tol: f64) -> Result<QuadratureResult>
where
    F: Fn(f64) -> f64,
{
    crate::error::check_tolerance(tol)?;
    integrate_with(&f, lo, hi, Tolerance::absolute(tol))
}

/// Running integral `x ↦ ∫_lo^x f`, tabulated at adaptive panel boundaries.
///
/// Between boundaries the value is completed by a 15-point rule from the
/// nearest boundary on the left, so evaluation costs one panel rule.
pub(crate) struct Cumulative<'f, F: Fn(f64) -> f64 + ?Sized> {
    f: &'f F,
    breaks: Vec<f64>,
    prefix: Vec<f64>,
}

impl<'f, F: Fn(f64) -> f64 + ?Sized> Cumulative<'f, F> {
    pub fn new(f: &'f F, lo: f64, hi: f64, tol: Tolerance) -> Result<Self> {
        let panels = adaptive_panels(f, lo, hi, tol)?;
        let mut breaks = Vec::with_capacity(panels.len() + 1);
        let mut prefix = Vec::with_capacity(panels.len() + 1);
        let mut acc = 0.0;
        breaks.push(lo);
        prefix.push(0.0);
        for p in &panels {
            acc += p.value;
            breaks.push(p.hi);
            prefix.push(acc);
        }
        Ok(Self { f, breaks, prefix })
    }

    pub fn at(&self, x: f64) -> f64 {
        let last = self.breaks.len() - 1;
        if x <= self.breaks[0] {
            return 0.0;
        }
        if x >= self.breaks[last] {
            return self.prefix[last];
        }
        let i = self.breaks.partition_point(|&b| b <= x) - 1;
        let left = self.breaks[i];
        if x == left {
            self.prefix[i]
        } else {
            self.prefix[i] + kronrod15(self.f, left, x)
        }
    }
}
