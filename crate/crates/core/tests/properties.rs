use std::f64::consts::{E, PI};

use proptest::prelude::*;

use hardy_core::quadrature::{differential_inequality_suite, integral_inequality_suite};
use hardy_core::spectral::{lowest_eigenvalue_only, richardson_limit};
use hardy_core::{
    beta_root, differential_constant, differential_form_functional, hardy_constants, integral_constant,
    integral_form_functional, random_admissible, Boundary, ClosedFormFunction, HardyError, PolyKind, SlProblem,
    TestFunction, WeightedInterval,
};

fn k_of(iv: &WeightedInterval) -> f64 {
    integral_constant(iv, 1e-12).unwrap().integral.unwrap()
}

fn m_of(iv: &WeightedInterval) -> f64 {
    differential_constant(iv).differential.unwrap()
}

#[test]
fn functionals_are_homogeneous() {
    let iv = WeightedInterval::new(0.5, 1.0, 6.0).unwrap();
    for seed in 0..5 {
        let h = random_admissible(PolyKind::FreePoly, 3, seed, &iv);
        let f = random_admissible(PolyKind::VanishingPoly, 3, seed, &iv);
        let q = integral_form_functional(&h, &iv, 1e-12).unwrap().value;
        let r = differential_form_functional(&f, &iv, 1e-12).unwrap().value;
        for c in [1e-3, 7.0, 1e3] {
            let qc = integral_form_functional(&h.scaled(c), &iv, 1e-12).unwrap().value;
            let rc = differential_form_functional(&f.scaled(c), &iv, 1e-12).unwrap().value;
            assert!(((qc - q) / q).abs() <= 1e-12, "Q seed {seed} c {c}");
            assert!(((rc - r) / r).abs() <= 1e-12, "R seed {seed} c {c}");
        }
    }
}

#[test]
fn constants_are_scale_invariant() {
    for alpha in [-2.0, 0.0, 0.5, 2.0] {
        let base = WeightedInterval::new(alpha, 1.0, 3.0).unwrap();
        let scaled = WeightedInterval::new(alpha, 4.0, 12.0).unwrap();
        assert_eq!(m_of(&base).to_bits(), m_of(&scaled).to_bits());
        assert_eq!(k_of(&base).to_bits(), k_of(&scaled).to_bits());
    }
    let e_scaled = WeightedInterval::new(0.0, 2.0, 2.0 * E).unwrap();
    assert!((k_of(&e_scaled) - 3.623_089_286_626_210_6).abs() < 1e-12);
}

#[test]
fn constants_decrease_toward_baseline_as_the_ratio_grows() {
    for alpha in [-1.0, 0.0, 0.9] {
        let mut prev = (f64::INFINITY, f64::INFINITY);
        for ratio in [1.2, 2.0, 5.0, 50.0, 1e4, 1e12] {
            let iv = WeightedInterval::new(alpha, 1.0, ratio).unwrap();
            let (k, m) = (k_of(&iv), m_of(&iv));
            assert!(k < prev.0 && m < prev.1, "alpha {alpha} ratio {ratio}");
            assert!(k > iv.baseline());
            prev = (k, m);
        }
    }
}

#[test]
fn perturbed_extremals_do_not_beat_the_constants() {
    let iv = WeightedInterval::new(-1.0, 1.0, 4.0).unwrap();
    let (k, m) = (k_of(&iv), m_of(&iv));
    let h = ClosedFormFunction::h_integral(&iv, 1e-12).unwrap();
    let f = ClosedFormFunction::f_differential(&iv);
    for (i, eps) in [1e-1, 1e-2, 1e-3].into_iter().enumerate() {
        let p = random_admissible(PolyKind::VanishingPoly, 2, i as u64, &iv);
        let pp = p.clone();
        let hp = TestFunction::new("h+p", Boundary::Free, move |x| h.value_at(x) + eps * pp.value(x));
        let (pv, pd) = (p.clone(), p);
        let fp = TestFunction::new("f+p", Boundary::Vanishing, move |x| f.value_at(x) + eps * pv.value(x))
            .with_derivative(move |x| f.derivative_at(x) + eps * pd.derivative(x).unwrap());
        assert!(integral_form_functional(&hp, &iv, 1e-12).unwrap().value >= k * (1.0 - 1e-12));
        assert!(differential_form_functional(&fp, &iv, 1e-12).unwrap().value >= m * (1.0 - 1e-12));
    }
}

#[test]
fn suites_hold_away_from_the_main_grid() {
    for (alpha, a, b) in [(-2.5, 0.3, 2.0), (0.2, 2.0, 50.0), (1.8, 1.0, 3.0)] {
        let iv = WeightedInterval::new(alpha, a, b).unwrap();
        let r = differential_inequality_suite(&iv, m_of(&iv), 200, 42, 1e-10, 1e-9).unwrap();
        assert_eq!(r.violations, 0, "R at {alpha}");
        let q = integral_inequality_suite(&iv, k_of(&iv), 200, 42, 1e-10, 1e-9).unwrap();
        assert_eq!(q.violations, 0, "Q at {alpha}");
    }
}

#[test]
fn eigenvalue_error_shrinks_under_refinement() {
    let iv = WeightedInterval::new(0.0, 1.0, E).unwrap();
    let m = m_of(&iv);
    let errors: Vec<f64> = [16, 32, 64, 128]
        .iter()
        .map(|&n| (lowest_eigenvalue_only(&SlProblem::dirichlet(&iv), n).unwrap() - m).abs())
        .collect();
    assert!(errors.windows(2).all(|w| w[1] < w[0] / 3.0), "{errors:?}");
}

#[test]
fn robin_eigenvalue_tracks_k_for_alpha_above_one() {
    let iv = WeightedInterval::new(2.0, 1.0, E).unwrap();
    let lambda = richardson_limit(&SlProblem::integral_form(&iv), 800).unwrap();
    assert!(((lambda - k_of(&iv)) / k_of(&iv)).abs() <= 1e-5);
}

#[test]
fn missing_k_is_reported_not_invented() {
    let iv = WeightedInterval::new(1.0, 1.0, E).unwrap();
    let (c, err) = hardy_constants(&iv, 1e-12);
    assert_eq!(err, Some(HardyError::AlphaExcluded));
    assert!(c.integral.is_none() && c.differential.is_some());
    assert_eq!(c.integral_below_differential(), None);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn k_below_m_wherever_k_exists(alpha in -4.0f64..4.0, log_ratio in 0.05f64..8.0) {
        prop_assume!((alpha - 1.0).abs() > 1e-6);
        let iv = WeightedInterval::new(alpha, 1.0, log_ratio.exp()).unwrap();
        let (c, _) = hardy_constants(&iv, 1e-12);
        if let Some(below) = c.integral_below_differential() {
            prop_assert!(below);
        }
    }

    #[test]
    fn root_exists_exactly_below_the_bound(alpha in 1.001f64..6.0, log_ratio in 0.1f64..6.0) {
        let iv = WeightedInterval::new(alpha, 1.0, log_ratio.exp()).unwrap();
        let bound = 1.0 + 2.0 / iv.log_ratio();
        prop_assume!((alpha - bound).abs() > 1e-6);
        prop_assert_eq!(beta_root(&iv, 1e-12).is_ok(), alpha < bound);
    }

    #[test]
    fn beta_stays_in_its_branch(alpha in -4.0f64..0.999, log_ratio in 0.05f64..8.0) {
        let iv = WeightedInterval::new(alpha, 1.0, log_ratio.exp()).unwrap();
        let beta = beta_root(&iv, 1e-12).unwrap().beta;
        let l = iv.log_ratio();
        prop_assert!(beta > PI / (2.0 * l) && beta < PI / l);
    }
}
