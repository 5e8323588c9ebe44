use rayon::prelude::*;
use serde_json::{Map, Value};

use hardy_core::extremals::ClosedFormFunction;
use hardy_core::quadrature::{differential_inequality_suite, integral_inequality_suite, InequalityReport};
use hardy_core::spectral::richardson_limit;
use hardy_core::{
    beta_root, differential_constant, differential_form_functional, existence_bound, hardy_constants,
    integral_constant, integral_form_functional, lowest_eigenvalue, radial_reduction, separable_rayleigh,
    shell_constant, HardyError, Result, ShellDomain, SlProblem, WeightedInterval,
};

use crate::args::{Bc, EigenArgs, IntervalArgs, ShellArgs, SweepArgs, VerifyArgs};
use crate::report::{cell, num, opt, RunReport};

/// Suite samples may undershoot the constant by this relative margin.
pub const SUITE_MARGIN: f64 = 1e-9;
pub const INTEGRAL_EQUALITY_TOL: f64 = 1e-6;
pub const DIFFERENTIAL_EQUALITY_TOL: f64 = 1e-8;
pub const DIRICHLET_EIGEN_TOL: f64 = 1e-6;
pub const ROBIN_EIGEN_TOL: f64 = 1e-5;
pub const ORDER_TOL: f64 = 0.2;

/// A finished run; sweeps also carry their fixed-header CSV table.
pub struct Outcome {
    pub report: RunReport,
    pub table: Option<String>,
}

impl From<RunReport> for Outcome {
    fn from(report: RunReport) -> Self {
        Self { report, table: None }
    }
}

fn interval_inputs(r: &mut RunReport, alpha: f64, a: f64, b: f64) {
    r.input("alpha", num(alpha)).input("a", num(a)).input("b", num(b));
}

fn relative_error(x: f64, reference: f64) -> f64 {
    ((x - reference) / reference).abs()
}

pub fn beta(args: &IntervalArgs) -> Result<Outcome> {
    let iv = WeightedInterval::new(args.alpha, args.a, args.b)?;
    let root = beta_root(&iv, args.tol)?;
    let mut r = RunReport::new("beta");
    interval_inputs(&mut r, args.alpha, args.a, args.b);
    r.input("tol", num(args.tol));
    r.output("beta", num(root.beta))
        .output("residual", num(root.residual))
        .output("branch", root.branch.as_str())
        .output("bracket_lo", num(root.bracket.0))
        .output("bracket_hi", num(root.bracket.1))
        .output("iterations", root.iterations as u64)
        .output("existence_bound", num(existence_bound(iv.log_ratio())));
    r.check("beta_residual", root.residual.abs(), args.tol);
    Ok(r.into())
}

pub fn constants(args: &IntervalArgs) -> Result<Outcome> {
    let iv = WeightedInterval::new(args.alpha, args.a, args.b)?;
    let (c, missing) = hardy_constants(&iv, args.tol);
    match missing {
        None | Some(HardyError::AlphaExcluded) | Some(HardyError::NoRoot { .. }) => {}
        Some(e) => return Err(e),
    }
    let mut r = RunReport::new("constants");
    interval_inputs(&mut r, args.alpha, args.a, args.b);
    r.input("tol", num(args.tol));
    r.output("baseline", num(c.baseline))
        .output("beta", opt(c.beta.map(|b| b.beta)))
        .output("K", opt(c.integral))
        .output("M", opt(c.differential))
        .output(
            "K_lt_M",
            c.integral_below_differential().map_or(Value::Null, Value::Bool),
        )
        .output("K_status", missing.as_ref().map_or("ok", HardyError::code));
    if let (Some(root), Some(k), Some(m)) = (c.beta, c.integral, c.differential) {
        r.check("beta_residual", root.residual.abs(), args.tol);
        r.check("K_minus_M", k - m, 0.0);
    }
    Ok(r.into())
}

pub fn eigen(args: &EigenArgs) -> Result<Outcome> {
    let iv = WeightedInterval::new(args.alpha, args.a, args.b)?;
    let (problem, reference, tol) = match args.bc {
        Bc::Dirichlet => {
            let m = differential_constant(&iv).differential.expect("always present");
            (SlProblem::dirichlet(&iv), m, DIRICHLET_EIGEN_TOL)
        }
        Bc::Robin => {
            let k = integral_constant(&iv, args.tol)?.integral.expect("present on success");
            (SlProblem::integral_form(&iv), k, ROBIN_EIGEN_TOL)
        }
    };
    let result = lowest_eigenvalue(&problem, args.grid)?;
    let extrapolated = richardson_limit(&problem, args.grid)?;
    let mut r = RunReport::new("eigen");
    interval_inputs(&mut r, args.alpha, args.a, args.b);
    r.input("grid", args.grid as u64).input(
        "bc",
        match args.bc {
            Bc::Dirichlet => "dirichlet",
            Bc::Robin => "robin",
        },
    );
    r.output("lambda", num(result.lambda))
        .output("lambda_richardson", num(extrapolated))
        .output("reference", num(reference))
        .output("relative_error", num(relative_error(extrapolated, reference)))
        .output("gap", num(result.gap()))
        .output("order_estimate", opt(result.order_estimate))
        .output("eigenvector_positive", result.eigenvector_positive);
    r.check(
        "richardson_relative_error",
        relative_error(extrapolated, reference),
        tol,
    );
    r.check(
        "nonpositive_nodes",
        result.eigenvector.iter().filter(|&&v| v <= 0.0).count() as f64,
        0.0,
    );
    if let Some(p) = result.order_estimate {
        r.check("order_deviation", (p - 2.0).abs(), ORDER_TOL);
    }
    Ok(r.into())
}

fn suite_outputs(r: &mut RunReport, s: &InequalityReport) {
    r.output("violations", s.violations as u64)
        .output("min_ratio", num(s.min_ratio))
        .output("worst_sample", s.worst_sample as u64);
    r.check("violations", s.violations as f64, 0.0);
}

fn verify_inputs(r: &mut RunReport, args: &VerifyArgs) {
    interval_inputs(r, args.alpha, args.a, args.b);
    r.input("samples", args.samples as u64)
        .input("seed", args.seed)
        .input("tol", num(args.tol));
}

pub fn verify_integral(args: &VerifyArgs) -> Result<Outcome> {
    let iv = WeightedInterval::new(args.alpha, args.a, args.b)?;
    let k = integral_constant(&iv, 1e-12)?.integral.expect("present on success");
    let suite = integral_inequality_suite(&iv, k, args.samples, args.seed, args.tol, SUITE_MARGIN)?;
    let h = ClosedFormFunction::h_integral(&iv, 1e-12)?.to_test_function();
    let q = integral_form_functional(&h, &iv, args.tol)?.value;
    let mut r = RunReport::new("verify-integral");
    verify_inputs(&mut r, args);
    r.output("K", num(k)).output("extremal_Q", num(q));
    suite_outputs(&mut r, &suite);
    r.check("extremal_relative_error", relative_error(q, k), INTEGRAL_EQUALITY_TOL);
    Ok(r.into())
}

pub fn verify_differential(args: &VerifyArgs) -> Result<Outcome> {
    let iv = WeightedInterval::new(args.alpha, args.a, args.b)?;
    let m = differential_constant(&iv).differential.expect("always present");
    let suite = differential_inequality_suite(&iv, m, args.samples, args.seed, args.tol, SUITE_MARGIN)?;
    let f = ClosedFormFunction::f_differential(&iv).to_test_function();
    let rq = differential_form_functional(&f, &iv, args.tol)?.value;
    let mut r = RunReport::new("verify-differential");
    verify_inputs(&mut r, args);
    r.output("M", num(m)).output("extremal_R", num(rq));
    suite_outputs(&mut r, &suite);
    r.check(
        "extremal_relative_error",
        relative_error(rq, m),
        DIFFERENTIAL_EQUALITY_TOL,
    );
    Ok(r.into())
}

pub fn shell(args: &ShellArgs) -> Result<Outcome> {
    let sd = ShellDomain::new(args.n, args.alpha, args.r1, args.r2)?;
    let constant = shell_constant(&sd);
    let reduced = radial_reduction(&sd);
    let via_line = differential_constant(&reduced).differential.expect("always present");
    let g = ClosedFormFunction::f_shell_radial(&sd).to_test_function();
    let q = separable_rayleigh(&g, args.mu, &sd, args.tol)?;
    let mut r = RunReport::new("shell");
    r.input("n", args.n)
        .input("alpha", num(args.alpha))
        .input("r1", num(args.r1))
        .input("r2", num(args.r2))
        .input("mu", num(args.mu))
        .input("tol", num(args.tol));
    r.output("reduced_alpha", num(reduced.alpha()))
        .output("shell_constant", num(constant))
        .output("radial_quotient", num(q.radial))
        .output("quotient", num(q.value()));
    r.check("reduction_mismatch", (constant - via_line).abs(), 0.0);
    r.check(
        "excess_minus_mu",
        relative_error(q.value() - args.mu, constant),
        DIFFERENTIAL_EQUALITY_TOL,
    );
    Ok(r.into())
}

struct SweepRow {
    alpha: f64,
    ratio: f64,
    beta: Option<f64>,
    k: Option<f64>,
    m: f64,
    k_lt_m: Option<bool>,
    shells: Vec<f64>,
}

fn sweep_point(alpha: f64, ratio: f64, dims: &[u32], tol: f64) -> Result<SweepRow> {
    let iv = WeightedInterval::new(alpha, 1.0, ratio)?;
    let (c, missing) = hardy_constants(&iv, tol);
    match missing {
        None | Some(HardyError::AlphaExcluded) | Some(HardyError::NoRoot { .. }) => {}
        Some(e) => return Err(e),
    }
    let shells = dims
        .iter()
        .map(|&n| ShellDomain::new(n, alpha, 1.0, ratio).map(|sd| shell_constant(&sd)))
        .collect::<Result<_>>()?;
    Ok(SweepRow {
        alpha,
        ratio,
        beta: c.beta.map(|b| b.beta),
        k: c.integral,
        m: c.differential.expect("always present"),
        k_lt_m: c.integral_below_differential(),
        shells,
    })
}

pub fn sweep(args: &SweepArgs) -> Result<Outcome> {
    let points: Vec<(f64, f64)> = args
        .alphas
        .iter()
        .flat_map(|&a| args.ratios.iter().map(move |&r| (a, r)))
        .collect();
    let rows: Vec<SweepRow> = points
        .par_iter()
        .map(|&(alpha, ratio)| sweep_point(alpha, ratio, &args.dims, args.tol))
        .collect::<Result<_>>()?;

    let mut header: Vec<String> = ["alpha", "ratio", "beta", "K", "M", "K_lt_M"].map(String::from).into();
    header.extend(args.dims.iter().map(|n| format!("shell_n{n}")));
    let objects: Vec<Map<String, Value>> = rows
        .iter()
        .map(|row| {
            let mut values = vec![
                num(row.alpha),
                num(row.ratio),
                opt(row.beta),
                opt(row.k),
                num(row.m),
                row.k_lt_m.map_or(Value::Null, Value::Bool),
            ];
            values.extend(row.shells.iter().map(|&s| num(s)));
            header.iter().cloned().zip(values).collect()
        })
        .collect();

    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(&header).expect("in-memory write");
    for obj in &objects {
        w.write_record(obj.values().map(cell)).expect("in-memory write");
    }
    let table = String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 cells");

    let mut r = RunReport::new("sweep");
    let list = |xs: &[f64]| Value::Array(xs.iter().map(|&x| num(x)).collect());
    r.input("alphas", list(&args.alphas))
        .input("ratios", list(&args.ratios))
        .input("dims", Value::Array(args.dims.iter().map(|&n| n.into()).collect()))
        .input("tol", num(args.tol));
    let with_k = rows.iter().filter(|row| row.k.is_some()).count();
    let reversed = rows.iter().filter(|row| row.k_lt_m == Some(false)).count();
    r.output("points", rows.len() as u64)
        .output("points_with_K", with_k as u64)
        .output("rows", Value::Array(objects.into_iter().map(Value::Object).collect()));
    r.check("K_not_below_M", reversed as f64, 0.0);
    Ok(Outcome {
        report: r,
        table: Some(table),
    })
}
