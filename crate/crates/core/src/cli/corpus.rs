//! Built-in models checked against their closed-form oracles.

use std::f64::consts::{FRAC_PI_4, PI, TAU};

use rayon::prelude::*;

use super::emit::{Cell, Table};
use crate::analysis::{decay_scan, jump_check};
use crate::contour::{fallible, integrate_segment, oint, pow_hankel, PathSegment};
use crate::model::{density_exp_sqrt, density_hurwitz, density_logmix, density_stirling_f3, CoefficientModel};
use crate::reconstruct::{
    borel_sum, borel_sum_iterated, coefficients_from_function, eval_f3, eval_f4, eval_many, lngamma_via_sum,
    FunctionSpec, GlobalFunction,
};
use crate::specfun::{gamma, reference_lngamma};
use crate::{Result, C64};

/// Outcome of one corpus check.
#[derive(Debug, Clone, PartialEq)]
pub struct CheckResult {
    pub name: &'static str,
    pub max_residual: f64,
    pub tolerance: f64,
    pub error: Option<String>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.error.is_none() && self.max_residual < self.tolerance
    }
}

type Check = fn(f64) -> Result<f64>;
type SeriesCase = (CoefficientModel, fn(u32) -> f64);

const CHECKS: [(&str, Check, f64); 10] = [
    ("hurwitz_continuation", hurwitz_continuation, 1e-8),
    ("in_disk_series", in_disk_series, 1e-8),
    ("stirling_moments", stirling_moments, 1e-9),
    ("lngamma_formula", lngamma_formula, 1e-10),
    ("entire_f3", entire_f3, 1e-7),
    ("exp_sqrt_spiral", exp_sqrt_spiral, 1e-7),
    ("cut_jumps", cut_jumps, 1e-5),
    ("coefficient_round_trip", coefficient_round_trip, 1e-6),
    ("borel_forms", borel_forms, 1e-8),
    ("contour_properties", contour_properties, 1e-8),
];

/// Run every check; the quadrature tolerance is `tol`.
pub fn run_corpus(tol: f64) -> Vec<CheckResult> {
    CHECKS
        .par_iter()
        .map(|&(name, check, tolerance)| match check(tol) {
            Ok(r) => CheckResult {
                name,
                max_residual: r,
                tolerance,
                error: None,
            },
            Err(e) => CheckResult {
                name,
                max_residual: f64::INFINITY,
                tolerance,
                error: Some(e.to_string()),
            },
        })
        .collect()
}

pub fn corpus_table(results: &[CheckResult]) -> Table {
    let mut t = Table::new(&["check", "max_residual", "tolerance", "pass"]);
    for r in results {
        t.rows.push(vec![
            Cell::Text(r.name.to_string()),
            Cell::Num(r.max_residual),
            Cell::Num(r.tolerance),
            Cell::Flag(r.passed()),
        ]);
    }
    t
}

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

fn max_of(it: impl IntoIterator<Item = Result<f64>>) -> Result<f64> {
    it.into_iter().try_fold(0.0, |m, r| Ok(f64::max(m, r?)))
}

fn rel(got: C64, want: C64) -> f64 {
    (got - want).norm() / want.norm().max(f64::MIN_POSITIVE)
}

fn series(z: C64, coef: impl Fn(u32) -> f64) -> C64 {
    let mut sum = c(0.0, 0.0);
    let mut zk = c(1.0, 0.0);
    for k in 1..400 {
        zk *= z;
        let term = zk * coef(k);
        sum += term;
        if term.norm() < 1e-18 * sum.norm().max(1e-300) && k > 10 {
            break;
        }
    }
    sum
}

fn hurwitz_continuation(tol: f64) -> Result<f64> {
    let g = GlobalFunction::finite_radius(density_hurwitz(1.0, 1.0)?)?;
    let points = [
        c(-3.0, 0.0),
        c(2.0, 2.0),
        C64::from_polar(0.99, FRAC_PI_4),
        c(-10.0, 0.0),
    ];
    max_of(points.map(|z| {
        let want = -1.0 - (1.0 - z).ln() / z;
        Ok((g.eval(z, tol)?.value - want).norm())
    }))
}

fn in_disk_series(tol: f64) -> Result<f64> {
    let models: [SeriesCase; 2] = [
        (density_hurwitz(1.0, 2.0)?, |k| 1.0 / f64::from(k + 1).powi(2)),
        (density_logmix(2.0)?, |k| {
            1.0 / (f64::from(k).powi(2) + f64::from(k).ln())
        }),
    ];
    let points: Vec<C64> = (0..20)
        .map(|i| C64::from_polar(0.5 * (1.0 - f64::from(i % 4) / 4.0), TAU * f64::from(i) / 20.0 + 0.1))
        .collect();
    max_of(models.iter().flat_map(|(m, coef)| {
        let g = GlobalFunction::finite_radius(m.clone());
        points.iter().map(move |&z| {
            let g = g.clone()?;
            Ok((g.eval(z, tol)?.value - series(z, coef)).norm())
        })
    }))
}

fn stirling_moments(tol: f64) -> Result<f64> {
    let m = density_stirling_f3();
    max_of((1..=20u32).map(|n| {
        let nf = f64::from(n);
        // a₁ = e, so e^n c_n is the bare Laplace moment of the density.
        let moment = m.coefficient(n, tol * 1e-3)? * nf.exp();
        let want = (reference_lngamma(nf + 1.0)? - (nf + 1.0) * nf.ln() + nf).exp();
        Ok(rel(moment, c(want, 0.0)))
    }))
}

fn lngamma_formula(tol: f64) -> Result<f64> {
    max_of([0.5, 2.0, 5.0, 10.0, 50.0].map(|n| Ok((lngamma_via_sum(n, tol * 1e-4)? - reference_lngamma(n)?).abs())))
}

fn entire_f3(tol: f64) -> Result<f64> {
    max_of([-20.0, -5.0, 1.0, 10.0].map(|x: f64| {
        let mut sum = 0.0;
        for k in 1..200 {
            let kf = f64::from(k);
            let mag = kf * x.abs().ln() - (kf + 1.0) * kf.ln();
            let sign = if x < 0.0 && k % 2 == 1 { -1.0 } else { 1.0 };
            sum += sign * mag.exp();
        }
        Ok((eval_f3(c(x, 0.0), tol)?.value - sum).norm())
    }))
}

fn exp_sqrt_spiral(tol: f64) -> Result<f64> {
    let m = density_exp_sqrt(-1.0)?;
    let identity = max_of([1u32, 4, 9, 25].map(|n| {
        let want = f64::from(n).sqrt().exp();
        Ok(rel(m.coefficient(n, tol * want * 1e-2)?, c(want, 0.0)))
    }))?;
    let continuation = max_of([c(0.5, 0.0), c(-0.5, 0.3)].map(|z| {
        let want = series(z, |k| f64::from(k).sqrt().exp());
        Ok(rel(eval_f4(z, tol)?.value, want))
    }))?;
    Ok(identity.max(continuation))
}

fn cut_models() -> Result<Vec<CoefficientModel>> {
    Ok(vec![
        density_hurwitz(1.0, 1.0)?,
        density_hurwitz(2.0, 0.5)?,
        density_logmix(2.0)?,
        density_exp_sqrt(-1.0)?,
    ])
}

fn cut_jumps(tol: f64) -> Result<f64> {
    let models = cut_models()?;
    let ts = [1.3, 2.0, 2.9, 4.5, 7.0];
    max_of(
        models
            .par_iter()
            .flat_map_iter(|m| {
                ts.iter()
                    .map(move |&t| Ok(jump_check(m, 0, t, 1e-3, tol * 1e-2)?.residual))
            })
            .collect::<Vec<_>>(),
    )
}

fn coefficient_round_trip(tol: f64) -> Result<f64> {
    let models = [density_hurwitz(1.0, 1.0)?, density_hurwitz(2.0, 0.5)?];
    max_of(
        models
            .par_iter()
            .flat_map_iter(|m| {
                let g = GlobalFunction::finite_radius(m.clone());
                (1..=10u32).map(move |k| {
                    let g = g.clone()?;
                    let dirs = g.model.terms().iter().map(|t| t.a / t.a.norm()).collect();
                    let spec = FunctionSpec::new(move |z| Ok(g.eval(z, tol)?.value), dirs);
                    let want = m.closed_form(k).expect("hurwitz coefficients have a closed form");
                    Ok(rel(coefficients_from_function(&spec, k, tol)?, want))
                })
            })
            .collect::<Vec<_>>(),
    )
}

fn borel_forms(tol: f64) -> Result<f64> {
    let g = GlobalFunction::borel(density_hurwitz(1.0, 1.0)?.scaled(c(-1.0, 0.0))?)?;
    let ray = PathSegment::ray(c(0.0, 0.0), c(1.0, 0.0));
    max_of([5.0, 10.0, 20.0].map(|x: f64| {
        let closed = borel_sum(&g, x, tol)?.value;
        let iterated = borel_sum_iterated(&g, x, tol)?.value;
        let classical = fallible(
            |p: C64| Ok(c((-x * p.re).exp() * p.re.ln_1p() / p.re, 0.0)),
            |f| integrate_segment(f, &ray, tol * 1e-2),
        )?
        .value
            - 1.0 / x;
        Ok((closed - iterated).norm().max((closed - classical).norm()))
    }))
}

fn contour_properties(tol: f64) -> Result<f64> {
    let hankel_gamma = max_of([0.5, 2.7, -1.3].map(|z: f64| {
        let got = oint(|s| pow_hankel(s, c(z - 1.0, 0.0)) * (-s).exp(), 0.25, tol * 1e-2)?.value;
        let want = gamma(z)? * (C64::from_polar(1.0, -TAU * z) - 1.0);
        Ok((got - want).norm())
    }))?;
    let f = |s: C64| pow_hankel(s, c(-0.3, 0.2)) * (-s).exp();
    let base = oint(f, 0.25, tol * 1e-2)?.value;
    let eps_spread = max_of([0.05, 0.6, 1.5].map(|eps| Ok((oint(f, eps, tol * 1e-2)?.value - base).norm())))?;

    let g = GlobalFunction::finite_radius(density_hurwitz(1.0, 1.0)?)?;
    let table = decay_scan(&g, &[10.0, 100.0, 1000.0], &[PI, 2.0, -2.0], tol)?;
    let monotone = if table.decreasing.iter().all(|&d| d) { 0.0 } else { 1.0 };

    let grid: Vec<C64> = (0..25)
        .map(|i| c(-2.0 + 0.2 * f64::from(i % 5), -1.0 + 0.5 * f64::from(i / 5)))
        .collect();
    let render = || -> Result<String> {
        let mut t = Table::results();
        for (z, r) in grid.iter().zip(eval_many(&g, &grid, tol)) {
            t.push_evaluation(*z, &r?);
        }
        Ok(t.to_csv())
    };
    let deterministic = if render()? == render()? { 0.0 } else { 1.0 };
    Ok(hankel_gamma.max(eps_spread).max(monotone).max(deterministic))
}
