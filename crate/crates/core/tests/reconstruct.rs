//! Reconstructed functions against series, closed forms and structural identities.

use std::f64::consts::{E, FRAC_PI_4, PI};

use resum::analysis::{decay_scan, jump_check, singularity_type};
use resum::model::{density_exp_sqrt, density_hurwitz, density_logmix, density_stirling_f3};
use resum::reconstruct::{
    borel_sum, borel_sum_iterated, coefficients_from_function, eval_f3, eval_f4, eval_many, laplace_of_entire,
    lngamma_via_sum, FunctionSpec, GlobalFunction,
};
use resum::{Complex64, ResumError};

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// `Σ_{k≥1} z^k k^{-k-1}` with terms formed in log space.
fn f3_series(x: f64) -> f64 {
    (1..400)
        .map(|k| {
            let kf = f64::from(k);
            let sign = if x < 0.0 && k % 2 == 1 { -1.0 } else { 1.0 };
            sign * (kf * x.abs().ln() - (kf + 1.0) * kf.ln()).exp()
        })
        .sum()
}

#[test]
fn logarithm_continued_past_the_unit_disk() {
    let g = GlobalFunction::finite_radius(density_hurwitz(1.0, 1.0).unwrap()).unwrap();
    for z in [
        c(-3.0, 0.0),
        c(2.0, 2.0),
        Complex64::from_polar(0.99, FRAC_PI_4),
        c(-10.0, 0.0),
        c(5.0, -0.5),
    ] {
        let want = -1.0 - (1.0 - z).ln() / z;
        let got = g.eval(z, 1e-10).unwrap();
        assert!((got.value - want).norm() < 1e-9, "z = {z}: {} vs {want}", got.value);
        assert!(got.abs_error_estimate < 1e-6);
    }
}

#[test]
fn scaling_the_singularities_rescales_the_argument() {
    for model in [density_hurwitz(1.0, 1.0).unwrap(), density_logmix(2.0).unwrap()] {
        let g = GlobalFunction::finite_radius(model.clone()).unwrap();
        let lambda = c(-1.5, 2.0);
        let h = GlobalFunction::finite_radius(model.scaled(lambda).unwrap()).unwrap();
        for z in [c(-2.0, 0.3), c(0.4, 0.1), c(0.0, -3.0)] {
            let a = g.eval(z, 1e-13).unwrap().value;
            let b = h.eval(lambda * z, 1e-13).unwrap().value;
            assert!((a - b).norm() < 1e-12 * a.norm().max(1.0), "z = {z}: {a} vs {b}");
        }
    }
}

#[test]
fn f4_inside_the_disk_matches_its_series() {
    let series = |z: Complex64| -> Complex64 { (1..2000).map(|k| f64::from(k).sqrt().exp() * z.powu(k)).sum() };
    for z in [c(0.8, 0.0), c(0.0, 0.9), c(-0.5, 0.5)] {
        let want = series(z);
        let got = eval_f4(z, 1e-10).unwrap().value;
        assert!((got - want).norm() < 1e-10 * want.norm(), "z = {z}: {got} vs {want}");
    }
}

#[test]
fn f3_matches_its_series_and_grows_like_exp_r_over_e() {
    for x in [-20.0, -5.0, 1.0, 10.0, 20.0, 30.0] {
        let want = f3_series(x);
        let got = eval_f3(c(x, 0.0), 1e-12).unwrap().value;
        assert!(
            (got.re - want).abs() < 1e-10 * want.abs().max(1.0),
            "x = {x}: {got} vs {want}"
        );
    }
    // log|f3(R)| / (R/e) approaches 1 from below as R grows along the positive axis.
    let ratio = |r: f64| eval_f3(c(r, 0.0), 1e-8).unwrap().value.norm().ln() / (r / E);
    let (r30, r100, r300) = (ratio(30.0), ratio(100.0), ratio(300.0));
    assert!(r30 < 1.0 && r100 < 1.0 && r300 < 1.0);
    assert!((1.0 - r300) < (1.0 - r30), "{r30} {r100} {r300}");
    assert!((1.0 - r300) < 0.02);
}

#[test]
fn coefficients_survive_the_round_trip() {
    for model in [density_hurwitz(1.0, 1.0).unwrap(), density_hurwitz(2.0, 0.5).unwrap()] {
        let g = GlobalFunction::finite_radius(model.clone()).unwrap();
        let spec = FunctionSpec::new(move |z| Ok(g.eval(z, 1e-11)?.value), vec![c(1.0, 0.0)]);
        for k in 1..=10u32 {
            let want = model.closed_form(k).unwrap();
            let got = coefficients_from_function(&spec, k, 1e-10).unwrap();
            assert!((got - want).norm() < 1e-6 * want.norm(), "k = {k}: {got} vs {want}");
        }
    }
}

#[test]
fn inverse_map_rejects_functions_that_do_not_decay() {
    let spec = FunctionSpec::new(|z| Ok(z * z), vec![c(1.0, 0.0)]);
    assert!(matches!(
        coefficients_from_function(&spec, 1, 1e-8),
        Err(ResumError::DecayViolation(_))
    ));
}

#[test]
fn borel_forms_agree_with_the_classical_integral() {
    let g = GlobalFunction::borel(density_hurwitz(1.0, 1.0).unwrap().scaled(c(-1.0, 0.0)).unwrap()).unwrap();
    for x in [5.0, 10.0, 20.0] {
        // ∫₀^∞ e^{-xp} ln(1+p)/p dp by Simpson on p = u/(1-u); the k = 0 term 1/x is not part of the sum.
        let n = 40_000;
        let h = 1.0 / n as f64;
        let f = |u: f64| {
            if u <= 0.0 {
                return 1.0;
            }
            if u >= 1.0 {
                return 0.0;
            }
            let p = u / (1.0 - u);
            (-x * p).exp() * p.ln_1p() / p / ((1.0 - u) * (1.0 - u))
        };
        let simpson: f64 = (0..=n)
            .map(|i| {
                f(i as f64 * h)
                    * if i == 0 || i == n {
                        1.0
                    } else if i % 2 == 1 {
                        4.0
                    } else {
                        2.0
                    }
            })
            .sum::<f64>()
            * h
            / 3.0;
        let classical = simpson - 1.0 / x;
        let closed = borel_sum(&g, x, 1e-12).unwrap().value;
        let iterated = borel_sum_iterated(&g, x, 1e-12).unwrap().value;
        assert!((closed - iterated).norm() < 1e-10, "x = {x}");
        assert!((closed.re - classical).abs() < 1e-9, "x = {x}: {closed} vs {classical}");
    }
}

#[test]
fn borel_sums_refuse_singularities_on_the_integration_axis() {
    let g = GlobalFunction::borel(density_hurwitz(1.0, 1.0).unwrap()).unwrap();
    assert!(matches!(borel_sum(&g, 5.0, 1e-8), Err(ResumError::NotImplemented(_))));
}

#[test]
fn lngamma_from_the_laplace_integral() {
    for n in [0.5, 2.0, 5.0, 10.0, 50.0, 1e4] {
        let want = asymptotic_lngamma(n);
        let got = lngamma_via_sum(n, 1e-13).unwrap();
        assert!(
            (got - want).abs() < 1e-10 * want.abs().max(1.0),
            "n = {n}: {got} vs {want}"
        );
    }
}

/// ln Γ by recurrence up to 30 plus the asymptotic series with six correction terms.
fn asymptotic_lngamma(n: f64) -> f64 {
    let mut x = n;
    let mut shift = 0.0;
    while x < 30.0 {
        shift -= x.ln();
        x += 1.0;
    }
    let inv = 1.0 / x;
    let inv2 = inv * inv;
    let tail = inv
        * (1.0 / 12.0
            - inv2
                * (1.0 / 360.0
                    - inv2 * (1.0 / 1260.0 - inv2 * (1.0 / 1680.0 - inv2 * (1.0 / 1188.0 - inv2 * 691.0 / 360360.0)))));
    shift + (x - 0.5) * x.ln() - x + 0.5 * (2.0 * PI).ln() + tail
}

#[test]
fn laplace_transform_of_the_entire_function() {
    // ∫₀^∞ e^{-xz} f3(z) dz = (1/x) Σ k! k^{-k-1} x^{-k}; compare with the series for x > 1/e.
    let model = density_stirling_f3();
    let x = 2.0;
    let mut want = 0.0;
    for k in 1..200u32 {
        let kf = f64::from(k);
        want += (1..=k).map(|j| f64::from(j) / (kf * x)).product::<f64>() / kf;
    }
    want /= x;
    let got = laplace_of_entire(&model, x, 1e-12).unwrap();
    assert!((got.value.re - want).abs() < 1e-10, "{} vs {want}", got.value);
    assert!(matches!(
        laplace_of_entire(&model, 0.3, 1e-8),
        Err(ResumError::Domain(_))
    ));
}

#[test]
fn points_on_a_cut_are_refused_and_grids_keep_order() {
    let g = GlobalFunction::finite_radius(density_hurwitz(1.0, 1.0).unwrap()).unwrap();
    assert!(matches!(g.eval(c(3.0, 0.0), 1e-8), Err(ResumError::OnCut(_))));
    let pts: Vec<Complex64> = (0..30).map(|i| c(-3.0 + 0.1 * f64::from(i), 0.5)).collect();
    for (z, r) in pts.iter().zip(eval_many(&g, &pts, 1e-10)) {
        assert_eq!(r.unwrap().value, g.eval(*z, 1e-10).unwrap().value);
    }
}

#[test]
fn jumps_match_the_density_on_every_cut_model() {
    for m in [
        density_hurwitz(1.0, 1.0).unwrap(),
        density_hurwitz(2.0, 0.5).unwrap(),
        density_logmix(2.0).unwrap(),
        density_exp_sqrt(-1.0).unwrap(),
    ] {
        for t in [1.3, 2.0, 4.5] {
            let r = jump_check(&m, 0, t, 1e-3, 1e-11).unwrap();
            assert!(r.residual < 1e-6, "{} t = {t}: {r:?}", m.label());
        }
    }
    // -1 - ln(1 - z)/z jumps by 2πi/t across the cut at z = t.
    let r = jump_check(&density_hurwitz(1.0, 1.0).unwrap(), 0, 3.0, 1e-3, 1e-11).unwrap();
    let observed = r.side_plus - r.side_minus;
    assert!((observed - c(0.0, 2.0 * PI / 3.0)).norm() < 1e-7, "{observed}");
}

#[test]
fn singular_parts_leave_a_bounded_remainder() {
    for m in [
        density_hurwitz(1.0, 1.0).unwrap(),
        density_hurwitz(1.0, 2.0).unwrap(),
        density_hurwitz(2.0, 0.5).unwrap(),
    ] {
        let g = GlobalFunction::finite_radius(m).unwrap();
        let probe = singularity_type(&g, 0, &[1e-2, 1e-3, 1e-4, 1e-5], 1e-12).unwrap();
        assert!(probe.bounded, "{probe:?}");
    }
    let f3 = GlobalFunction::entire(density_stirling_f3()).unwrap();
    assert!(matches!(
        singularity_type(&f3, 0, &[1e-2], 1e-8),
        Err(ResumError::NoSingularity)
    ));
}

#[test]
fn growth_ratios_fall_off_away_from_the_cut() {
    for m in [
        density_hurwitz(1.0, 1.0).unwrap(),
        density_logmix(2.0).unwrap(),
        density_exp_sqrt(-1.0).unwrap(),
    ] {
        let g = GlobalFunction::finite_radius(m).unwrap();
        let table = decay_scan(&g, &[10.0, 100.0, 1000.0], &[PI, 2.0, -2.0], 1e-10).unwrap();
        assert!(table.decreasing.iter().all(|&d| d), "{table:?}");
    }
    let g = GlobalFunction::finite_radius(density_hurwitz(1.0, 1.0).unwrap()).unwrap();
    assert!(decay_scan(&g, &[10.0], &[0.05], 1e-8).is_err());
}
