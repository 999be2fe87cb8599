//! Named functions from the worked examples.

use std::f64::consts::PI;

use super::{check_tol, eval_entire, eval_finite_radius, Evaluation, GlobalFunction};
use crate::contour::{fallible, integrate_segment, PathSegment};
use crate::model::{density_exp_sqrt, density_stirling_f3, CoefficientModel};
use crate::{Result, ResumError, C64};

/// `f₃(z) = Σ_{k≥1} z^k k^{-k-1}`, entire.
pub fn eval_f3(z: C64, tol: f64) -> Result<Evaluation> {
    let g = GlobalFunction::entire(density_stirling_f3())?;
    eval_entire(&g, z, tol)
}

/// Continuation of `f₄(z) = Σ_{k≥1} e^{√k} z^k` to `ℂ ∖ [1, ∞)`.
pub fn eval_f4(z: C64, tol: f64) -> Result<Evaluation> {
    let g = GlobalFunction::finite_radius(density_exp_sqrt(-1.0)?)?;
    eval_finite_radius(&g, z, tol)
}

/// `(1 - p/2 - (1 + p/2) e^{-p}) / (p² (e^{-p} - 1))`, tending to 1/12 at 0.
fn binet_kernel(p: f64) -> f64 {
    if p < 0.5 {
        // Numerator Σ_{m≥3} (-1)^m (m/2 - 1) p^m / m!, divided by p³ up front.
        let mut term = -1.0 / 6.0; // (-1)^3 / 3!
        let mut num = term * 0.5;
        for m in 4..30 {
            term *= -p / m as f64;
            let add = term * (m as f64 / 2.0 - 1.0);
            num += add;
            if add.abs() < 1e-18 * num.abs() {
                break;
            }
        }
        let den = (-p).exp_m1() / p;
        num / den
    } else {
        (1.0 - p / 2.0 - (1.0 + p / 2.0) * (-p).exp()) / (p * p * (-p).exp_m1())
    }
}

/// `ln Γ(n)` as Stirling's main terms plus a Laplace integral of `binet_kernel`.
pub fn lngamma_via_sum(n: f64, tol: f64) -> Result<f64> {
    check_tol(tol)?;
    if !(n > 0.0 && n.is_finite()) {
        return Err(ResumError::Domain(format!("ln Γ needs n > 0, got {n}")));
    }
    let ray = PathSegment::ray(C64::new(0.0, 0.0), C64::new(1.0, 0.0));
    let integral = fallible(
        |p: C64| Ok(C64::new(binet_kernel(p.re) * (-n * p.re).exp(), 0.0)),
        |f| integrate_segment(f, &ray, tol),
    )?;
    Ok(n * (n.ln() - 1.0) - 0.5 * n.ln() + 0.5 * (2.0 * PI).ln() + integral.value.re)
}

/// `∫₀^∞ e^{-xz} f(z) dz` for the entire function `f = Σ c_k z^k / k!` of `model`,
/// computed as `(1/x) Σ c_k x^{-k}` through the finite-radius continuation.
pub fn laplace_of_entire(model: &CoefficientModel, x: f64, tol: f64) -> Result<Evaluation> {
    check_tol(tol)?;
    let abscissa = model.inverse_radius();
    if !(x > abscissa && x.is_finite()) {
        return Err(ResumError::Domain(format!(
            "Laplace integral needs x > {abscissa}, got {x}"
        )));
    }
    let g = GlobalFunction::finite_radius(model.clone())?;
    let inner = eval_finite_radius(&g, C64::new(1.0 / x, 0.0), tol * x)?;
    Ok(Evaluation {
        value: inner.value / x,
        abs_error_estimate: inner.abs_error_estimate / x,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binet_kernel_is_continuous() {
        let a = binet_kernel(0.5 - 1e-12);
        let b = binet_kernel(0.5 + 1e-12);
        assert!((a - b).abs() < 1e-13);
        assert!((binet_kernel(1e-9) - 1.0 / 12.0).abs() < 1e-9);
    }

    #[test]
    fn lngamma_at_one_vanishes() {
        assert!(lngamma_via_sum(1.0, 1e-13).unwrap().abs() < 1e-11);
        assert!(lngamma_via_sum(0.0, 1e-8).is_err());
    }
}
