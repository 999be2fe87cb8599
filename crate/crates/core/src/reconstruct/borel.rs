//! Borel sums of `Σ_{k≥1} c_k k! x^{-k-1}`.
//!
//! Two independent routes: the Laplace transform of the continued generating
//! function, `∫₀^∞ e^{-qx} (f(q) - f(0)) dq`, and the closed form of that
//! transform per density node,
//!
//! ```text
//! Σ_j ∫ F_j(p) (A e^{ζ} E₁(ζ)·(-1) - 1/x) dp,   A = a_j e^p,  ζ = -A x.
//! ```

use super::{check_tol, eval_finite_radius, Evaluation, FunctionKind, GlobalFunction};
use crate::contour::{fallible, integrate_segment, PathSegment};
use crate::specfun::scaled_e1;
use crate::{Result, ResumError, C64};

/// `ζ e^ζ E₁(ζ) - 1`, computed without cancellation at large `|ζ|`.
fn kernel(zeta: C64) -> Result<C64> {
    if zeta.norm() >= 30.0 && zeta.re > 0.0 {
        // -1/ζ + 2/ζ² - 6/ζ³ + …, cut at its smallest term.
        let mut term = C64::new(1.0, 0.0);
        let mut sum = C64::new(0.0, 0.0);
        for n in 1..200 {
            let next = -term * n as f64 / zeta;
            if next.norm() > term.norm() && n > 1 {
                break;
            }
            term = next;
            sum += term;
            if term.norm() < 1e-17 * sum.norm() {
                break;
            }
        }
        Ok(sum)
    } else {
        Ok(zeta * scaled_e1(zeta)? - 1.0)
    }
}

fn check_directions(g: &GlobalFunction) -> Result<()> {
    if g.kind != FunctionKind::Borel {
        return Err(ResumError::Validation(
            "Borel summation needs a Borel-kind function".into(),
        ));
    }
    for t in g.model.terms() {
        let angle = t.a.arg().abs();
        if angle == 0.0 {
            return Err(ResumError::NotImplemented(format!(
                "a = {} lies on the Laplace ray; lateral/median summation is not provided",
                t.a
            )));
        }
        if angle <= t.density.delta {
            return Err(ResumError::ContourPinch(format!(
                "a = {} is within the density strip of the Laplace ray",
                t.a
            )));
        }
    }
    Ok(())
}

fn check_x(x: f64) -> Result<()> {
    if x > 0.0 && x.is_finite() {
        Ok(())
    } else {
        Err(ResumError::Domain(format!("Borel sums need x > 0, got {x}")))
    }
}

/// Borel sum through the exponential-integral kernel.
pub fn borel_sum(g: &GlobalFunction, x: f64, tol: f64) -> Result<Evaluation> {
    check_tol(tol)?;
    check_x(x)?;
    check_directions(g)?;
    let mut out = Evaluation {
        value: C64::new(0.0, 0.0),
        abs_error_estimate: 0.0,
    };
    let share = tol / g.model.terms().len() as f64;
    for t in g.model.terms() {
        let a = t.a;
        let segments = t.density.segments();
        let integrand = |p: C64| -> Result<C64> { Ok(t.density.eval(p)? * kernel(-a * p.exp() * x)? / x) };
        let r = fallible(integrand, |f| crate::contour::integrate_custom(f, &segments, share))?;
        out.value += r.value;
        out.abs_error_estimate += r.abs_error_estimate;
    }
    Ok(out)
}

/// Borel sum as the Laplace transform of the continued generating function.
pub fn borel_sum_iterated(g: &GlobalFunction, x: f64, tol: f64) -> Result<Evaluation> {
    check_tol(tol)?;
    check_x(x)?;
    check_directions(g)?;
    let inner_tol = tol * x * 1e-2;
    let f0 = g.f0;
    let integrand = |q: C64| -> Result<C64> {
        let f = eval_finite_radius(g, q, inner_tol)?;
        Ok((-q * x).exp() * (f.value - f0))
    };
    let ray = PathSegment::ray(C64::new(0.0, 0.0), C64::new(1.0, 0.0));
    let r = fallible(integrand, |f| integrate_segment(f, &ray, tol))?;
    Ok(Evaluation {
        value: r.value,
        abs_error_estimate: r.abs_error_estimate + inner_tol / x,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_branches_meet() {
        for z in [C64::new(30.0, 0.0), C64::new(25.0, 18.0)] {
            let direct = z * scaled_e1(z).unwrap() - 1.0;
            let asym = kernel(z * (1.0 + 1e-12)).unwrap();
            assert!(((direct - asym) / direct).norm() < 1e-9, "z={z}");
        }
    }
}
