use std::f64::consts::{PI, TAU};

use super::{check_tol, Evaluation, GlobalFunction};
use crate::contour::{
    c1_contour, c1_distance, c1_loop_winding, fallible, integrate_custom, HankelContour, PathSegment,
};
use crate::model::{ContourKind, Term};
use crate::{Result, ResumError, C64};

fn on_cut(w: C64) -> bool {
    w.re >= 1.0 && w.im.abs() <= 1e-14 * w.norm()
}

/// Ray for a density whose pole `p*` sits near `[0, ∞)`: tilted away from it,
/// by less than the angle at which the next pole `p* ∓ 2πi` would be swept.
fn tilted_ray(term: &Term, pole: C64) -> PathSegment {
    if pole.re > -0.1 && pole.im.abs() < 1.0 {
        let theta = 0.35f64.min(0.5 * (TAU - pole.im.abs()).atan2(pole.re.max(0.0)));
        let sign = if pole.im > 0.0 { -1.0 } else { 1.0 };
        term.density.ray(C64::from_polar(1.0, sign * theta))
    } else {
        term.density.ray(C64::new(1.0, 0.0))
    }
}

/// `z ∫ F(p) / (a e^p - z) dp` for one term.
pub(crate) fn term_value(term: &Term, z: C64, tol: f64) -> Result<Evaluation> {
    let a = term.a;
    let w = z / a;
    if on_cut(w) {
        return Err(ResumError::OnCut(z));
    }
    let pole = w.ln();
    let density = &term.density;
    let inner_tol = tol / z.norm();
    let integrand = |p: C64| -> Result<C64> {
        let q = (-p).exp();
        Ok(density.eval(p)? * q / (a - z * q))
    };
    let mut correction = C64::new(0.0, 0.0);
    let segments = match density.contour {
        ContourKind::Ray => vec![tilted_ray(term, pole)],
        ContourKind::Hankel => {
            let delta = density.delta;
            let d = if pole.re >= 0.0 { pole.im.abs() } else { pole.norm() };
            let eps = if d >= delta {
                0.5 * delta
            } else if d >= delta / 8.0 {
                0.5 * d
            } else {
                0.5 * delta
            };
            let hankel = HankelContour::new(eps)?;
            if hankel.encloses(pole) {
                // The contour swept over the pole; restore the residue (the loop is clockwise).
                correction = C64::new(0.0, TAU) * density.eval(pole)?;
            }
            hankel.segments().to_vec()
        }
        ContourKind::C1Spiral => {
            if c1_distance(pole) < 1e-6 {
                return Err(ResumError::PoleOnContour(z));
            }
            let winding = c1_loop_winding(pole).ok_or(ResumError::PoleOnContour(z))?;
            if winding != 0 {
                correction = -C64::new(0.0, TAU) * f64::from(winding) * density.eval(pole)?;
            }
            let mut segments = c1_contour().to_vec();
            if pole.re > 0.9 && pole.im.abs() < 0.5 {
                // Swing the tail ray about p = 1, away from the pole.
                let sign = if pole.im > 0.0 { -1.0 } else { 1.0 };
                segments[1] = PathSegment::ray(C64::new(1.0, 0.0), C64::from_polar(1.0, sign * 0.3));
            }
            segments
        }
    };
    let r = fallible(integrand, |f| integrate_custom(f, &segments, inner_tol))?;
    Ok(Evaluation {
        value: z * r.value + correction,
        abs_error_estimate: z.norm() * r.abs_error_estimate,
    })
}

/// `f(z)` on the plane cut along `a_j [1, ∞)`.
pub fn eval_finite_radius(g: &GlobalFunction, z: C64, tol: f64) -> Result<Evaluation> {
    check_tol(tol)?;
    if g.kind == super::FunctionKind::Entire {
        return Err(ResumError::Validation(
            "entire functions are evaluated with eval_entire".into(),
        ));
    }
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(ResumError::Validation(format!("point must be finite, got {z}")));
    }
    let mut out = Evaluation {
        value: g.f0,
        abs_error_estimate: 0.0,
    };
    if z.norm() == 0.0 {
        return Ok(out);
    }
    let share = tol / g.model.terms().len() as f64;
    for t in g.model.terms() {
        if t.density.contour == ContourKind::Hankel && t.density.delta >= PI {
            return Err(ResumError::Validation("Hankel strip must be narrower than π".into()));
        }
        let e = term_value(t, z, share)?;
        out.value += e.value;
        out.abs_error_estimate += e.abs_error_estimate;
    }
    Ok(out)
}
