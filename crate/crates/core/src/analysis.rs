//! Probes of the global structure of a reconstructed function: the jump
//! across each cut, the singular part at each `a_j`, and growth at infinity.
//!
//! Across the cut `a_j t`, `t > 1`, the two side limits differ by
//! `2πi ΔF_j(ln t)`, where `ΔF` is the difference of the density's upper and
//! lower boundary values in its Hankel form (the density itself for densities
//! integrated over a ray). Near `a_j`, `f(a_j(1+z)) - 2πi F_j(ln(1+z))` stays
//! bounded.

use std::f64::consts::{PI, TAU};

use serde::{Deserialize, Serialize};

use crate::contour::log_hankel;
use crate::model::{CoefficientModel, ContourKind, Term};
use crate::reconstruct::{eval_finite_radius, FunctionKind, GlobalFunction};
use crate::{Result, ResumError, C64};

const BANK: f64 = 1e-200;

/// Side limits across a cut and the jump predicted from the density.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct JumpReport {
    pub z_on_cut: C64,
    /// Limit from the side where `Im(z/a_j) > 0`.
    pub side_plus: C64,
    pub side_minus: C64,
    pub predicted_jump: C64,
    /// `|side_plus - side_minus - predicted_jump|`.
    pub residual: f64,
}

/// Remainders after removing the predicted singular part near `a_j`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SingularityProbe {
    pub j: usize,
    pub offsets: Vec<C64>,
    pub remainder_values: Vec<C64>,
    /// `|f(a_j(1+z))|` at the same offsets, for contrast.
    pub function_moduli: Vec<f64>,
    pub bounded: bool,
}

/// One row of a growth scan.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DecayRow {
    pub radius: f64,
    pub direction: f64,
    pub ratio: f64,
}

/// `|f(z)/z|` over radii and directions.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DecayTable {
    pub rows: Vec<DecayRow>,
    /// Per direction: whether the ratio strictly decreases with radius.
    pub decreasing: Vec<bool>,
}

fn term(m: &CoefficientModel, j: usize) -> Result<&Term> {
    m.terms()
        .get(j)
        .ok_or_else(|| ResumError::Validation(format!("model has no term {j}")))
}

/// `ΔF(p)` on `(0, ∞)`: upper minus lower boundary value of the Hankel-form density.
pub fn density_jump(term: &Term, p: f64) -> Result<C64> {
    let d = &term.density;
    match d.contour {
        ContourKind::Ray => d.eval(C64::new(p, 0.0)),
        ContourKind::Hankel => Ok(d.eval(C64::new(p, BANK))? - d.eval(C64::new(p, -BANK))?),
        ContourKind::C1Spiral => d.eval(C64::new(p, -BANK)),
    }
}

/// Richardson extrapolation to `h → 0` from values at `h, h/10, h/100`,
/// removing the `O(h)` and `O(h²)` terms.
fn richardson(v: [C64; 3]) -> Result<C64> {
    let r1 = (10.0 * v[1] - v[0]) / 9.0;
    let r2 = (10.0 * v[2] - v[1]) / 9.0;
    let limit = (100.0 * r2 - r1) / 99.0;
    let spread = (r2 - r1).norm();
    if !(limit.re.is_finite() && limit.im.is_finite()) || spread > 1e-2 * (limit.norm() + 1.0) {
        return Err(ResumError::ExtrapolationFailure(format!(
            "side limits did not settle (spread {spread})"
        )));
    }
    Ok(limit)
}

/// Compare the transverse side limits of `f` at `a_j t` with `2πi ΔF_j(ln t)`.
pub fn jump_check(m: &CoefficientModel, j: usize, t: f64, h: f64, tol: f64) -> Result<JumpReport> {
    let tm = term(m, j)?;
    if !(t > 1.0 && t.is_finite()) {
        return Err(ResumError::Validation(format!("cut points need t > 1, got {t}")));
    }
    if !(h > 0.0 && h < 0.5 * (t - 1.0)) {
        return Err(ResumError::Validation(format!(
            "offset h = {h} must be positive and below (t - 1)/2"
        )));
    }
    let g = GlobalFunction::finite_radius(m.clone())?;
    let a = tm.a;
    let side = |sign: f64| -> Result<C64> {
        let mut v = [C64::new(0.0, 0.0); 3];
        for (i, scale) in [1.0, 0.1, 0.01].iter().enumerate() {
            v[i] = eval_finite_radius(&g, a * C64::new(t, sign * h * scale), tol)?.value;
        }
        richardson(v)
    };
    let side_plus = side(1.0)?;
    let side_minus = side(-1.0)?;
    let predicted_jump = C64::new(0.0, TAU) * density_jump(tm, t.ln())?;
    Ok(JumpReport {
        z_on_cut: a * t,
        side_plus,
        side_minus,
        predicted_jump,
        residual: (side_plus - side_minus - predicted_jump).norm(),
    })
}

/// Hankel-form density at `p`, on the `arg ∈ (-2π, 0]` branch.
fn hankel_form(term: &Term, p: C64) -> Result<C64> {
    let d = &term.density;
    match d.contour {
        ContourKind::Hankel => d.eval(p),
        ContourKind::Ray => Ok(-d.eval(p)? * log_hankel(p) / C64::new(0.0, TAU)),
        ContourKind::C1Spiral => Err(ResumError::NotImplemented(
            "singular parts of spiral-contour densities".into(),
        )),
    }
}

/// Sample `f(a_j(1+z)) - 2πi F_j(ln(1+z))` at `z = r e^{3πi/4}`.
pub fn singularity_type(g: &GlobalFunction, j: usize, radii: &[f64], tol: f64) -> Result<SingularityProbe> {
    if g.kind == FunctionKind::Entire {
        return Err(ResumError::NoSingularity);
    }
    let tm = term(&g.model, j)?;
    if radii.is_empty() || radii.iter().any(|r| !(*r > 0.0 && *r < 0.5)) {
        return Err(ResumError::Validation("probe radii must lie in (0, 1/2)".into()));
    }
    let mut offsets = Vec::with_capacity(radii.len());
    let mut remainder_values = Vec::with_capacity(radii.len());
    let mut function_moduli = Vec::with_capacity(radii.len());
    for &r in radii {
        let z = C64::from_polar(r, 0.75 * PI);
        let f = eval_finite_radius(g, tm.a * (1.0 + z), tol)?.value;
        let singular = C64::new(0.0, TAU) * hankel_form(tm, (1.0 + z).ln())?;
        offsets.push(z);
        remainder_values.push(f - singular);
        function_moduli.push(f.norm());
    }
    let moduli: Vec<f64> = remainder_values.iter().map(|v| v.norm()).collect();
    let max = moduli.iter().copied().fold(0.0, f64::max);
    let min = moduli.iter().copied().fold(f64::INFINITY, f64::min);
    let bounded = max.is_finite() && (max <= 10.0 * min || max < 1e-12);
    Ok(SingularityProbe {
        j,
        offsets,
        remainder_values,
        function_moduli,
        bounded,
    })
}

/// `|f(R e^{iθ}) / (R e^{iθ})|` for every radius and direction.
pub fn decay_scan(g: &GlobalFunction, radii: &[f64], directions: &[f64], tol: f64) -> Result<DecayTable> {
    if radii.is_empty() || directions.is_empty() {
        return Err(ResumError::Validation("decay scan needs radii and directions".into()));
    }
    if g.kind != FunctionKind::Entire {
        for &theta in directions {
            for t in g.model.terms() {
                let gap = (C64::from_polar(1.0, theta) / t.a).arg().abs();
                if gap < 0.1 {
                    return Err(ResumError::Validation(format!(
                        "direction {theta} is within 0.1 rad of a cut"
                    )));
                }
            }
        }
    }
    let mut rows = Vec::new();
    let mut decreasing = Vec::new();
    for &theta in directions {
        let mut last = f64::INFINITY;
        let mut strictly = true;
        for &r in radii {
            let z = C64::from_polar(r, theta);
            let ratio = (g.eval(z, tol)?.value / z).norm();
            strictly &= ratio < last;
            last = ratio;
            rows.push(DecayRow {
                radius: r,
                direction: theta,
                ratio,
            });
        }
        decreasing.push(strictly);
    }
    Ok(DecayTable { rows, decreasing })
}
