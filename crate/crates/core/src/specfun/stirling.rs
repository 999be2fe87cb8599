//! The Stirling density `G(p) = s₂'(1+p) - s₁'(1+p)`, where `s₁ ≤ 1 ≤ s₂`
//! solve `s - ln s = t` and `s' = s/(s-1)`.
//!
//! `G` behaves like `√(2/p)` at the origin and tends to 1 at infinity. Off the
//! real axis both branches are continued along the arc `|t - 1| = |p|` from
//! the real point, which keeps the Newton steps short.

use super::lambert::lambert_branches;
use crate::{Complex64, Result, ResumError};

/// Below this modulus the local expansion is used instead of Newton.
pub const SERIES_RADIUS: f64 = 1e-4;

const ARC_STEP: f64 = 0.05;

/// Expansion of `G` about the branch point, accurate to `O(p^{7/2})`.
pub fn stirling_density_series(p: Complex64) -> Complex64 {
    let poly = 1.0 + p * (1.0 / 6.0 + p * (1.0 / 216.0 - p * 139.0 / 97200.0));
    2f64.sqrt() / p.sqrt() * poly
}

fn newton_lower(mut u: Complex64, t: Complex64) -> Complex64 {
    for _ in 0..50 {
        let eu = u.exp();
        let step = (eu - u - t) / (eu - 1.0);
        u -= step;
        if step.norm() <= 4.0 * f64::EPSILON * u.norm().max(1.0) {
            break;
        }
    }
    u
}

fn newton_upper(mut s: Complex64, t: Complex64) -> Complex64 {
    for _ in 0..50 {
        let step = (s - s.ln() - t) / (1.0 - 1.0 / s);
        s -= step;
        if step.norm() <= 4.0 * f64::EPSILON * s.norm() {
            break;
        }
    }
    s
}

/// `G(p)` for `Re p > 0`, or any `p ≠ 0` with `|p|` below [`SERIES_RADIUS`].
pub fn stirling_density(p: Complex64) -> Result<Complex64> {
    let r = p.norm();
    if r == 0.0 {
        return Err(ResumError::BranchConfluence(p));
    }
    if r < SERIES_RADIUS {
        return Ok(stirling_density_series(p));
    }
    if !(p.re > 0.0) || !r.is_finite() {
        return Err(ResumError::Domain(format!(
            "Stirling density is continued only to Re p > 0, got {p}"
        )));
    }
    let branches = lambert_branches(1.0 + r)?;
    let mut u = Complex64::new(branches.ln_s1, 0.0);
    let mut s = Complex64::new(branches.s2, 0.0);
    let phi = p.arg();
    if phi != 0.0 {
        let steps = (phi.abs() / ARC_STEP).ceil().max(1.0) as usize;
        // Near the branch point the seeds come from the local expansion instead.
        if r < 0.05 {
            let sigma = (2.0 * p).sqrt();
            u = confluent_seed_c(-sigma).ln();
            s = confluent_seed_c(sigma);
            u = newton_lower(u, 1.0 + p);
            s = newton_upper(s, 1.0 + p);
        } else {
            for i in 1..=steps {
                let t = 1.0 + Complex64::from_polar(r, phi * i as f64 / steps as f64);
                u = newton_lower(u, t);
                s = newton_upper(s, t);
            }
        }
    }
    let s1 = u.exp();
    let value = s / (s - 1.0) - s1 / (s1 - 1.0);
    if value.re.is_finite() && value.im.is_finite() {
        Ok(value)
    } else {
        Err(ResumError::EvaluationFailure { at: p })
    }
}

fn confluent_seed_c(sigma: Complex64) -> Complex64 {
    let s2 = sigma * sigma;
    1.0 + sigma + s2 / 3.0 + s2 * sigma / 36.0 - s2 * s2 / 270.0 + s2 * s2 * sigma / 4320.0
}
