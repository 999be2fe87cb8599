//! The two real branches of `s - ln s = t`, `t ≥ 1`.
//!
//! They are `-W₀(-e^{-t})` and `-W₋₁(-e^{-t})`. The lower branch is solved in
//! the variable `u = ln s` (`e^u - u = t`) so it stays representable after
//! `e^{-t}` underflows.

use serde::{Deserialize, Serialize};

use crate::{Result, ResumError};

/// Preimages of `t` under `s ↦ s - ln s` on `(0, 1]` and `[1, ∞)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BranchPair {
    pub s1: f64,
    /// `ln s1`, exact even when `s1` underflows.
    pub ln_s1: f64,
    pub s2: f64,
    pub t: f64,
}

/// Local inversion about the double point `s = 1`, with `σ = ±√(2(t-1))`.
pub(crate) fn confluent_seed(sigma: f64) -> f64 {
    let s2 = sigma * sigma;
    1.0 + sigma + s2 / 3.0 + s2 * sigma / 36.0 - s2 * s2 / 270.0 + s2 * s2 * sigma / 4320.0
}

fn lower(t: f64) -> f64 {
    let mut u = if t - 1.0 < 0.5 {
        confluent_seed(-(2.0 * (t - 1.0)).sqrt()).ln()
    } else {
        -t
    };
    for _ in 0..100 {
        let eu = u.exp();
        let d = eu - 1.0;
        if d == 0.0 {
            break;
        }
        let step = (eu - u - t) / d;
        u = (u - step).min(0.0);
        if step.abs() <= 4.0 * f64::EPSILON * u.abs().max(1.0) {
            break;
        }
    }
    u
}

fn upper(t: f64) -> f64 {
    let mut s = if t - 1.0 < 0.5 {
        confluent_seed((2.0 * (t - 1.0)).sqrt())
    } else {
        t + t.ln() + 1.0
    };
    for _ in 0..100 {
        let d = 1.0 - 1.0 / s;
        if d == 0.0 {
            break;
        }
        let step = (s - s.ln() - t) / d;
        s = (s - step).max(1.0);
        if step.abs() <= 4.0 * f64::EPSILON * s {
            break;
        }
    }
    s
}

/// Both real branches at `t ≥ 1`.
pub fn lambert_branches(t: f64) -> Result<BranchPair> {
    if !(t >= 1.0 && t.is_finite()) {
        return Err(ResumError::Domain(format!("branches need t ≥ 1, got {t}")));
    }
    if t == 1.0 {
        return Ok(BranchPair {
            s1: 1.0,
            ln_s1: 0.0,
            s2: 1.0,
            t,
        });
    }
    let ln_s1 = lower(t);
    Ok(BranchPair {
        s1: ln_s1.exp(),
        ln_s1,
        s2: upper(t),
        t,
    })
}
