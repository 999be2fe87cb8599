//! Inverse Laplace transform of `1/(x^b + ln x)`.
//!
//! Bending the Bromwich line onto a Hankel contour around the negative real
//! `x` axis leaves behind one residue per zero of `D(x) = x^b + ln x` on the
//! principal sheet, and `D` always has at least one zero in `(0, 1)`. So
//!
//! ```text
//! G(p) = (1/2πi) ∮ e^{-up} / ((-u)^b + ln(-u)) du  +  Σ_r e^{x_r p} / D'(x_r)
//! ```
//!
//! with `u = -x` running around `[0, ∞)`. The zeros are found in `w = ln x`,
//! where they solve `e^{bw} + w = 0` in the strip `|Im w| < π`, and their
//! number is confirmed with the argument principle before use.

use std::collections::HashMap;
use std::f64::consts::PI;
use std::sync::Mutex;

use crate::contour::{fallible, oint};
use crate::{Result, ResumError, C64};

const INNER_TOL: f64 = 1e-13;
const MAX_EPSILON: f64 = 0.25;

/// Precomputed zeros of the denominator plus a cache of `G` values.
#[derive(Debug)]
pub struct LogMix {
    b: f64,
    roots: Vec<C64>,
    weights: Vec<C64>,
    epsilon_u: f64,
    memo: Mutex<HashMap<(u64, u64), C64>>,
}

fn h(b: f64, w: C64) -> C64 {
    (b * w).exp() + w
}

fn newton(b: f64, mut w: C64) -> Option<C64> {
    for _ in 0..80 {
        let e = (b * w).exp();
        let step = (e + w) / (b * e + 1.0);
        if !(step.re.is_finite() && step.im.is_finite()) {
            return None;
        }
        w -= step;
        if step.norm() < 1e-15 * w.norm().max(1.0) {
            break;
        }
    }
    (h(b, w).norm() < 1e-12 * w.norm().max(1.0)).then_some(w)
}

/// Winding of `h` along a straight edge, sampled at spacing ≤ 0.01 and
/// refined until every step turns less than 0.3 rad.
fn edge_turn(b: f64, from: C64, to: C64) -> Result<f64> {
    let n = ((to - from).norm() / 0.01).ceil().max(1.0) as usize;
    let mut total = 0.0;
    for i in 0..n {
        let a = from + (to - from) * (i as f64 / n as f64);
        let z = from + (to - from) * ((i + 1) as f64 / n as f64);
        total += refine_turn(b, a, z, 0)?;
    }
    Ok(total)
}

fn refine_turn(b: f64, from: C64, to: C64, depth: u32) -> Result<f64> {
    let (ha, hb) = (h(b, from), h(b, to));
    if ha.norm() < 1e-12 || hb.norm() < 1e-12 {
        return Err(ResumError::DenominatorZero(-from.exp()));
    }
    let turn = (hb / ha).arg();
    if turn.abs() < 0.3 || depth > 40 {
        return Ok(turn);
    }
    let mid = 0.5 * (from + to);
    Ok(refine_turn(b, from, mid, depth + 1)? + refine_turn(b, mid, to, depth + 1)?)
}

impl LogMix {
    pub fn new(b: f64) -> Result<Self> {
        if !(b > 0.0 && b.is_finite()) {
            return Err(ResumError::Domain(format!("logmix needs b > 0, got {b}")));
        }
        // |e^{bw}| = |w| confines zeros to Re w ∈ [-1, A] with e^{bA} > 2(A + π) + 1.
        let mut a_max = 1.0f64;
        while (b * a_max).exp() <= 2.0 * (a_max + PI) + 1.0 {
            a_max += 0.5;
        }
        let (lo, hi) = (-2.0, a_max + 1.0);
        let mut roots: Vec<C64> = Vec::new();
        let steps_re = ((hi - lo) / 0.2).ceil() as usize;
        let steps_im = 31;
        for i in 0..=steps_re {
            for j in 0..steps_im {
                let seed = C64::new(lo + 0.2 * i as f64, -PI + 2.0 * PI * (j as f64 + 0.5) / steps_im as f64);
                if let Some(w) = newton(b, seed) {
                    let inside = w.im.abs() < PI && w.re > lo && w.re < hi;
                    if inside && roots.iter().all(|r| (r - w).norm() > 1e-8) {
                        roots.push(w);
                    }
                }
            }
        }
        let corners = [C64::new(lo, -PI), C64::new(hi, -PI), C64::new(hi, PI), C64::new(lo, PI)];
        let mut turn = 0.0;
        for k in 0..4 {
            turn += edge_turn(b, corners[k], corners[(k + 1) % 4])?;
        }
        let counted = (turn / (2.0 * PI)).round() as usize;
        if counted != roots.len() {
            return Err(ResumError::RootSearch {
                found: roots.len(),
                counted,
            });
        }
        roots.sort_by(|x, y| x.im.total_cmp(&y.im).then(x.re.total_cmp(&y.re)));

        let xs: Vec<C64> = roots.iter().map(|w| w.exp()).collect();
        if let Some(x) = xs.iter().find(|x| x.re >= 1.0) {
            return Err(ResumError::Domain(format!(
                "denominator zero {x} lies right of Re x = 1"
            )));
        }
        let mut nearest = f64::INFINITY;
        for x in &xs {
            let u = -*x;
            let d = if u.re >= 0.0 { u.im.abs() } else { u.norm() };
            if d < 1e-3 {
                return Err(ResumError::DenominatorZero(u));
            }
            nearest = nearest.min(d);
        }
        // Residue of 1/D at x_r, using x_r^b = -w_r.
        let weights = roots.iter().zip(&xs).map(|(w, x)| x / (1.0 - b * w)).collect();
        Ok(LogMix {
            b,
            roots: xs,
            weights,
            epsilon_u: MAX_EPSILON.min(0.5 * nearest),
            memo: Mutex::new(HashMap::new()),
        })
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    /// Zeros of `x^b + ln x` on the principal sheet.
    pub fn roots(&self) -> &[C64] {
        &self.roots
    }

    /// Largest real part among the zeros; `G` grows like `e^{p·this}`.
    pub fn growth_rate(&self) -> f64 {
        self.roots.iter().map(|x| x.re).fold(f64::NEG_INFINITY, f64::max)
    }

    /// `G(p)` for `Re p > 0`.
    pub fn eval(&self, p: C64) -> Result<C64> {
        if !(p.re > 0.0) {
            return Err(ResumError::Domain(format!("logmix density needs Re p > 0, got {p}")));
        }
        let key = (p.re.to_bits(), p.im.to_bits());
        if let Some(v) = self.memo.lock().expect("memo poisoned").get(&key) {
            return Ok(*v);
        }
        let b = self.b;
        let integrand = |u: C64| -> Result<C64> {
            let lu = (-u).ln();
            Ok((-u * p).exp() / ((b * lu).exp() + lu))
        };
        let hankel = fallible(integrand, |f| oint(f, self.epsilon_u, INNER_TOL))?;
        let mut value = hankel.value / C64::new(0.0, 2.0 * PI);
        for (x, w) in self.roots.iter().zip(&self.weights) {
            value += w * (x * p).exp();
        }
        self.memo.lock().expect("memo poisoned").insert(key, value);
        Ok(value)
    }
}
