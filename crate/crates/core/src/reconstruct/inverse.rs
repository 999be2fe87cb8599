//! Taylor coefficients of a black-box function from integrals along its cuts:
//! `c_k = (1/2πi) Σ_j a_j^{-k} ∮ e^{-ks} f(a_j e^s) ds`.

use std::f64::consts::TAU;
use std::sync::Arc;

use super::check_tol;
use crate::contour::{fallible, oint};
use crate::{Result, ResumError, C64};

/// A function analytic off the rays `a_j [t, ∞)`, `t ≥ 1`, with `f(z) = o(z)` at infinity.
#[derive(Clone)]
pub struct FunctionSpec {
    pub eval: Arc<dyn Fn(C64) -> Result<C64> + Send + Sync>,
    pub ray_directions: Vec<C64>,
    /// Radii `t_{j,l} ≥ 1` of the singularities on each ray, when known.
    pub singular_radii: Option<Vec<Vec<f64>>>,
    pub decay_check_radius: f64,
}

impl std::fmt::Debug for FunctionSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FunctionSpec")
            .field("ray_directions", &self.ray_directions)
            .field("singular_radii", &self.singular_radii)
            .field("decay_check_radius", &self.decay_check_radius)
            .finish()
    }
}

impl FunctionSpec {
    pub fn new<F>(f: F, ray_directions: Vec<C64>) -> Self
    where
        F: Fn(C64) -> Result<C64> + Send + Sync + 'static,
    {
        FunctionSpec {
            eval: Arc::new(f),
            ray_directions,
            singular_radii: None,
            decay_check_radius: 100.0,
        }
    }

    /// Half the smallest angle between distinct rays, capped at 1/4.
    fn epsilon(&self) -> f64 {
        let mut gap = std::f64::consts::PI;
        for (i, a) in self.ray_directions.iter().enumerate() {
            for b in &self.ray_directions[..i] {
                gap = gap.min((a / b).arg().abs());
            }
        }
        0.25f64.min(0.4 * gap)
    }

    fn screen(&self) -> Result<()> {
        if self.ray_directions.is_empty() || self.ray_directions.iter().any(|a| a.norm() == 0.0) {
            return Err(ResumError::Validation("need at least one nonzero ray direction".into()));
        }
        let r = self.decay_check_radius;
        for i in 0..8 {
            let z = C64::from_polar(r, TAU * (i as f64 + 0.5) / 8.0);
            let near_ray = self.ray_directions.iter().any(|a| (z / a).arg().abs() < 0.05);
            if near_ray {
                continue;
            }
            let ratio = ((self.eval)(z)? / z).norm();
            if !(ratio < 0.1) {
                return Err(ResumError::DecayViolation(format!("|f(z)/z| = {ratio} at z = {z}")));
            }
        }
        Ok(())
    }
}

/// The `k`-th Taylor coefficient at the origin.
pub fn coefficients_from_function(spec: &FunctionSpec, k: u32, tol: f64) -> Result<C64> {
    check_tol(tol)?;
    if k == 0 {
        return Err(ResumError::Validation("coefficients start at k = 1".into()));
    }
    spec.screen()?;
    let eps = spec.epsilon();
    let kf = f64::from(k);
    let mut sum = C64::new(0.0, 0.0);
    let share = tol / spec.ray_directions.len() as f64;
    for &a in &spec.ray_directions {
        let integrand = |s: C64| -> Result<C64> { Ok((-kf * s).exp() * (spec.eval)(a * s.exp())?) };
        // The tail must shrink along the cut; a flat or growing tail means f is not o(z).
        let far = [20.0, 40.0].map(|x| integrand(C64::new(x, eps)).map(|v| v.norm()));
        if let [Ok(near), Ok(farther)] = far {
            if farther > near && farther > tol {
                return Err(ResumError::DecayViolation(format!(
                    "e^{{-ks}} f(a e^s) grows along a = {a}"
                )));
            }
        }
        let scale = a.powi(-(k as i32));
        let r = fallible(integrand, |f| oint(f, eps, share * TAU / scale.norm()))?;
        sum += scale * r.value;
    }
    Ok(sum / C64::new(0.0, TAU))
}
