//! Coefficient models `c_k = Σ_j a_j^{-k} ∫_{C_j} e^{-kp} F_j(p) dp`, `k ≥ 1`.
//!
//! A [`CoefficientModel`] is a list of [`Term`]s, each pairing a singular
//! direction `a_j` with a [`Density`] `F_j` and the contour it is integrated
//! over. Densities that are integrable at the origin and analytic across
//! `(0, ∞)` are stored with a plain ray `[0, ∞)`; the others use the Hankel
//! contour or the spiral contour `C₁`.

mod logmix;
mod schema;

use std::f64::consts::{PI, TAU};
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::contour::{
    c1_contour, fallible, integrate_custom, log_c1, log_hankel, HankelContour, PathSegment, QuadratureResult,
};
use crate::specfun::{gamma, reference_lngamma, stirling_density};
use crate::{Result, ResumError, C64};

pub use logmix::LogMix;
pub use schema::{model_from_json, model_to_json, BuiltinSpec, ModelDocument};

/// Default half-width of the strip around `[0, ∞)` where densities are analytic.
pub const DEFAULT_DELTA: f64 = 0.5;

/// The contour a density is integrated over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ContourKind {
    Hankel,
    Ray,
    C1Spiral,
}

/// A user-supplied density.
pub type DensityFn = Arc<dyn Fn(C64) -> Result<C64> + Send + Sync>;

/// What a density computes.
#[derive(Clone)]
pub enum DensityKind {
    /// `p^{b-1} e^{-ap} / Γ(b)`, whose moments are `(k + a)^{-b}`.
    Hurwitz {
        a: f64,
        b: f64,
    },
    /// Inverse Laplace transform of `1/(x^b + ln x)`.
    LogMix(Arc<LogMix>),
    /// The Stirling density `G`.
    Stirling,
    /// `(γ/2√π) p^{-3/2} e^{-γ²/4p}`, whose moments are `e^{-γ√k}`.
    ExpSqrt {
        gamma: f64,
    },
    Custom(DensityFn),
}

impl fmt::Debug for DensityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DensityKind::Hurwitz { a, b } => write!(f, "Hurwitz {{ a: {a}, b: {b} }}"),
            DensityKind::LogMix(m) => write!(f, "LogMix {{ b: {} }}", m.b()),
            DensityKind::Stirling => write!(f, "Stirling"),
            DensityKind::ExpSqrt { gamma } => write!(f, "ExpSqrt {{ gamma: {gamma} }}"),
            DensityKind::Custom(_) => write!(f, "Custom"),
        }
    }
}

/// An evaluable `F(p)` plus the metadata the integrators rely on.
#[derive(Debug, Clone)]
pub struct Density {
    pub kind: DensityKind,
    pub contour: ContourKind,
    /// Constant multiplying the raw density.
    pub normalization: C64,
    /// Half-width of the analyticity strip; the Hankel offset is `delta / 2`.
    pub delta: f64,
    /// `α` in `|F(p)| ≤ C |p|^α e^{σ Re p}` for large `|p|`.
    pub algebraic_bound_exponent: f64,
    /// `σ` in the same bound.
    pub growth_rate: f64,
    /// Leading power at the origin; `+∞` for a flat (essential) zero.
    pub origin_exponent: f64,
    prefactor: C64,
}

fn is_integer(x: f64) -> bool {
    x == x.round()
}

impl Density {
    /// Hurwitz density on a ray (any `b > 0`) or on the Hankel contour.
    pub fn hurwitz(a: f64, b: f64, contour: ContourKind) -> Result<Self> {
        if !(a > 0.0 && b > 0.0 && a.is_finite() && b.is_finite()) {
            return Err(ResumError::Domain(format!("hurwitz needs a, b > 0, got a={a}, b={b}")));
        }
        let inv_gamma = 1.0 / gamma(b)?;
        let prefactor = match contour {
            ContourKind::Ray => C64::new(inv_gamma, 0.0),
            ContourKind::Hankel if is_integer(b) => C64::new(0.0, inv_gamma / TAU),
            ContourKind::Hankel => inv_gamma / (C64::from_polar(1.0, -TAU * b) - 1.0),
            ContourKind::C1Spiral => {
                return Err(ResumError::Validation(
                    "hurwitz density takes a ray or Hankel contour".into(),
                ))
            }
        };
        Ok(Density {
            kind: DensityKind::Hurwitz { a, b },
            contour,
            normalization: C64::new(1.0, 0.0),
            delta: DEFAULT_DELTA,
            algebraic_bound_exponent: b - 1.0,
            growth_rate: -a,
            origin_exponent: b - 1.0,
            prefactor,
        })
    }

    pub fn logmix(b: f64) -> Result<Self> {
        let state = LogMix::new(b)?;
        Ok(Density {
            growth_rate: state.growth_rate(),
            kind: DensityKind::LogMix(Arc::new(state)),
            contour: ContourKind::Ray,
            normalization: C64::new(1.0, 0.0),
            delta: DEFAULT_DELTA,
            algebraic_bound_exponent: 0.0,
            origin_exponent: b - 1.0,
            prefactor: C64::new(1.0, 0.0),
        })
    }

    pub fn stirling() -> Self {
        Density {
            kind: DensityKind::Stirling,
            contour: ContourKind::Ray,
            normalization: C64::new(1.0, 0.0),
            delta: DEFAULT_DELTA,
            algebraic_bound_exponent: 0.0,
            growth_rate: 0.0,
            origin_exponent: -0.5,
            prefactor: C64::new(1.0, 0.0),
        }
    }

    /// `γ > 0` on a ray, or `γ = -1` on `C₁` (moments `e^{+√k}`).
    pub fn exp_sqrt(gamma: f64) -> Result<Self> {
        let contour = if gamma > 0.0 && gamma.is_finite() {
            ContourKind::Ray
        } else if gamma == -1.0 {
            ContourKind::C1Spiral
        } else {
            return Err(ResumError::Domain(format!(
                "exp_sqrt is available for γ > 0 (ray) and γ = -1 (spiral), got {gamma}"
            )));
        };
        Ok(Density {
            kind: DensityKind::ExpSqrt { gamma },
            contour,
            normalization: C64::new(1.0, 0.0),
            delta: DEFAULT_DELTA,
            algebraic_bound_exponent: -1.5,
            growth_rate: 0.0,
            origin_exponent: f64::INFINITY,
            prefactor: C64::new(gamma / (2.0 * PI.sqrt()), 0.0),
        })
    }

    /// Black-box density; `growth_rate` is `σ` in `|F(p)| ≲ e^{σ Re p}`.
    pub fn custom<F>(f: F, contour: ContourKind, growth_rate: f64) -> Self
    where
        F: Fn(C64) -> Result<C64> + Send + Sync + 'static,
    {
        Density {
            kind: DensityKind::Custom(Arc::new(f)),
            contour,
            normalization: C64::new(1.0, 0.0),
            delta: DEFAULT_DELTA,
            algebraic_bound_exponent: 0.0,
            growth_rate,
            origin_exponent: 0.0,
            prefactor: C64::new(1.0, 0.0),
        }
    }

    pub fn with_normalization(mut self, c: C64) -> Self {
        self.normalization = c;
        self
    }

    pub fn with_delta(mut self, delta: f64) -> Result<Self> {
        if !(delta > 0.0 && delta.is_finite()) {
            return Err(ResumError::Validation(format!("delta must be positive, got {delta}")));
        }
        self.delta = delta;
        Ok(self)
    }

    /// Default Hankel offset.
    pub fn epsilon(&self) -> f64 {
        0.5 * self.delta
    }

    /// Whether ray quadrature should treat the origin as singular.
    pub fn singular_at_origin(&self) -> bool {
        match self.kind {
            DensityKind::LogMix(_) | DensityKind::Custom(_) => false,
            DensityKind::Stirling | DensityKind::ExpSqrt { .. } => true,
            DensityKind::Hurwitz { b, .. } => !(is_integer(b) && b >= 1.0),
        }
    }

    /// `F(p)` on the branch matching the density's contour.
    pub fn eval(&self, p: C64) -> Result<C64> {
        let raw = match &self.kind {
            DensityKind::Hurwitz { a, b } => {
                let (a, b) = (*a, *b);
                match self.contour {
                    ContourKind::Ray => {
                        if p.norm() == 0.0 {
                            if b > 1.0 {
                                C64::new(0.0, 0.0)
                            } else if b == 1.0 {
                                self.prefactor
                            } else {
                                return Err(ResumError::EvaluationFailure { at: p });
                            }
                        } else {
                            self.prefactor * ((b - 1.0) * p.ln() - a * p).exp()
                        }
                    }
                    _ if is_integer(b) => self.prefactor * log_hankel(p) * ((b - 1.0) * p.ln() - a * p).exp(),
                    _ => self.prefactor * ((b - 1.0) * log_hankel(p) - a * p).exp(),
                }
            }
            DensityKind::LogMix(m) => m.eval(p)?,
            DensityKind::Stirling => stirling_density(p)?,
            DensityKind::ExpSqrt { gamma } => {
                let g2 = gamma * gamma;
                if p.norm() == 0.0 {
                    C64::new(0.0, 0.0)
                } else {
                    let lp = if self.contour == ContourKind::C1Spiral {
                        log_c1(p)
                    } else {
                        p.ln()
                    };
                    self.prefactor * (-1.5 * lp - g2 / (4.0 * p)).exp()
                }
            }
            DensityKind::Custom(f) => f(p)?,
        };
        let v = self.normalization * raw;
        if v.re.is_finite() && v.im.is_finite() {
            Ok(v)
        } else {
            Err(ResumError::EvaluationFailure { at: p })
        }
    }

    /// The density's own contour, with Hankel offset `epsilon`.
    pub fn segments_with(&self, epsilon: f64) -> Result<Vec<PathSegment>> {
        Ok(match self.contour {
            ContourKind::Ray => vec![self.ray(C64::new(1.0, 0.0))],
            ContourKind::Hankel => HankelContour::new(epsilon)?.segments().to_vec(),
            ContourKind::C1Spiral => c1_contour().to_vec(),
        })
    }

    pub fn segments(&self) -> Vec<PathSegment> {
        self.segments_with(self.epsilon()).expect("delta is validated positive")
    }

    /// A ray from the origin in `direction`, flagged singular when needed.
    pub fn ray(&self, direction: C64) -> PathSegment {
        let mut seg = PathSegment::ray(C64::new(0.0, 0.0), direction);
        if let PathSegment::Ray { singular_start, .. } = &mut seg {
            *singular_start = self.singular_at_origin();
        }
        seg
    }

    /// `∫ weight(p) F(p) dp` over the density's contour.
    pub fn integrate<W>(&self, weight: W, tol: f64) -> Result<QuadratureResult>
    where
        W: Fn(C64) -> C64,
    {
        let segments = self.segments();
        fallible(
            |p| Ok(weight(p) * self.eval(p)?),
            |f| integrate_custom(f, &segments, tol),
        )
    }

    /// Exact `∫ e^{-kp} F(p) dp` where a closed form is known.
    pub fn moment_closed_form(&self, k: u32) -> Option<C64> {
        let k = f64::from(k);
        let raw = match &self.kind {
            DensityKind::Hurwitz { a, b } => (k + a).powf(-b),
            DensityKind::LogMix(m) => 1.0 / (k.powf(m.b()) + k.ln()),
            DensityKind::Stirling => (reference_lngamma(k + 1.0).ok()? - (k + 1.0) * k.ln() + k).exp(),
            DensityKind::ExpSqrt { gamma } => (-gamma * k.sqrt()).exp(),
            DensityKind::Custom(_) => return None,
        };
        Some(self.normalization * raw)
    }

    /// Builtin name and parameters, when the density is a builtin.
    pub fn builtin(&self) -> Option<BuiltinSpec> {
        BuiltinSpec::of(self)
    }
}

/// One `(a_j, F_j)` pair.
#[derive(Debug, Clone)]
pub struct Term {
    pub a: C64,
    pub density: Density,
}

impl Term {
    pub fn new(a: C64, density: Density) -> Self {
        Term { a, density }
    }
}

/// A finite set of terms; immutable once built.
#[derive(Debug, Clone)]
pub struct CoefficientModel {
    terms: Vec<Term>,
    label: String,
}

impl CoefficientModel {
    pub fn new(terms: Vec<Term>) -> Result<Self> {
        if terms.is_empty() {
            return Err(ResumError::Validation("a model needs at least one term".into()));
        }
        for (i, t) in terms.iter().enumerate() {
            if !(t.a.norm() > 0.0 && t.a.re.is_finite() && t.a.im.is_finite()) {
                return Err(ResumError::Validation(format!(
                    "term {i}: a must be finite and nonzero"
                )));
            }
            for (j, u) in terms.iter().enumerate().take(i) {
                let gap = (t.a / u.a).arg().abs();
                if gap < 1e-12 {
                    return Err(ResumError::Validation(format!(
                        "terms {j} and {i} share the direction of a"
                    )));
                }
            }
        }
        let label = terms
            .iter()
            .map(|t| match t.density.builtin() {
                Some(b) => b.label(),
                None => "custom".to_string(),
            })
            .collect::<Vec<_>>()
            .join("+");
        Ok(CoefficientModel { terms, label })
    }

    pub fn single(a: C64, density: Density) -> Result<Self> {
        Self::new(vec![Term::new(a, density)])
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    /// Same model with every `a_j` multiplied by `factor`.
    pub fn scaled(&self, factor: C64) -> Result<Self> {
        let terms = self
            .terms
            .iter()
            .map(|t| Term::new(t.a * factor, t.density.clone()))
            .collect();
        Ok(CoefficientModel::new(terms)?.with_label(self.label.clone()))
    }

    /// `c_k` from the registered closed forms, when every term has one.
    pub fn closed_form(&self, k: u32) -> Option<C64> {
        let mut sum = C64::new(0.0, 0.0);
        for t in &self.terms {
            sum += t.a.powi(-(k as i32)) * t.density.moment_closed_form(k)?;
        }
        Some(sum)
    }

    /// `c_k` by quadrature.
    pub fn coefficient(&self, k: u32, tol: f64) -> Result<C64> {
        coefficients_from_model(self, k, tol)
    }

    /// Largest `|a_j|^{-1}`: the reciprocal radius of convergence.
    pub fn inverse_radius(&self) -> f64 {
        self.terms.iter().map(|t| 1.0 / t.a.norm()).fold(0.0, f64::max)
    }
}

/// Hurwitz-type model `c_k = (k + a)^{-b}`, `a₁ = 1`.
pub fn density_hurwitz(a: f64, b: f64) -> Result<CoefficientModel> {
    let contour = if b >= 1.0 {
        ContourKind::Ray
    } else {
        ContourKind::Hankel
    };
    CoefficientModel::single(C64::new(1.0, 0.0), Density::hurwitz(a, b, contour)?)
}

/// `c_k = 1/(k^b + ln k)`, `a₁ = 1`.
pub fn density_logmix(b: f64) -> Result<CoefficientModel> {
    CoefficientModel::single(C64::new(1.0, 0.0), Density::logmix(b)?)
}

/// `c_k = k! k^{-k-1}`, with `a₁ = e`.
pub fn density_stirling_f3() -> CoefficientModel {
    CoefficientModel::single(C64::new(std::f64::consts::E, 0.0), Density::stirling()).expect("single valid term")
}

/// `c_k = e^{-γ√k}`, `a₁ = 1`.
pub fn density_exp_sqrt(gamma: f64) -> Result<CoefficientModel> {
    CoefficientModel::single(C64::new(1.0, 0.0), Density::exp_sqrt(gamma)?)
}

/// `c_k = Σ_j a_j^{-k} ∫ e^{-kp} F_j(p) dp` to absolute tolerance `tol`.
pub fn coefficients_from_model(m: &CoefficientModel, k: u32, tol: f64) -> Result<C64> {
    if k == 0 {
        return Err(ResumError::Validation("coefficients start at k = 1".into()));
    }
    let kf = f64::from(k);
    let mut sum = C64::new(0.0, 0.0);
    for t in m.terms() {
        if kf <= t.density.growth_rate {
            return Err(ResumError::Domain(format!(
                "moment k={k} diverges for a density growing like e^{{{}p}}",
                t.density.growth_rate
            )));
        }
        let scale = t.a.powi(-(k as i32));
        let share = tol / (m.terms().len() as f64 * scale.norm().max(1e-300));
        let r = t.density.integrate(|p| (-kf * p).exp(), share)?;
        sum += scale * r.value;
    }
    Ok(sum)
}
