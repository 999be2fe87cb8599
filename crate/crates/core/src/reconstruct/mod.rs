//! Evaluation of functions rebuilt from a coefficient model.
//!
//! For `f(z) = f(0) + Σ_{k≥1} c_k z^k` with `c_k` given by a [`CoefficientModel`],
//! summing the geometric series under the integral gives
//!
//! ```text
//! f(z) = f(0) + Σ_j z ∫_{C_j} F_j(p) / (a_j e^p - z) dp
//! ```
//!
//! which holds on the plane cut along the rays `a_j [1, ∞)`. The same trick
//! with the exponential series gives entire functions `Σ c_k z^k / k!`, and a
//! further Laplace transform gives Borel sums of `Σ c_k k! x^{-k-1}`.

mod borel;
mod corpus;
mod entire;
mod finite;
mod inverse;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::model::CoefficientModel;
use crate::{Result, ResumError, C64};

pub use borel::{borel_sum, borel_sum_iterated};
pub use corpus::{eval_f3, eval_f4, laplace_of_entire, lngamma_via_sum};
pub use entire::eval_entire;
pub use finite::eval_finite_radius;
pub use inverse::{coefficients_from_function, FunctionSpec};

/// How the coefficients are summed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FunctionKind {
    /// `Σ c_k z^k`, continued past its disk of convergence.
    FiniteRadius,
    /// `Σ c_k z^k / k!`.
    Entire,
    /// Borel sum of `Σ c_k k! x^{-k-1}`.
    Borel,
}

/// A value with its estimated absolute error.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Evaluation {
    pub value: C64,
    pub abs_error_estimate: f64,
}

/// A model, a constant term and a summation mode.
#[derive(Debug, Clone)]
pub struct GlobalFunction {
    pub model: CoefficientModel,
    pub f0: C64,
    pub kind: FunctionKind,
}

impl GlobalFunction {
    pub fn new(model: CoefficientModel, kind: FunctionKind) -> Result<Self> {
        for t in model.terms() {
            if !(t.density.growth_rate < 1.0) {
                return Err(ResumError::Domain(format!(
                    "density grows like e^{{{}p}}; the first coefficient integral diverges",
                    t.density.growth_rate
                )));
            }
        }
        Ok(GlobalFunction {
            model,
            f0: C64::new(0.0, 0.0),
            kind,
        })
    }

    pub fn finite_radius(model: CoefficientModel) -> Result<Self> {
        Self::new(model, FunctionKind::FiniteRadius)
    }

    pub fn entire(model: CoefficientModel) -> Result<Self> {
        Self::new(model, FunctionKind::Entire)
    }

    pub fn borel(model: CoefficientModel) -> Result<Self> {
        Self::new(model, FunctionKind::Borel)
    }

    pub fn with_f0(mut self, f0: C64) -> Self {
        self.f0 = f0;
        self
    }

    /// `f(z)`; Borel-kind functions evaluate their finite-radius generating function.
    pub fn eval(&self, z: C64, tol: f64) -> Result<Evaluation> {
        match self.kind {
            FunctionKind::Entire => eval_entire(self, z, tol),
            FunctionKind::FiniteRadius | FunctionKind::Borel => eval_finite_radius(self, z, tol),
        }
    }
}

/// Evaluate at many points in parallel; results keep the input order.
pub fn eval_many(g: &GlobalFunction, points: &[C64], tol: f64) -> Vec<Result<Evaluation>> {
    points.par_iter().map(|&z| g.eval(z, tol)).collect()
}

pub(crate) fn check_tol(tol: f64) -> Result<()> {
    if tol > 0.0 && tol.is_finite() {
        Ok(())
    } else {
        Err(ResumError::Validation(format!("tolerance must be positive, got {tol}")))
    }
}

/// `e^x - 1` without cancellation for small `|x|`.
pub(crate) fn expm1(x: C64) -> C64 {
    if x.norm() < 1e-3 {
        x * (1.0 + x / 2.0 * (1.0 + x / 3.0 * (1.0 + x / 4.0 * (1.0 + x / 5.0))))
    } else {
        x.exp() - 1.0
    }
}
