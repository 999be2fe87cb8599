//! Global integral representations of analytic functions built from their
//! Taylor coefficients.
//!
//! When the coefficients of `f(z) = Σ c_k z^k` are Laplace-type integrals
//!
//! ```text
//! c_k = Σ_j a_j^{-k} ∮ e^{-kp} F_j(p) dp      (k ≥ 1)
//! ```
//!
//! the series can be summed under the integral sign. The result is an integral
//! representation valid on the whole plane minus the rays `{a_j t : t ≥ 1}`.
//! The same construction handles entire functions `Σ c_k z^k / k!` and Borel
//! sums of the divergent series `Σ c_k k! x^{-k-1}`.
//!
//! Modules:
//! * [`contour`]: Hankel contours, rays, arcs and spirals, with adaptive quadrature.
//! * [`specfun`]: branches of `s - ln s = t`, the Stirling density, `Ei`, `ln Γ`.
//! * [`model`]: coefficient models and the built-in densities.
//! * [`reconstruct`]: evaluation of the reconstructed functions and the inverse map.
//! * [`analysis`]: cut jumps, singularity probes and growth scans.
//! * [`cli`]: the command-line front end.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod analysis;
pub mod cli;
pub mod contour;
mod error;
pub mod model;
pub mod reconstruct;
pub mod specfun;

pub use error::{Result, ResumError};
pub use num_complex::Complex64;

pub(crate) type C64 = Complex64;

/// Library version, written into JSON output.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
