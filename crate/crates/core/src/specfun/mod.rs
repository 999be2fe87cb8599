//! Special functions used by the reconstruction formulas.

mod expint;
mod gamma;
mod lambert;
mod stirling;

pub use expint::{exp_integral_ei, scaled_e1};
pub use gamma::{gamma, reference_lngamma};
pub use lambert::{lambert_branches, BranchPair};
pub use stirling::{stirling_density, stirling_density_series, SERIES_RADIUS};
