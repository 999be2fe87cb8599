use num_complex::Complex64;
use thiserror::Error;

/// Every failure the library reports.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum ResumError {
    #[error("quadrature did not converge: best value {value}, error estimate {abs_error_estimate:e}")]
    NonConvergence { value: Complex64, abs_error_estimate: f64 },
    #[error("integrand not finite at {at}")]
    EvaluationFailure { at: Complex64 },
    #[error("domain error: {0}")]
    Domain(String),
    #[error("branch confluence at p = {0}: use the series form")]
    BranchConfluence(Complex64),
    #[error("denominator vanishes near the contour at u = {0}")]
    DenominatorZero(Complex64),
    #[error("root search incomplete: {found} roots found, argument principle counts {counted}")]
    RootSearch { found: usize, counted: usize },
    #[error("point {0} lies on a cut; use the side-limit API")]
    OnCut(Complex64),
    #[error("pole at p = {0} lies on the integration contour")]
    PoleOnContour(Complex64),
    #[error("contour pinch: {0}")]
    ContourPinch(String),
    #[error("not implemented: {0}")]
    NotImplemented(String),
    #[error("decay violation: {0}")]
    DecayViolation(String),
    #[error("side limits did not stabilise: {0}")]
    ExtrapolationFailure(String),
    #[error("function has no singular ray")]
    NoSingularity,
    #[error("invalid input: {0}")]
    Validation(String),
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, ResumError>;

impl ResumError {
    /// True for errors caused by the numerics rather than by the input.
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            ResumError::NonConvergence { .. }
                | ResumError::EvaluationFailure { .. }
                | ResumError::BranchConfluence(_)
                | ResumError::DenominatorZero(_)
                | ResumError::RootSearch { .. }
                | ResumError::PoleOnContour(_)
                | ResumError::ContourPinch(_)
                | ResumError::DecayViolation(_)
                | ResumError::ExtrapolationFailure(_)
        )
    }
}

impl From<std::io::Error> for ResumError {
    fn from(e: std::io::Error) -> Self {
        ResumError::Io(e.to_string())
    }
}
