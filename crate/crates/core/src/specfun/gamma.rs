use crate::{Result, ResumError};

/// `ln Γ(x)` for `x > 0`.
pub fn reference_lngamma(x: f64) -> Result<f64> {
    if !(x > 0.0 && x.is_finite()) {
        return Err(ResumError::Domain(format!("ln Γ needs x > 0, got {x}")));
    }
    Ok(statrs::function::gamma::ln_gamma(x))
}

/// `Γ(x)` for real `x` off the nonpositive integers.
pub fn gamma(x: f64) -> Result<f64> {
    if x <= 0.0 && x == x.round() {
        return Err(ResumError::Domain(format!("Γ has a pole at {x}")));
    }
    Ok(statrs::function::gamma::gamma(x))
}
