use super::{check_tol, expm1, Evaluation, FunctionKind, GlobalFunction};
use crate::{Result, ResumError, C64};

/// `Σ c_k z^k / k!` as `Σ_j ∫ (exp(z e^{-p} / a_j) - 1) F_j(p) dp`, valid on all of ℂ.
pub fn eval_entire(g: &GlobalFunction, z: C64, tol: f64) -> Result<Evaluation> {
    check_tol(tol)?;
    if g.kind != FunctionKind::Entire {
        return Err(ResumError::Validation(
            "eval_entire needs an entire-kind function".into(),
        ));
    }
    let mut out = Evaluation {
        value: g.f0,
        abs_error_estimate: 0.0,
    };
    if z.norm() == 0.0 {
        return Ok(out);
    }
    let share = tol / g.model.terms().len() as f64;
    for t in g.model.terms() {
        let a = t.a;
        let r = t.density.integrate(|p| expm1(z * (-p).exp() / a), share)?;
        out.value += r.value;
        out.abs_error_estimate += r.abs_error_estimate;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::density_hurwitz;

    #[test]
    fn exponential_series_of_hurwitz() {
        let g = GlobalFunction::entire(density_hurwitz(1.0, 1.0).unwrap()).unwrap();
        // Σ_{k≥1} 1/(k+1)! = e - 2
        let v = g.eval(C64::new(1.0, 0.0), 1e-12).unwrap().value;
        assert!((v.re - (std::f64::consts::E - 2.0)).abs() < 1e-11);
        assert_eq!(g.eval(C64::new(0.0, 0.0), 1e-8).unwrap().value, C64::new(0.0, 0.0));
    }
}
