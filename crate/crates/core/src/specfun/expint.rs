//! Exponential integrals: real `Ei` and the scaled complex `e^ζ E₁(ζ)`.

use crate::{Complex64, Result, ResumError};

const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// `Σ_{k≥1} x^k / (k·k!)`.
fn ein_series(x: f64) -> f64 {
    let mut term = 1.0;
    let mut sum = 0.0;
    for k in 1..500 {
        term *= x / k as f64;
        let add = term / k as f64;
        sum += add;
        if add.abs() <= f64::EPSILON * sum.abs() {
            break;
        }
    }
    sum
}

/// `E₁(y)` for `y > 1` by the continued fraction.
fn e1_fraction(y: f64) -> f64 {
    let z = Complex64::new(y, 0.0);
    (scaled_e1_fraction(z).re) * (-y).exp()
}

/// Exponential integral `Ei(x)`, principal value for `x > 0`.
pub fn exp_integral_ei(x: f64) -> Result<f64> {
    if x == 0.0 || !x.is_finite() {
        return Err(ResumError::Domain(format!("Ei is undefined at {x}")));
    }
    if x > 40.0 {
        // Asymptotic series, truncated at its smallest term.
        let mut term = 1.0;
        let mut sum = 1.0;
        for k in 1..(x as usize) {
            let next = term * k as f64 / x;
            if next > term {
                break;
            }
            term = next;
            sum += term;
            if term < f64::EPSILON * sum {
                break;
            }
        }
        return Ok(x.exp() / x * sum);
    }
    if x > 0.0 || x >= -1.0 {
        return Ok(EULER_GAMMA + x.abs().ln() + ein_series(x));
    }
    Ok(-e1_fraction(-x))
}

fn scaled_e1_fraction(z: Complex64) -> Complex64 {
    // e^z E₁(z) = 1/(z+1- 1/(z+3- 4/(z+5- ...))), modified Lentz.
    let tiny = Complex64::new(1e-300, 0.0);
    let mut b = z + 1.0;
    let mut c = Complex64::new(1.0 / 1e-300, 0.0);
    let mut d = 1.0 / b;
    let mut h = d;
    for i in 1..20000 {
        let an = -((i * i) as f64);
        b += 2.0;
        d = an * d + b;
        if d.norm() < 1e-300 {
            d = tiny;
        }
        c = b + an / c;
        if c.norm() < 1e-300 {
            c = tiny;
        }
        d = 1.0 / d;
        let del = c * d;
        h *= del;
        if (del - 1.0).norm() < 1e-16 {
            break;
        }
    }
    h
}

fn scaled_e1_series(z: Complex64) -> Complex64 {
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = Complex64::new(0.0, 0.0);
    for k in 1..2000 {
        term *= -z / k as f64;
        let add = term / k as f64;
        sum += add;
        if add.norm() <= f64::EPSILON * sum.norm().max(1e-300) {
            break;
        }
    }
    (-EULER_GAMMA - z.ln() - sum) * z.exp()
}

/// `e^ζ E₁(ζ)` on the principal branch, cut along `(-∞, 0]`.
pub fn scaled_e1(z: Complex64) -> Result<Complex64> {
    if z.norm() == 0.0 || !(z.re.is_finite() && z.im.is_finite()) {
        return Err(ResumError::Domain(format!("E₁ is undefined at {z}")));
    }
    let near_negative_axis = z.re < 0.0 && z.im.abs() < 0.5 * z.norm();
    if z.norm() <= 2.0 || (near_negative_axis && z.norm() < 40.0) {
        Ok(scaled_e1_series(z))
    } else {
        Ok(scaled_e1_fraction(z))
    }
}
