//! Integration paths in the complex plane.
//!
//! The central object is the Hankel contour `Γ_ε` around `[0, ∞)`: the ray
//! `{x - iε}` traversed leftward, the left semicircle `|s| = ε` traversed
//! clockwise, and the ray `{x + iε}` traversed rightward. [`oint`] integrates
//! over it. Functions with a cut on `[0, ∞)` are evaluated with
//! [`log_hankel`]: `arg s ∈ (-2π, 0]`, so the upper bank carries `-2π` and the
//! lower bank `0`.
//!
//! Finite pieces use adaptive Gauss-Kronrod, switching to tanh-sinh when an
//! endpoint carries an integrable singularity. Rays are cut where the declared
//! (or sampled) tail bound drops below a tenth of the tolerance.

mod gauss_kronrod;
mod tanh_sinh;

use std::f64::consts::{FRAC_PI_2, TAU};

use serde::{Deserialize, Serialize};

use crate::{Result, ResumError, C64};

const MAX_PANELS: usize = 4000;
const MAX_TAIL_DOUBLINGS: usize = 80;

/// `ln s` with the cut on `[0, ∞)` and `arg s ∈ (-2π, 0]`.
pub fn log_hankel(s: C64) -> C64 {
    let mut arg = s.arg();
    if arg > 0.0 {
        arg -= TAU;
    }
    C64::new(s.norm().ln(), arg)
}

/// `ln p` on the branch that is continuous along `C₁` and in a neighbourhood of it.
///
/// Along the spiral this agrees with [`log_hankel`]; near the tail ray
/// `[1, ∞)` it is the principal logarithm, so the tail may be tilted either way.
pub fn log_c1(p: C64) -> C64 {
    let phi = p.arg();
    if phi > 0.0 && phi < FRAC_PI_2 && p.norm() > 0.5 {
        p.ln()
    } else {
        log_hankel(p)
    }
}

/// `s^e` on the same branch as [`log_hankel`].
pub fn pow_hankel(s: C64, e: C64) -> C64 {
    (e * log_hankel(s)).exp()
}

/// Which ends of a line segment carry an integrable singularity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SingularEnds {
    #[default]
    None,
    Start,
    End,
    Both,
}

/// Bound used to truncate an infinite ray.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum TailBound {
    /// Integrate chunks of doubling length until two consecutive chunks are negligible.
    #[default]
    Adaptive,
    /// `|f(start + r·direction)| ≤ C r^exponent e^{-rate·r}`; `C` is sampled when absent.
    Declared {
        rate: f64,
        exponent: f64,
        constant: Option<f64>,
    },
}

/// Parameterised spirals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SpiralKind {
    /// `p(θ) = θ e^{2πiθ}`: starts at 0, winds once counterclockwise, ends at 1.
    S1,
}

/// One piece of an integration contour.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PathSegment {
    Line {
        start: C64,
        end: C64,
        #[serde(default)]
        singular_ends: SingularEnds,
    },
    /// `start + r·direction` for `r ∈ [0, ∞)`; `inbound` reverses the orientation.
    Ray {
        start: C64,
        direction: C64,
        #[serde(default)]
        inbound: bool,
        #[serde(default)]
        singular_start: bool,
        #[serde(default)]
        tail: TailBound,
    },
    /// `center + radius·e^{iθ}` for θ from `angle_from` to `angle_to`.
    Arc {
        center: C64,
        radius: f64,
        angle_from: f64,
        angle_to: f64,
    },
    /// `scale · spiral(θ)` for θ from `theta_from` to `theta_to`.
    Spiral {
        spiral: SpiralKind,
        theta_from: f64,
        theta_to: f64,
        scale: f64,
    },
}

impl PathSegment {
    pub fn line(start: C64, end: C64) -> Self {
        PathSegment::Line {
            start,
            end,
            singular_ends: SingularEnds::None,
        }
    }

    /// Outbound ray; the direction is normalised.
    pub fn ray(start: C64, direction: C64) -> Self {
        PathSegment::Ray {
            start,
            direction: direction / direction.norm(),
            inbound: false,
            singular_start: false,
            tail: TailBound::Adaptive,
        }
    }

    pub fn arc(center: C64, radius: f64, angle_from: f64, angle_to: f64) -> Self {
        PathSegment::Arc {
            center,
            radius,
            angle_from,
            angle_to,
        }
    }

    /// The spiral `S₁`, `θ ∈ [0, 1]`.
    pub fn spiral_s1() -> Self {
        PathSegment::Spiral {
            spiral: SpiralKind::S1,
            theta_from: 0.0,
            theta_to: 1.0,
            scale: 1.0,
        }
    }

    /// Point at parameter `t` (arc angle, spiral θ, ray distance or line fraction).
    pub fn point(&self, t: f64) -> C64 {
        match *self {
            PathSegment::Line { start, end, .. } => start + (end - start) * t,
            PathSegment::Ray { start, direction, .. } => start + direction * t,
            PathSegment::Arc { center, radius, .. } => center + C64::from_polar(radius, t),
            PathSegment::Spiral {
                spiral: SpiralKind::S1,
                scale,
                ..
            } => C64::from_polar(scale * t, TAU * t),
        }
    }

    /// `dp/dt` at parameter `t`.
    pub fn derivative(&self, t: f64) -> C64 {
        match *self {
            PathSegment::Line { start, end, .. } => end - start,
            PathSegment::Ray { direction, .. } => direction,
            PathSegment::Arc { radius, .. } => C64::i() * C64::from_polar(radius, t),
            PathSegment::Spiral {
                spiral: SpiralKind::S1,
                scale,
                ..
            } => C64::new(1.0, TAU * t) * C64::from_polar(scale, TAU * t),
        }
    }

    pub fn start(&self) -> C64 {
        match *self {
            PathSegment::Line { start, .. } | PathSegment::Ray { start, .. } => start,
            PathSegment::Arc { angle_from, .. } => self.point(angle_from),
            PathSegment::Spiral { theta_from, .. } => self.point(theta_from),
        }
    }

    /// `None` for rays.
    pub fn end(&self) -> Option<C64> {
        match *self {
            PathSegment::Line { end, .. } => Some(end),
            PathSegment::Ray { .. } => None,
            PathSegment::Arc { angle_to, .. } => Some(self.point(angle_to)),
            PathSegment::Spiral { theta_to, .. } => Some(self.point(theta_to)),
        }
    }

    /// Split a finite segment at parameter `t`.
    pub fn split_at(&self, t: f64) -> Option<(PathSegment, PathSegment)> {
        match self {
            PathSegment::Line { start, end, .. } => {
                let mid = self.point(t);
                Some((PathSegment::line(*start, mid), PathSegment::line(mid, *end)))
            }
            PathSegment::Arc {
                center,
                radius,
                angle_from,
                angle_to,
            } => Some((
                PathSegment::arc(*center, *radius, *angle_from, t),
                PathSegment::arc(*center, *radius, t, *angle_to),
            )),
            PathSegment::Spiral {
                spiral,
                theta_from,
                theta_to,
                scale,
            } => Some((
                PathSegment::Spiral {
                    spiral: *spiral,
                    theta_from: *theta_from,
                    theta_to: t,
                    scale: *scale,
                },
                PathSegment::Spiral {
                    spiral: *spiral,
                    theta_from: t,
                    theta_to: *theta_to,
                    scale: *scale,
                },
            )),
            PathSegment::Ray { .. } => None,
        }
    }

    fn validate(&self) -> Result<()> {
        let finite = |z: C64| z.re.is_finite() && z.im.is_finite();
        match *self {
            PathSegment::Line { start, end, .. } if finite(start) && finite(end) => Ok(()),
            PathSegment::Ray { start, direction, .. } if finite(start) && (direction.norm() - 1.0).abs() < 1e-12 => {
                Ok(())
            }
            PathSegment::Arc {
                center,
                radius,
                angle_from,
                angle_to,
            } if finite(center) && radius > 0.0 && angle_from.is_finite() && angle_to.is_finite() => Ok(()),
            PathSegment::Spiral {
                theta_from,
                theta_to,
                scale,
                ..
            } if scale > 0.0 && (0.0..=1.0).contains(&theta_from) && (0.0..=1.0).contains(&theta_to) => Ok(()),
            _ => Err(ResumError::Validation(format!("malformed path segment {self:?}"))),
        }
    }
}

/// The Hankel contour `Γ_ε`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HankelContour {
    pub epsilon: f64,
}

impl HankelContour {
    pub fn new(epsilon: f64) -> Result<Self> {
        if !(epsilon > 0.0 && epsilon.is_finite()) {
            return Err(ResumError::Validation(format!(
                "epsilon must be positive, got {epsilon}"
            )));
        }
        Ok(HankelContour { epsilon })
    }

    /// Lower ray (inbound), clockwise left semicircle, upper ray (outbound).
    pub fn segments(&self) -> [PathSegment; 3] {
        let e = self.epsilon;
        [
            PathSegment::Ray {
                start: C64::new(0.0, -e),
                direction: C64::new(1.0, 0.0),
                inbound: true,
                singular_start: false,
                tail: TailBound::Adaptive,
            },
            PathSegment::arc(C64::new(0.0, 0.0), e, -FRAC_PI_2, -3.0 * FRAC_PI_2),
            PathSegment::ray(C64::new(0.0, e), C64::new(1.0, 0.0)),
        ]
    }

    /// True when `p` lies in the region enclosed by the contour (the side containing `(0, ∞)`).
    pub fn encloses(&self, p: C64) -> bool {
        p.norm() < self.epsilon || (p.re > 0.0 && p.im.abs() < self.epsilon)
    }

    /// Distance from `p` to the contour.
    pub fn distance(&self, p: C64) -> f64 {
        let e = self.epsilon;
        let to_ray = |y: f64| {
            if p.re >= 0.0 {
                (p.im - y).abs()
            } else {
                C64::new(p.re, p.im - y).norm()
            }
        };
        let to_arc = if p.re <= 0.0 {
            (p.norm() - e).abs()
        } else {
            C64::new(p.re, p.im.abs() - e).norm()
        };
        to_ray(e).min(to_ray(-e)).min(to_arc)
    }
}

/// Outcome of a contour integral.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadratureResult {
    pub value: C64,
    pub abs_error_estimate: f64,
    pub nodes_used: usize,
    /// Where infinite rays were cut; 0 when the contour has no rays.
    pub truncation_radius: f64,
}

impl QuadratureResult {
    fn zero() -> Self {
        QuadratureResult {
            value: C64::new(0.0, 0.0),
            abs_error_estimate: 0.0,
            nodes_used: 0,
            truncation_radius: 0.0,
        }
    }

    fn absorb(&mut self, other: QuadratureResult) {
        self.value += other.value;
        self.abs_error_estimate += other.abs_error_estimate;
        self.nodes_used += other.nodes_used;
        self.truncation_radius = self.truncation_radius.max(other.truncation_radius);
    }
}

fn checked<F>(f: &F, p: C64) -> Result<C64>
where
    F: Fn(C64) -> C64,
{
    let v = f(p);
    if v.re.is_finite() && v.im.is_finite() {
        Ok(v)
    } else {
        Err(ResumError::EvaluationFailure { at: p })
    }
}

fn finite_piece<F>(
    f: &F,
    seg: &PathSegment,
    t0: f64,
    t1: f64,
    singular: SingularEnds,
    tol: f64,
) -> Result<QuadratureResult>
where
    F: Fn(C64) -> C64,
{
    let g = |t: f64| -> Result<C64> { Ok(checked(f, seg.point(t))? * seg.derivative(t)) };
    let est = if singular == SingularEnds::None {
        gauss_kronrod::integrate(&g, t0, t1, tol, MAX_PANELS)?
    } else {
        tanh_sinh::integrate(&g, t0, t1, tol)?
    };
    Ok(QuadratureResult {
        value: est.value,
        abs_error_estimate: est.error,
        nodes_used: est.evals.max(1),
        truncation_radius: 0.0,
    })
}

/// Radius beyond which `C r^α e^{-kr} max(1, 1/k) < tol / 10`.
fn declared_cutoff<F>(
    f: &F,
    seg: &PathSegment,
    from: f64,
    rate: f64,
    exponent: f64,
    constant: Option<f64>,
    tol: f64,
) -> Result<f64>
where
    F: Fn(C64) -> C64,
{
    if !(rate > 0.0) {
        return Err(ResumError::Validation("declared tail rate must be positive".into()));
    }
    let envelope = |r: f64| r.powf(exponent) * (-rate * r).exp();
    let c = match constant {
        Some(c) => c,
        None => {
            let mut c: f64 = 0.0;
            for m in 0..4 {
                let r = from.max(1.0) * f64::from(1u32 << m);
                c = c.max(checked(f, seg.point(r))?.norm() / envelope(r));
            }
            c.max(f64::MIN_POSITIVE)
        }
    };
    let bound = |r: f64| c * envelope(r) * (1.0f64 / rate).max(1.0);
    let mut r = from.max(1.0);
    let mut steps = 0;
    while bound(r) >= tol / 10.0 || r < exponent.max(0.0) / rate {
        r *= 1.25;
        steps += 1;
        if steps > 2000 || !r.is_finite() {
            return Err(ResumError::DecayViolation(
                "declared tail bound never drops below tolerance".into(),
            ));
        }
    }
    Ok(r)
}

fn ray_integral<F>(f: &F, seg: &PathSegment, tol: f64) -> Result<QuadratureResult>
where
    F: Fn(C64) -> C64,
{
    let PathSegment::Ray {
        inbound,
        singular_start,
        tail,
        ..
    } = *seg
    else {
        unreachable!("ray_integral called on a finite segment");
    };
    let head_len = 1.0;
    let head_rule = if singular_start {
        SingularEnds::Start
    } else {
        SingularEnds::None
    };
    let mut total = finite_piece(f, seg, 0.0, head_len, head_rule, tol / 2.0)?;
    let tail_tol = tol / 2.0;
    match tail {
        TailBound::Declared {
            rate,
            exponent,
            constant,
        } => {
            let cutoff = declared_cutoff(f, seg, head_len, rate, exponent, constant, tol)?;
            let mut a = head_len;
            let mut i = 0;
            while a < cutoff {
                let b = (2.0 * a).min(cutoff);
                let piece = finite_piece(
                    f,
                    seg,
                    a,
                    b,
                    SingularEnds::None,
                    (tail_tol * 0.5f64.powi(i + 1)).max(tail_tol * 1e-3),
                )?;
                total.absorb(piece);
                a = b;
                i += 1;
            }
            total.truncation_radius = cutoff;
        }
        TailBound::Adaptive => {
            let mut a = head_len;
            let mut quiet = 0;
            let mut converged = false;
            for i in 0..MAX_TAIL_DOUBLINGS {
                let b = 2.0 * a;
                let chunk_tol = (tail_tol * 0.5f64.powi(i as i32 + 1)).max(tail_tol * 1e-3);
                let piece = finite_piece(f, seg, a, b, SingularEnds::None, chunk_tol)?;
                let size = piece.value.norm() + piece.abs_error_estimate;
                total.absorb(piece);
                a = b;
                if size < tol / 10.0 {
                    quiet += 1;
                    if quiet >= 2 {
                        converged = true;
                        break;
                    }
                } else {
                    quiet = 0;
                }
            }
            if !converged {
                return Err(ResumError::NonConvergence {
                    value: total.value,
                    abs_error_estimate: f64::INFINITY,
                });
            }
            total.truncation_radius = a;
        }
    }
    if inbound {
        total.value = -total.value;
    }
    Ok(total)
}

/// Integrate `f` along one segment with absolute tolerance `tol`.
pub fn integrate_segment<F>(f: F, seg: &PathSegment, tol: f64) -> Result<QuadratureResult>
where
    F: Fn(C64) -> C64,
{
    if !(tol > 0.0) {
        return Err(ResumError::Validation(format!("tolerance must be positive, got {tol}")));
    }
    seg.validate()?;
    match *seg {
        PathSegment::Ray { .. } => ray_integral(&f, seg, tol),
        PathSegment::Line { singular_ends, .. } => finite_piece(&f, seg, 0.0, 1.0, singular_ends, tol),
        PathSegment::Arc {
            angle_from, angle_to, ..
        } => finite_piece(&f, seg, angle_from, angle_to, SingularEnds::None, tol),
        PathSegment::Spiral {
            theta_from, theta_to, ..
        } => {
            // The spiral's origin end is where densities such as p^{-3/2} e^{-1/4p} live.
            let ends = if theta_from == 0.0 {
                SingularEnds::Start
            } else {
                SingularEnds::None
            };
            let mut total = QuadratureResult::zero();
            // Quarter turns keep each panel's integrand mildly varying.
            let mut cuts = vec![theta_from];
            for q in [0.25, 0.5, 0.75] {
                if q > theta_from.min(theta_to) && q < theta_from.max(theta_to) {
                    cuts.push(q);
                }
            }
            if theta_to < theta_from {
                cuts[1..].reverse();
            }
            cuts.push(theta_to);
            let n = (cuts.len() - 1) as f64;
            for (i, w) in cuts.windows(2).enumerate() {
                let rule = if i == 0 { ends } else { SingularEnds::None };
                total.absorb(finite_piece(&f, seg, w[0], w[1], rule, tol / n)?);
            }
            Ok(total)
        }
    }
}

/// Sum of per-segment integrals over a piecewise contour.
pub fn integrate_custom<F>(f: F, contour: &[PathSegment], tol: f64) -> Result<QuadratureResult>
where
    F: Fn(C64) -> C64,
{
    if contour.is_empty() {
        return Err(ResumError::Validation("empty contour".into()));
    }
    let share = tol / contour.len() as f64;
    let mut total = QuadratureResult::zero();
    for seg in contour {
        total.absorb(integrate_segment(&f, seg, share)?);
    }
    total.nodes_used = total.nodes_used.max(1);
    Ok(total)
}

/// `∮₀^∞ f(s) ds` over `Γ_ε`.
pub fn oint<F>(f: F, epsilon: f64, tol: f64) -> Result<QuadratureResult>
where
    F: Fn(C64) -> C64,
{
    let contour = HankelContour::new(epsilon)?;
    let [lower, arc, upper] = contour.segments();
    // The arc is short and smooth; the rays carry the tails.
    let mut total = integrate_segment(&f, &lower, 0.4 * tol)?;
    total.absorb(integrate_segment(&f, &arc, 0.2 * tol)?);
    total.absorb(integrate_segment(&f, &upper, 0.4 * tol)?);
    Ok(total)
}

/// The contour `C₁`: the spiral `S₁` followed by `[1, ∞)`.
pub fn c1_contour() -> [PathSegment; 2] {
    [
        PathSegment::spiral_s1(),
        PathSegment::ray(C64::new(1.0, 0.0), C64::new(1.0, 0.0)),
    ]
}

/// Winding number of the closed loop `S₁ ∪ [1 → 0]` around `p`; `None` if `p` is on or too near the loop.
pub fn c1_loop_winding(p: C64) -> Option<i32> {
    const STEPS: usize = 4096;
    let spiral = PathSegment::spiral_s1();
    let mut pts: Vec<C64> = (0..=STEPS).map(|i| spiral.point(i as f64 / STEPS as f64)).collect();
    pts.extend((1..=STEPS / 8).map(|i| C64::new(1.0 - i as f64 / (STEPS / 8) as f64, 0.0)));
    let mut turn = 0.0;
    for w in pts.windows(2) {
        let (u, v) = (w[0] - p, w[1] - p);
        if u.norm() < 1e-9 || v.norm() < 1e-9 {
            return None;
        }
        turn += (v / u).arg();
    }
    Some((turn / TAU).round() as i32)
}

/// Distance from `p` to the contour `C₁` (sampled on the spiral, exact on the ray).
pub fn c1_distance(p: C64) -> f64 {
    const STEPS: usize = 4096;
    let spiral = PathSegment::spiral_s1();
    let mut d = (0..=STEPS)
        .map(|i| (spiral.point(i as f64 / STEPS as f64) - p).norm())
        .fold(f64::INFINITY, f64::min);
    let ray_d = if p.re >= 1.0 { p.im.abs() } else { (p - 1.0).norm() };
    d = d.min(ray_d);
    d
}

/// Run an integrator on a fallible integrand, surfacing the first error it raised.
pub(crate) fn fallible<F, R>(f: F, run: impl FnOnce(&dyn Fn(C64) -> C64) -> Result<R>) -> Result<R>
where
    F: Fn(C64) -> Result<C64>,
{
    let failure = std::cell::RefCell::new(None);
    let g = |p: C64| match f(p) {
        Ok(v) => v,
        Err(e) => {
            failure.borrow_mut().get_or_insert(e);
            C64::new(f64::NAN, 0.0)
        }
    };
    let out = run(&g);
    match failure.into_inner() {
        Some(e) => Err(e),
        None => out,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn exponential_on_positive_ray() {
        let r = integrate_segment(|s: C64| (-s).exp(), &PathSegment::ray(c(0.0, 0.0), c(1.0, 0.0)), 1e-10).unwrap();
        assert!((r.value - c(1.0, 0.0)).norm() < 1e-10);
        assert!(r.truncation_radius > 20.0);
        assert!(r.abs_error_estimate >= 0.0 && r.nodes_used >= 1);
    }

    #[test]
    fn constant_over_arc_is_endpoint_difference() {
        let seg = PathSegment::arc(c(0.0, 0.0), 1.0, FRAC_PI_2, 3.0 * FRAC_PI_2);
        let r = integrate_segment(|_| c(1.0, 0.0), &seg, 1e-12).unwrap();
        let exact = seg.end().unwrap() - seg.start();
        assert!((r.value - exact).norm() < 1e-13);
        assert!((exact - c(0.0, -2.0)).norm() < 1e-15);
    }

    #[test]
    fn lorentzian_on_ray_matches_arctan() {
        let r = integrate_segment(
            |s: C64| 1.0 / (1.0 + s * s),
            &PathSegment::ray(c(0.0, 0.0), c(1.0, 0.0)),
            1e-9,
        )
        .unwrap();
        // atan(∞) - atan(0)
        assert!((r.value.re - PI / 2.0).abs() < 1e-8, "{}", r.value);
    }

    #[test]
    fn declared_tail_truncates_where_bound_is_small() {
        let seg = PathSegment::Ray {
            start: c(0.0, 0.0),
            direction: c(1.0, 0.0),
            inbound: false,
            singular_start: false,
            tail: TailBound::Declared {
                rate: 1.0,
                exponent: 0.0,
                constant: Some(1.0),
            },
        };
        let r = integrate_segment(|s: C64| (-s).exp(), &seg, 1e-10).unwrap();
        assert!((r.value.re - 1.0).abs() < 1e-10);
        assert!(((-r.truncation_radius).exp()) < 1e-11);
    }

    #[test]
    fn log_hankel_banks() {
        assert!((log_hankel(c(2.0, 1e-300)).im + TAU).abs() < 1e-12);
        assert!(log_hankel(c(2.0, -1e-300)).im.abs() < 1e-12);
        assert!((log_hankel(c(-1.0, 0.0)).im + PI).abs() < 1e-15);
    }

    #[test]
    fn hankel_segments_join_up() {
        let h = HankelContour::new(0.3).unwrap();
        let [lower, arc, upper] = h.segments();
        assert!((arc.start() - lower.start()).norm() < 1e-15);
        assert!((arc.end().unwrap() - upper.start()).norm() < 1e-15);
        assert!(h.encloses(c(5.0, 0.1)) && h.encloses(c(-0.1, 0.0)) && !h.encloses(c(-0.5, 0.0)));
        assert!((h.distance(c(2.0, 0.0)) - 0.3).abs() < 1e-15);
    }

    #[test]
    fn hankel_of_entire_function_vanishes() {
        let r = oint(|s: C64| (-s).exp(), 0.25, 1e-12).unwrap();
        assert!(r.value.norm() < 1e-11);
    }

    #[test]
    fn hankel_of_inverse_sqrt() {
        let r = oint(|s: C64| pow_hankel(s, c(-0.5, 0.0)) * (-s).exp(), 0.25, 1e-12).unwrap();
        assert!((r.value - c(-2.0 * PI.sqrt(), 0.0)).norm() < 1e-10, "{}", r.value);
    }

    #[test]
    fn hankel_of_log_is_minus_two_pi_i() {
        let r = oint(|s: C64| (-s).exp() * log_hankel(s), 0.25, 1e-12).unwrap();
        assert!((r.value - c(0.0, -TAU)).norm() < 1e-10, "{}", r.value);
    }

    #[test]
    fn c1_branch_is_continuous_along_the_contour() {
        let [spiral, _] = c1_contour();
        let mut prev = log_c1(spiral.point(0.01));
        for i in 21..=2000 {
            let cur = log_c1(spiral.point(i as f64 / 2000.0));
            assert!((cur - prev).norm() < 0.05, "jump at step {i}");
            prev = cur;
        }
        assert!((log_c1(c(3.0, 0.5)) - c(3.0, 0.5).ln()).norm() < 1e-15);
        assert!((log_c1(c(3.0, -0.5)) - c(3.0, -0.5).ln()).norm() < 1e-15);
    }

    #[test]
    fn spiral_endpoints() {
        let s = PathSegment::spiral_s1();
        assert!(s.start().norm() < 1e-15);
        assert!((s.end().unwrap() - c(1.0, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn winding_around_spiral_loop() {
        assert_eq!(c1_loop_winding(c(-0.2, 0.0)), Some(1));
        assert_eq!(c1_loop_winding(c(0.5, -0.01)), Some(1));
        assert_eq!(c1_loop_winding(c(0.5, 0.05)), Some(0));
        assert_eq!(c1_loop_winding(c(-1.2, 0.0)), Some(0));
    }

    #[test]
    fn zero_integrand_over_c1() {
        let r = integrate_custom(|_| c(0.0, 0.0), &c1_contour(), 1e-10).unwrap();
        assert_eq!(r.value, c(0.0, 0.0));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(oint(|s: C64| s, -1.0, 1e-8), Err(ResumError::Validation(_))));
        let bad = PathSegment::Ray {
            start: c(0.0, 0.0),
            direction: c(2.0, 0.0),
            inbound: false,
            singular_start: false,
            tail: TailBound::Adaptive,
        };
        assert!(integrate_segment(|s: C64| s, &bad, 1e-8).is_err());
        let nan = integrate_segment(|_| c(f64::NAN, 0.0), &PathSegment::line(c(0.0, 0.0), c(1.0, 0.0)), 1e-8);
        assert!(matches!(nan, Err(ResumError::EvaluationFailure { .. })));
    }
}
