//! Globally adaptive 21-point Gauss-Kronrod quadrature for complex-valued
//! integrands of a real parameter.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::{Result, ResumError, C64};

#[allow(clippy::excessive_precision)]
const XGK: [f64; 11] = [
    0.995_657_163_025_808_080_735_527_280_689_003,
    0.973_906_528_517_171_720_077_964_012_084_452,
    0.930_157_491_355_708_226_001_207_180_059_508,
    0.865_063_366_688_984_510_732_096_688_423_493,
    0.780_817_726_586_416_897_063_717_578_345_042,
    0.679_409_568_299_024_406_234_327_365_114_874,
    0.562_757_134_668_604_683_339_000_099_272_694,
    0.433_395_394_129_247_190_799_265_943_165_784,
    0.294_392_862_701_460_198_131_126_603_103_866,
    0.148_874_338_981_631_210_884_826_001_129_720,
    0.0,
];

#[allow(clippy::excessive_precision)]
const WG: [f64; 5] = [
    0.066_671_344_308_688_137_593_568_809_893_332,
    0.149_451_349_150_580_593_145_776_339_657_697,
    0.219_086_362_515_982_043_995_534_934_228_163,
    0.269_266_719_309_996_355_091_226_921_569_469,
    0.295_524_224_714_752_870_173_892_994_651_338,
];

#[allow(clippy::excessive_precision)]
const WGK: [f64; 11] = [
    0.011_694_638_867_371_874_278_064_396_062_192,
    0.032_558_162_307_964_727_478_818_972_459_390,
    0.054_755_896_574_351_996_031_381_300_244_580,
    0.075_039_674_810_919_952_767_043_140_916_190,
    0.093_125_454_583_697_605_535_065_465_083_366,
    0.109_387_158_802_297_641_899_210_590_325_805,
    0.123_491_976_262_065_851_077_958_109_831_074,
    0.134_709_217_311_473_325_928_054_001_771_707,
    0.142_775_938_577_060_080_797_094_273_138_717,
    0.147_739_104_901_338_491_374_841_515_972_068,
    0.149_445_554_002_916_905_664_936_468_389_821,
];

/// Result of one adaptive run.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Estimate {
    pub value: C64,
    pub error: f64,
    pub evals: usize,
}

#[derive(Debug, Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    value: C64,
    error: f64,
    roundoff: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

fn rule<G>(g: &G, a: f64, b: f64) -> Result<Panel>
where
    G: Fn(f64) -> Result<C64>,
{
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = g(center)?;
    let mut res_k = fc * WGK[10];
    let mut res_g = C64::new(0.0, 0.0);
    let mut res_abs = fc.norm() * WGK[10];
    let mut fv1 = [C64::new(0.0, 0.0); 10];
    let mut fv2 = [C64::new(0.0, 0.0); 10];
    for j in 0..10 {
        let x = half * XGK[j];
        let f1 = g(center - x)?;
        let f2 = g(center + x)?;
        fv1[j] = f1;
        fv2[j] = f2;
        res_k += (f1 + f2) * WGK[j];
        res_abs += (f1.norm() + f2.norm()) * WGK[j];
        if j % 2 == 1 {
            res_g += (f1 + f2) * WG[j / 2];
        }
    }
    let mean = res_k * 0.5;
    let mut res_asc = WGK[10] * (fc - mean).norm();
    for j in 0..10 {
        res_asc += WGK[j] * ((fv1[j] - mean).norm() + (fv2[j] - mean).norm());
    }
    let scale = half.abs();
    let res_abs = res_abs * scale;
    let res_asc = res_asc * scale;
    let mut error = ((res_k - res_g) * half).norm();
    if res_asc != 0.0 && error != 0.0 {
        error = res_asc * (200.0 * error / res_asc).powf(1.5).min(1.0);
    }
    let roundoff = 50.0 * f64::EPSILON * res_abs;
    Ok(Panel {
        a,
        b,
        value: res_k * half,
        error: error.max(roundoff),
        roundoff,
    })
}

/// Integrate `g` over `[a, b]` until the summed error estimate is below `tol`.
///
/// Panels whose error sits at the roundoff floor are not refined further, so a
/// tolerance below machine resolution returns the best attainable estimate
/// rather than failing.
pub(crate) fn integrate<G>(g: &G, a: f64, b: f64, tol: f64, max_panels: usize) -> Result<Estimate>
where
    G: Fn(f64) -> Result<C64>,
{
    let first = rule(g, a, b)?;
    let mut evals = 21;
    let mut heap = BinaryHeap::new();
    let mut frozen: Vec<Panel> = Vec::new();
    heap.push(first);
    loop {
        let total_err: f64 = heap.iter().map(|p| p.error).sum::<f64>() + frozen.iter().map(|p| p.error).sum::<f64>();
        let done = total_err <= tol || heap.is_empty();
        if done || heap.len() + frozen.len() >= max_panels {
            let value = heap.iter().chain(frozen.iter()).map(|p| p.value).sum();
            if done {
                return Ok(Estimate {
                    value,
                    error: total_err,
                    evals,
                });
            }
            return Err(ResumError::NonConvergence {
                value,
                abs_error_estimate: total_err,
            });
        }
        let worst = heap.pop().expect("heap is nonempty");
        let mid = 0.5 * (worst.a + worst.b);
        let too_narrow = (worst.b - worst.a).abs() <= 1e-14 * (worst.a.abs() + worst.b.abs()).max(1e-300)
            || mid == worst.a
            || mid == worst.b;
        if too_narrow || worst.error <= worst.roundoff * 1.000_001 {
            frozen.push(worst);
            continue;
        }
        let left = rule(g, worst.a, mid)?;
        let right = rule(g, mid, worst.b)?;
        evals += 42;
        heap.push(left);
        heap.push(right);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_is_exact() {
        let g = |t: f64| Ok(C64::new(t.powi(5), 3.0 * t * t));
        let est = integrate(&g, 0.0, 2.0, 1e-14, 100).unwrap();
        assert!((est.value - C64::new(64.0 / 6.0, 8.0)).norm() < 1e-13);
        assert_eq!(est.evals, 21);
    }

    #[test]
    fn refines_near_a_kink() {
        let g = |t: f64| Ok(C64::new((t - 0.3).abs(), 0.0));
        let est = integrate(&g, 0.0, 1.0, 1e-12, 500).unwrap();
        assert!((est.value.re - (0.045 + 0.245)).abs() < 1e-12);
    }

    #[test]
    fn budget_exhaustion_reports_best_value() {
        let g = |t: f64| Ok(C64::new((1.0 / t.max(1e-300)).sin(), 0.0));
        match integrate(&g, 0.0, 1.0, 1e-15, 8) {
            Err(ResumError::NonConvergence { abs_error_estimate, .. }) => assert!(abs_error_estimate > 0.0),
            other => panic!("expected NonConvergence, got {other:?}"),
        }
    }
}
