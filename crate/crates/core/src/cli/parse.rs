//! Parsers for the textual inputs of the command line.

use std::collections::BTreeMap;
use std::path::Path;

use crate::model::{
    density_exp_sqrt, density_hurwitz, density_logmix, density_stirling_f3, model_from_json, CoefficientModel,
    ContourKind, Density,
};
use crate::reconstruct::FunctionKind;
use crate::{Result, ResumError, C64};

/// Most points a grid may hold.
pub const MAX_GRID_POINTS: usize = 1_000_000;

fn invalid(msg: impl Into<String>) -> ResumError {
    ResumError::Validation(msg.into())
}

fn number(s: &str) -> Result<f64> {
    let v: f64 = s
        .trim()
        .parse()
        .map_err(|_| invalid(format!("'{s}' is not a number")))?;
    if v.is_finite() {
        Ok(v)
    } else {
        Err(invalid(format!("'{s}' is not finite")))
    }
}

/// Parse `x`, `yi`, `x+yi` or `x-yi`; exponents such as `1e-3-2e-2i` are allowed.
pub fn parse_complex(text: &str) -> Result<C64> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(invalid("empty complex number"));
    }
    let Some(body) = s.strip_suffix('i').or_else(|| s.strip_suffix('j')) else {
        return Ok(C64::new(number(&s)?, 0.0));
    };
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&i| (bytes[i] == b'+' || bytes[i] == b'-') && !matches!(bytes[i - 1], b'e' | b'E'));
    let imag = |t: &str| -> Result<f64> {
        match t {
            "" | "+" => Ok(1.0),
            "-" => Ok(-1.0),
            _ => number(t),
        }
    };
    match split {
        Some(i) => Ok(C64::new(number(&body[..i])?, imag(&body[i..])?)),
        None => Ok(C64::new(0.0, imag(body)?)),
    }
}

fn axis(spec: &str) -> Result<Vec<f64>> {
    let parts: Vec<&str> = spec.split(':').collect();
    let [lo, hi, n] = parts[..] else {
        return Err(invalid(format!("grid axis '{spec}' is not lo:hi:n")));
    };
    let (lo, hi) = (number(lo)?, number(hi)?);
    let n: usize = n
        .trim()
        .parse()
        .map_err(|_| invalid(format!("grid count '{n}' is not a positive integer")))?;
    match n {
        0 => Err(invalid("grid counts must be at least 1")),
        1 => Ok(vec![lo]),
        _ => Ok((0..n).map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64).collect()),
    }
}

/// Parse `re0:re1:n,im0:im1:m` into points ordered with the imaginary index outermost.
pub fn parse_grid(spec: &str) -> Result<Vec<C64>> {
    let (re, im) = spec
        .split_once(',')
        .ok_or_else(|| invalid(format!("grid '{spec}' is not re0:re1:n,im0:im1:m")))?;
    let re = axis(re)?;
    let im = axis(im)?;
    let total = re.len().saturating_mul(im.len());
    if total > MAX_GRID_POINTS {
        return Err(invalid(format!(
            "grid has {total} points; the limit is {MAX_GRID_POINTS}"
        )));
    }
    Ok(im
        .iter()
        .flat_map(|&y| re.iter().map(move |&x| C64::new(x, y)))
        .collect())
}

/// Parse `k0..k1` (inclusive), a single `k`, or a comma list.
pub fn parse_k_range(spec: &str) -> Result<Vec<u32>> {
    let int = |t: &str| -> Result<u32> {
        t.trim()
            .parse()
            .map_err(|_| invalid(format!("'{t}' is not a non-negative integer")))
    };
    let ks: Vec<u32> = if let Some((lo, hi)) = spec.split_once("..") {
        let (lo, hi) = (int(lo)?, int(hi.trim_start_matches('='))?);
        if lo > hi {
            return Err(invalid(format!("empty range {spec}")));
        }
        (lo..=hi).collect()
    } else {
        spec.split(',').map(int).collect::<Result<_>>()?
    };
    if ks.contains(&0) {
        return Err(invalid("coefficients start at k = 1"));
    }
    Ok(ks)
}

/// A model read from the command line, with the summation mode it defaults to.
#[derive(Debug, Clone)]
pub struct ModelSource {
    pub model: CoefficientModel,
    pub f0: C64,
    pub default_kind: FunctionKind,
    pub label: String,
}

/// Read `name:key=value,...` for a builtin, or a path to a JSON model.
///
/// Builtins take their density parameters plus an optional `scale` (a real
/// factor applied to `a₁`) and, for `hurwitz`, `contour=ray|hankel`.
pub fn parse_model(spec: &str) -> Result<ModelSource> {
    let (name, rest) = spec.split_once(':').unwrap_or((spec, ""));
    let known = ["hurwitz", "logmix", "stirling_f3", "exp_sqrt"];
    if !known.contains(&name) {
        let path = Path::new(spec);
        if path.exists() || spec.ends_with(".json") {
            return model_file(path);
        }
        return Err(invalid(format!(
            "unknown model '{name}'; expected one of {known:?} or a JSON file"
        )));
    }
    let mut params = BTreeMap::new();
    let mut contour = None;
    for pair in rest.split(',').filter(|p| !p.trim().is_empty()) {
        let (k, v) = pair
            .split_once('=')
            .ok_or_else(|| invalid(format!("model parameter '{pair}' is not key=value")))?;
        let k = k.trim();
        if k == "contour" {
            contour = Some(match v.trim() {
                "ray" => ContourKind::Ray,
                "hankel" => ContourKind::Hankel,
                other => return Err(invalid(format!("contour '{other}' is not ray or hankel"))),
            });
        } else if params.insert(k.to_string(), number(v)?).is_some() {
            return Err(invalid(format!("parameter '{k}' given twice")));
        }
    }
    let mut take = |key: &str| params.remove(key);
    let scale = take("scale");
    let need = |v: Option<f64>, key: &str| v.ok_or_else(|| invalid(format!("{name}: missing parameter '{key}'")));
    let (model, kind) = match name {
        "hurwitz" => {
            let (a, b) = (need(take("a"), "a")?, need(take("b"), "b")?);
            let model = match contour {
                Some(c) => CoefficientModel::single(C64::new(1.0, 0.0), Density::hurwitz(a, b, c)?)?,
                None => density_hurwitz(a, b)?,
            };
            (model, FunctionKind::FiniteRadius)
        }
        "logmix" => (density_logmix(need(take("b"), "b")?)?, FunctionKind::FiniteRadius),
        "stirling_f3" => (density_stirling_f3(), FunctionKind::Entire),
        _ => (
            density_exp_sqrt(need(take("gamma"), "gamma")?)?,
            FunctionKind::FiniteRadius,
        ),
    };
    if let Some(k) = params.keys().next() {
        return Err(invalid(format!("{name}: unknown parameter '{k}'")));
    }
    if contour.is_some() && name != "hurwitz" {
        return Err(invalid(format!("{name}: the contour is fixed by the density")));
    }
    let model = match scale {
        Some(0.0) => return Err(invalid("scale must be nonzero")),
        Some(s) => model.scaled(C64::new(s, 0.0))?,
        None => model,
    };
    Ok(ModelSource {
        model,
        f0: C64::new(0.0, 0.0),
        default_kind: kind,
        label: spec.to_string(),
    })
}

fn model_file(path: &Path) -> Result<ModelSource> {
    let text = std::fs::read_to_string(path).map_err(|e| ResumError::Io(format!("{}: {e}", path.display())))?;
    let doc = model_from_json(&text)?;
    Ok(ModelSource {
        model: doc.model,
        f0: doc.f0,
        default_kind: FunctionKind::FiniteRadius,
        label: path.display().to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_forms() {
        let cases = [
            ("-3+0i", C64::new(-3.0, 0.0)),
            ("2+2i", C64::new(2.0, 2.0)),
            ("0.5", C64::new(0.5, 0.0)),
            ("-1.5i", C64::new(0.0, -1.5)),
            ("i", C64::new(0.0, 1.0)),
            ("-i", C64::new(0.0, -1.0)),
            ("1e-3-2e-2i", C64::new(1e-3, -2e-2)),
            ("-2E+1+3i", C64::new(-20.0, 3.0)),
            (" 4 - i ", C64::new(4.0, -1.0)),
        ];
        for (s, want) in cases {
            assert_eq!(parse_complex(s).unwrap(), want, "{s}");
        }
        for bad in ["", "abc", "1+2", "1+xi", "nan"] {
            assert!(parse_complex(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn grids_are_row_major_in_the_real_part() {
        let g = parse_grid("0:1:3,-1:1:2").unwrap();
        assert_eq!(g.len(), 6);
        assert_eq!(g[0], C64::new(0.0, -1.0));
        assert_eq!(g[2], C64::new(1.0, -1.0));
        assert_eq!(g[3], C64::new(0.0, 1.0));
        assert!(parse_grid("0:1:1001,0:1:1000").is_err());
        assert!(parse_grid("0:1:0,0:1:1").is_err());
        assert!(parse_grid("0:1:3").is_err());
    }

    #[test]
    fn k_ranges() {
        assert_eq!(parse_k_range("1..5").unwrap(), vec![1, 2, 3, 4, 5]);
        assert_eq!(parse_k_range("1..=2").unwrap(), vec![1, 2]);
        assert_eq!(parse_k_range("7").unwrap(), vec![7]);
        assert_eq!(parse_k_range("3,1").unwrap(), vec![3, 1]);
        assert!(parse_k_range("0..3").is_err());
        assert!(parse_k_range("5..1").is_err());
    }

    #[test]
    fn builtin_models() {
        let m = parse_model("hurwitz:a=1,b=1,scale=-1").unwrap();
        assert_eq!(m.model.terms()[0].a, C64::new(-1.0, 0.0));
        let m = parse_model("hurwitz:a=2,b=0.5,contour=ray").unwrap();
        assert_eq!(m.model.terms()[0].density.contour, ContourKind::Ray);
        assert_eq!(parse_model("stirling_f3").unwrap().default_kind, FunctionKind::Entire);
        assert_eq!(
            parse_model("exp_sqrt:gamma=-1").unwrap().model.terms()[0]
                .density
                .contour,
            ContourKind::C1Spiral
        );
        for bad in [
            "hurwitz:a=1",
            "hurwitz:a=1,b=1,c=2",
            "logmix:b=2,contour=ray",
            "nosuch",
            "x.json",
        ] {
            assert!(parse_model(bad).is_err(), "{bad}");
        }
        assert!(matches!(parse_model("missing.json"), Err(ResumError::Io(_))));
    }
}
