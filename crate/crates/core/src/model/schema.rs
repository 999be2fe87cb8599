//! JSON form of a model:
//!
//! ```json
//! {"terms": [{"a": [1.0, 0.0],
//!             "density": {"builtin": "hurwitz", "params": {"a": 1.0, "b": 1.0}},
//!             "contour": "ray"}],
//!  "f0": [0.0, 0.0]}
//! ```

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{CoefficientModel, ContourKind, Density, DensityKind, Term};
use crate::{Result, ResumError, C64};

/// A builtin density by name and parameters.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BuiltinSpec {
    pub builtin: String,
    #[serde(default)]
    pub params: BTreeMap<String, f64>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TermJson {
    a: [f64; 2],
    density: BuiltinSpec,
    contour: ContourKind,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ModelJson {
    terms: Vec<TermJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    f0: Option<[f64; 2]>,
}

/// A parsed model together with its constant term.
#[derive(Debug, Clone)]
pub struct ModelDocument {
    pub model: CoefficientModel,
    pub f0: C64,
}

impl BuiltinSpec {
    pub fn new(builtin: &str, params: &[(&str, f64)]) -> Self {
        BuiltinSpec {
            builtin: builtin.to_string(),
            params: params.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
        }
    }

    pub(crate) fn of(d: &Density) -> Option<Self> {
        Some(match &d.kind {
            DensityKind::Hurwitz { a, b } => BuiltinSpec::new("hurwitz", &[("a", *a), ("b", *b)]),
            DensityKind::LogMix(m) => BuiltinSpec::new("logmix", &[("b", m.b())]),
            DensityKind::Stirling => BuiltinSpec::new("stirling_f3", &[]),
            DensityKind::ExpSqrt { gamma } => BuiltinSpec::new("exp_sqrt", &[("gamma", *gamma)]),
            DensityKind::Custom(_) => return None,
        })
    }

    pub fn label(&self) -> String {
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        if params.is_empty() {
            self.builtin.clone()
        } else {
            format!("{}({})", self.builtin, params.join(","))
        }
    }

    fn param(&self, name: &str) -> Result<f64> {
        self.params
            .get(name)
            .copied()
            .ok_or_else(|| ResumError::Validation(format!("{}: missing parameter '{name}'", self.builtin)))
    }

    fn expect_params(&self, allowed: &[&str]) -> Result<()> {
        match self.params.keys().find(|k| !allowed.contains(&k.as_str())) {
            Some(k) => Err(ResumError::Validation(format!(
                "{}: unknown parameter '{k}'",
                self.builtin
            ))),
            None => Ok(()),
        }
    }

    /// Build the density on `contour`, rejecting combinations the builtin does not support.
    pub fn density(&self, contour: ContourKind) -> Result<Density> {
        let mismatch = || {
            ResumError::Validation(format!(
                "builtin '{}' cannot be integrated over a {contour:?} contour",
                self.builtin
            ))
        };
        let d = match self.builtin.as_str() {
            "hurwitz" => {
                self.expect_params(&["a", "b"])?;
                if contour == ContourKind::C1Spiral {
                    return Err(mismatch());
                }
                Density::hurwitz(self.param("a")?, self.param("b")?, contour)?
            }
            "logmix" => {
                self.expect_params(&["b"])?;
                Density::logmix(self.param("b")?)?
            }
            "stirling_f3" => {
                self.expect_params(&[])?;
                Density::stirling()
            }
            "exp_sqrt" => {
                self.expect_params(&["gamma"])?;
                Density::exp_sqrt(self.param("gamma")?)?
            }
            other => return Err(ResumError::Validation(format!("unknown builtin density '{other}'"))),
        };
        if d.contour != contour {
            return Err(mismatch());
        }
        Ok(d)
    }
}

/// Parse the JSON model schema.
pub fn model_from_json(text: &str) -> Result<ModelDocument> {
    let doc: ModelJson = serde_json::from_str(text).map_err(|e| ResumError::Validation(format!("model JSON: {e}")))?;
    let terms = doc
        .terms
        .iter()
        .map(|t| Ok(Term::new(C64::new(t.a[0], t.a[1]), t.density.density(t.contour)?)))
        .collect::<Result<Vec<_>>>()?;
    let f0 = doc.f0.map_or(C64::new(0.0, 0.0), |v| C64::new(v[0], v[1]));
    Ok(ModelDocument {
        model: CoefficientModel::new(terms)?,
        f0,
    })
}

/// Serialise a model built from builtins.
pub fn model_to_json(model: &CoefficientModel, f0: C64) -> Result<String> {
    let terms = model
        .terms()
        .iter()
        .map(|t| {
            let density = t
                .density
                .builtin()
                .ok_or_else(|| ResumError::Validation("custom densities have no JSON form".into()))?;
            if t.density.normalization != C64::new(1.0, 0.0) {
                return Err(ResumError::Validation("rescaled densities have no JSON form".into()));
            }
            Ok(TermJson {
                a: [t.a.re, t.a.im],
                density,
                contour: t.density.contour,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let doc = ModelJson {
        terms,
        f0: (f0 != C64::new(0.0, 0.0)).then_some([f0.re, f0.im]),
    };
    serde_json::to_string_pretty(&doc).map_err(|e| ResumError::Validation(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_schema_example() {
        let text = r#"{"terms":[{"a":[-1,0],"density":{"builtin":"hurwitz","params":{"a":1,"b":1}},"contour":"ray"}]}"#;
        let doc = model_from_json(text).unwrap();
        assert_eq!(doc.model.terms()[0].a, C64::new(-1.0, 0.0));
        assert_eq!(doc.f0, C64::new(0.0, 0.0));
    }

    #[test]
    fn rejects_mismatches() {
        let bad_contour = r#"{"terms":[{"a":[1,0],"density":{"builtin":"stirling_f3"},"contour":"hankel"}]}"#;
        assert!(matches!(model_from_json(bad_contour), Err(ResumError::Validation(_))));
        let spiral_needed =
            r#"{"terms":[{"a":[1,0],"density":{"builtin":"exp_sqrt","params":{"gamma":-1}},"contour":"ray"}]}"#;
        assert!(model_from_json(spiral_needed).is_err());
        let unknown = r#"{"terms":[{"a":[1,0],"density":{"builtin":"nope"},"contour":"ray"}]}"#;
        assert!(model_from_json(unknown).is_err());
        let extra = r#"{"terms":[{"a":[1,0],"density":{"builtin":"logmix","params":{"b":2,"c":1}},"contour":"ray"}]}"#;
        assert!(model_from_json(extra).is_err());
        assert!(model_from_json("not json").is_err());
    }
}
