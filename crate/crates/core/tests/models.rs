//! Coefficient models against their defining sequences, and the JSON form.

use resum::model::{
    density_exp_sqrt, density_hurwitz, density_logmix, density_stirling_f3, model_from_json, model_to_json,
    CoefficientModel, ContourKind, Density,
};
use resum::{Complex64, ResumError};

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn factorial_over_power(k: u32) -> f64 {
    // k! / k^{k+1} as a running product of j/k, which never overflows.
    let kf = f64::from(k);
    (1..=k).map(|j| f64::from(j) / kf).product::<f64>() / kf
}

struct Case {
    name: &'static str,
    model: CoefficientModel,
    oracle: Box<dyn Fn(u32) -> f64>,
}

fn corpus() -> Vec<Case> {
    let hurwitz = |a: f64, b: f64| Case {
        name: "hurwitz",
        model: density_hurwitz(a, b).unwrap(),
        oracle: Box::new(move |k| (f64::from(k) + a).powf(-b)),
    };
    let logmix = |b: f64| Case {
        name: "logmix",
        model: density_logmix(b).unwrap(),
        oracle: Box::new(move |k| 1.0 / (f64::from(k).powf(b) + f64::from(k).ln())),
    };
    let exp_sqrt = |g: f64| Case {
        name: "exp_sqrt",
        model: density_exp_sqrt(g).unwrap(),
        oracle: Box::new(move |k| (-g * f64::from(k).sqrt()).exp()),
    };
    vec![
        hurwitz(1.0, 1.0),
        hurwitz(1.0, 2.0),
        hurwitz(2.0, 0.5),
        hurwitz(0.5, 1.5),
        logmix(2.0),
        logmix(3.0),
        Case {
            name: "stirling_f3",
            model: density_stirling_f3(),
            oracle: Box::new(factorial_over_power),
        },
        exp_sqrt(1.0),
        exp_sqrt(0.5),
        exp_sqrt(-1.0),
    ]
}

#[test]
fn quadrature_coefficients_match_their_sequences() {
    for case in corpus() {
        for k in 1..=40u32 {
            let want = (case.oracle)(k);
            let got = case.model.coefficient(k, 1e-12 * want.abs()).unwrap();
            let rel = (got - want).norm() / want.abs();
            assert!(rel < 1e-9, "{} k = {k}: {got} vs {want} (rel {rel:e})", case.name);
        }
    }
}

#[test]
fn registered_closed_forms_agree_with_the_sequences() {
    for case in corpus() {
        for k in 1..=40u32 {
            if let Some(cf) = case.model.closed_form(k) {
                let want = (case.oracle)(k);
                assert!((cf - want).norm() < 1e-12 * want.abs(), "{} k = {k}", case.name);
            }
        }
    }
}

#[test]
fn json_round_trip_preserves_coefficients() {
    for case in corpus() {
        let scaled = case.model.scaled(c(-2.0, 0.5)).unwrap();
        for (model, f0) in [(case.model, c(0.0, 0.0)), (scaled, c(1.5, -2.0))] {
            let text = model_to_json(&model, f0).unwrap();
            let doc = model_from_json(&text).unwrap();
            assert_eq!(doc.f0, f0);
            for k in 1..=10u32 {
                let a = model.coefficient(k, 1e-12).unwrap();
                let b = doc.model.coefficient(k, 1e-12).unwrap();
                assert!((a - b).norm() <= 1e-12 * a.norm(), "{} k = {k}: {text}", case.name);
            }
        }
    }
}

#[test]
fn json_schema_rejects_bad_documents() {
    let bad = [
        "{}",
        r#"{"terms": []}"#,
        r#"{"terms": [{"a": [1, 0], "density": {"builtin": "nope"}, "contour": "ray"}]}"#,
        r#"{"terms": [{"a": [1, 0], "density": {"builtin": "logmix", "params": {"b": 2}}, "contour": "hankel"}]}"#,
        r#"{"terms": [{"a": [1, 0], "density": {"builtin": "hurwitz", "params": {"a": 1}}, "contour": "ray"}]}"#,
        r#"{"terms": [{"a": [0, 0], "density": {"builtin": "hurwitz", "params": {"a": 1, "b": 1}}, "contour": "ray"}]}"#,
        r#"{"terms": [{"a": [1, 0], "density": {"builtin": "hurwitz", "params": {"a": 1, "b": 1}}, "contour": "ray", "x": 1}]}"#,
    ];
    for text in bad {
        assert!(
            matches!(model_from_json(text), Err(ResumError::Validation(_))),
            "{text}"
        );
    }
}

#[test]
fn two_term_models_add() {
    let d = Density::hurwitz(1.0, 1.0, ContourKind::Ray).unwrap();
    let m = CoefficientModel::new(vec![
        resum::model::Term::new(c(1.0, 0.0), d.clone()),
        resum::model::Term::new(c(-2.0, 0.0), d),
    ])
    .unwrap();
    for k in 1..=8u32 {
        let want = (1.0 + (-0.5f64).powi(k as i32)) / f64::from(k + 1);
        assert!((m.coefficient(k, 1e-13).unwrap() - want).norm() < 1e-11);
    }
    assert_eq!(m.inverse_radius(), 1.0);
}

#[test]
fn hankel_and_ray_forms_of_one_density_agree() {
    let ray = CoefficientModel::single(c(1.0, 0.0), Density::hurwitz(1.5, 2.5, ContourKind::Ray).unwrap()).unwrap();
    let loop_ =
        CoefficientModel::single(c(1.0, 0.0), Density::hurwitz(1.5, 2.5, ContourKind::Hankel).unwrap()).unwrap();
    for k in [1u32, 5, 20] {
        let a = ray.coefficient(k, 1e-13).unwrap();
        let b = loop_.coefficient(k, 1e-13).unwrap();
        assert!((a - b).norm() < 1e-11 * a.norm(), "k = {k}: {a} vs {b}");
    }
}

#[test]
fn invalid_parameters_are_rejected() {
    assert!(density_hurwitz(-1.0, 1.0).is_err());
    assert!(density_hurwitz(1.0, 0.0).is_err());
    assert!(density_logmix(-1.0).is_err());
    assert!(density_exp_sqrt(0.0).is_err());
    assert!(matches!(
        density_hurwitz(1.0, 1.0).unwrap().coefficient(0, 1e-8),
        Err(ResumError::Validation(_))
    ));
}
