use std::ffi::{c_char, CStr, CString};
use std::ptr;

use resum_ffi::*;

fn builtin(spec: &str) -> *mut ResumModel {
    let spec = CString::new(spec).unwrap();
    let mut m = ptr::null_mut();
    assert_eq!(unsafe { resum_model_builtin(spec.as_ptr(), &mut m) }, ResumStatus::Ok);
    assert!(!m.is_null());
    m
}

fn last_error() -> String {
    let mut buf = [0 as c_char; 256];
    let n = unsafe { resum_last_error_message(buf.as_mut_ptr(), buf.len()) };
    let s = unsafe { CStr::from_ptr(buf.as_ptr()) }.to_str().unwrap().to_string();
    assert_eq!(n, s.len());
    s
}

#[test]
fn eval_matches_the_logarithm_closed_form() {
    let m = builtin("hurwitz:a=1,b=1");
    let mut v = ResumComplex { re: 0.0, im: 0.0 };
    let mut err = -1.0;
    let z = ResumComplex { re: -3.0, im: 0.0 };
    assert_eq!(unsafe { resum_eval(m, z, 1e-10, &mut v, &mut err) }, ResumStatus::Ok);
    let want = -1.0 + 4f64.ln() / 3.0;
    assert!((v.re - want).abs() < 1e-10 && v.im.abs() < 1e-12, "{v:?}");
    assert!(err >= 0.0);
    assert_eq!(
        unsafe { resum_eval(m, z, 1e-10, &mut v, ptr::null_mut()) },
        ResumStatus::Ok
    );
    assert_eq!(unsafe { resum_model_term_count(m) }, 1);
    unsafe { resum_model_free(m) };
}

#[test]
fn coefficients_and_entire_sum() {
    let m = builtin("stirling_f3");
    let mut c = ResumComplex { re: 0.0, im: 0.0 };
    assert_eq!(unsafe { resum_coefficient(m, 3, 1e-12, &mut c) }, ResumStatus::Ok);
    assert!((c.re - 6.0 / 81.0).abs() < 1e-11, "{c:?}");
    let mut v = ResumComplex { re: 0.0, im: 0.0 };
    let z = ResumComplex { re: 1.0, im: 0.0 };
    assert_eq!(
        unsafe { resum_eval_entire(m, z, 1e-10, &mut v, ptr::null_mut()) },
        ResumStatus::Ok
    );
    let series: f64 = (1..40).map(|k| (k as f64).powi(-k - 1)).sum();
    assert!((v.re - series).abs() < 1e-9, "{v:?}");
    unsafe { resum_model_free(m) };
}

#[test]
fn json_models_and_borel_sums() {
    let json = CString::new(
        r#"{"terms":[{"a":[-1,0],"density":{"builtin":"hurwitz","params":{"a":1,"b":1}},"contour":"ray"}]}"#,
    )
    .unwrap();
    let mut m = ptr::null_mut();
    assert_eq!(unsafe { resum_model_from_json(json.as_ptr(), &mut m) }, ResumStatus::Ok);
    let mut v = ResumComplex { re: 0.0, im: 0.0 };
    assert_eq!(
        unsafe { resum_borel_sum(m, 10.0, 1e-12, &mut v, ptr::null_mut()) },
        ResumStatus::Ok
    );
    // Leading asymptotics: c_1 / x² with c_1 = -1/2.
    assert!((v.re + 0.005).abs() < 1e-3, "{v:?}");
    unsafe { resum_model_free(m) };
}

#[test]
fn errors_carry_status_and_message() {
    let bad = CString::new("hurwitz:a=1").unwrap();
    let mut m = ptr::null_mut();
    assert_eq!(
        unsafe { resum_model_builtin(bad.as_ptr(), &mut m) },
        ResumStatus::InvalidInput
    );
    assert!(m.is_null());
    assert!(last_error().contains("missing parameter"));

    let json = CString::new("{not json").unwrap();
    assert_eq!(
        unsafe { resum_model_from_json(json.as_ptr(), &mut m) },
        ResumStatus::InvalidInput
    );

    assert_eq!(
        unsafe { resum_model_builtin(ptr::null(), &mut m) },
        ResumStatus::NullPointer
    );
    assert!(last_error().contains("spec"));

    let h = builtin("hurwitz:a=1,b=1");
    let mut v = ResumComplex { re: 0.0, im: 0.0 };
    let on_cut = ResumComplex { re: 2.0, im: 0.0 };
    let s = unsafe { resum_eval(h, on_cut, 1e-8, &mut v, ptr::null_mut()) };
    assert_ne!(s, ResumStatus::Ok);
    assert_eq!(
        unsafe { resum_coefficient(h, 1, 1e-8, ptr::null_mut()) },
        ResumStatus::NullPointer
    );
    assert_eq!(
        unsafe { resum_coefficient(ptr::null(), 1, 1e-8, &mut v) },
        ResumStatus::NullPointer
    );
    unsafe { resum_model_free(h) };
    unsafe { resum_model_free(ptr::null_mut()) };
}

#[test]
fn error_messages_truncate_and_report_full_length() {
    let mut out = 0.0;
    assert_eq!(
        unsafe { resum_lngamma(-1.0, 1e-10, &mut out) },
        ResumStatus::InvalidInput
    );
    let full = unsafe { resum_last_error_message(ptr::null_mut(), 0) };
    let mut small = [1 as c_char; 4];
    assert_eq!(
        unsafe { resum_last_error_message(small.as_mut_ptr(), small.len()) },
        full
    );
    assert_eq!(small[3], 0);
    assert_eq!(unsafe { resum_lngamma(5.0, 1e-12, &mut out) }, ResumStatus::Ok);
    assert!((out - 24f64.ln()).abs() < 1e-10);
}

#[test]
fn version_and_header_are_in_sync() {
    let v = unsafe { CStr::from_ptr(resum_version()) }.to_str().unwrap();
    assert_eq!(v, resum::VERSION);
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/resum.h")).unwrap();
    for name in [
        "resum_model_from_json",
        "resum_model_builtin",
        "resum_model_free",
        "resum_model_term_count",
        "resum_coefficient",
        "resum_eval",
        "resum_eval_entire",
        "resum_borel_sum",
        "resum_lngamma",
        "resum_last_error_message",
        "resum_version",
        "RESUM_STATUS_NULL_POINTER",
    ] {
        assert!(header.contains(name), "{name} missing from header");
    }
}
