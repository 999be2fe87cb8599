//! C interface to `resum`.
//!
//! Models live behind an opaque [`ResumModel`] handle created by
//! [`resum_model_from_json`] or [`resum_model_builtin`] and released with
//! [`resum_model_free`]. Every fallible call returns a [`ResumStatus`]; on
//! failure the message is kept per thread and can be copied out with
//! [`resum_last_error_message`]. Output pointers are written only on success.

use std::cell::RefCell;
use std::ffi::{c_char, CStr};
use std::panic::{catch_unwind, AssertUnwindSafe};

use num_complex::Complex64;
use resum::cli::parse_model;
use resum::model::model_from_json;
use resum::reconstruct::{borel_sum, lngamma_via_sum, Evaluation, FunctionKind, GlobalFunction};
use resum::{ResumError, VERSION};

/// Status codes returned by every fallible function.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ResumStatus {
    Ok = 0,
    /// Bad arguments or a model that fails validation.
    InvalidInput = 1,
    /// Quadrature or another numerical step failed.
    Numerical = 2,
    Io = 3,
    /// A required pointer was null.
    NullPointer = 4,
    /// The library panicked; this is a bug.
    Internal = 5,
}

/// A complex number as two doubles.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResumComplex {
    pub re: f64,
    pub im: f64,
}

impl From<Complex64> for ResumComplex {
    fn from(z: Complex64) -> Self {
        ResumComplex { re: z.re, im: z.im }
    }
}

impl From<ResumComplex> for Complex64 {
    fn from(z: ResumComplex) -> Self {
        Complex64::new(z.re, z.im)
    }
}

/// Opaque coefficient model with its constant term.
pub struct ResumModel {
    model: resum::model::CoefficientModel,
    f0: Complex64,
}

thread_local! {
    static LAST_ERROR: RefCell<String> = const { RefCell::new(String::new()) };
}

fn set_error(msg: String) {
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
}

fn status_of(e: &ResumError) -> ResumStatus {
    match e {
        ResumError::Io(_) => ResumStatus::Io,
        e if e.is_numerical() => ResumStatus::Numerical,
        _ => ResumStatus::InvalidInput,
    }
}

enum Failure {
    Lib(ResumError),
    Null(&'static str),
}

impl From<ResumError> for Failure {
    fn from(e: ResumError) -> Self {
        Failure::Lib(e)
    }
}

/// Run `body`, translating errors and panics into a status and the thread's last error.
fn guard(body: impl FnOnce() -> Result<(), Failure>) -> ResumStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => ResumStatus::Ok,
        Ok(Err(Failure::Lib(e))) => {
            set_error(e.to_string());
            status_of(&e)
        }
        Ok(Err(Failure::Null(what))) => {
            set_error(format!("null pointer passed for {what}"));
            ResumStatus::NullPointer
        }
        Err(_) => {
            set_error("internal panic".into());
            ResumStatus::Internal
        }
    }
}

unsafe fn text<'a>(p: *const c_char, what: &'static str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure::Null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure::Lib(ResumError::Validation(format!("{what} is not UTF-8"))))
}

unsafe fn model_ref<'a>(p: *const ResumModel) -> Result<&'a ResumModel, Failure> {
    p.as_ref().ok_or(Failure::Null("model"))
}

unsafe fn put<T>(out: *mut T, v: T, what: &'static str) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure::Null(what));
    }
    out.write(v);
    Ok(())
}

unsafe fn store_model(out: *mut *mut ResumModel, m: ResumModel) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure::Null("out"));
    }
    out.write(Box::into_raw(Box::new(m)));
    Ok(())
}

/// Parse a JSON model document.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a valid pointer to writable storage.
#[no_mangle]
pub unsafe extern "C" fn resum_model_from_json(json: *const c_char, out: *mut *mut ResumModel) -> ResumStatus {
    guard(|| {
        let doc = model_from_json(text(json, "json")?)?;
        store_model(
            out,
            ResumModel {
                model: doc.model,
                f0: doc.f0,
            },
        )
    })
}

/// Build a builtin model from a spec such as `hurwitz:a=1,b=1` or `exp_sqrt:gamma=-1`.
///
/// # Safety
/// `spec` must be a NUL-terminated string and `out` a valid pointer to writable storage.
#[no_mangle]
pub unsafe extern "C" fn resum_model_builtin(spec: *const c_char, out: *mut *mut ResumModel) -> ResumStatus {
    guard(|| {
        let spec = text(spec, "spec")?;
        if spec.ends_with(".json") {
            return Err(ResumError::Validation("use resum_model_from_json for JSON models".into()).into());
        }
        let src = parse_model(spec)?;
        store_model(
            out,
            ResumModel {
                model: src.model,
                f0: src.f0,
            },
        )
    })
}

/// Release a model. Null is ignored.
///
/// # Safety
/// `model` must be null or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn resum_model_free(model: *mut ResumModel) {
    if !model.is_null() {
        drop(Box::from_raw(model));
    }
}

/// Number of terms `a_j` in the model, or 0 for a null handle.
///
/// # Safety
/// `model` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn resum_model_term_count(model: *const ResumModel) -> usize {
    model.as_ref().map_or(0, |m| m.model.terms().len())
}

/// Taylor coefficient `c_k`, `k ≥ 1`, by quadrature to absolute tolerance `tol`.
///
/// # Safety
/// `model` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn resum_coefficient(
    model: *const ResumModel,
    k: u32,
    tol: f64,
    out: *mut ResumComplex,
) -> ResumStatus {
    guard(|| {
        let m = model_ref(model)?;
        put(out, m.model.coefficient(k, tol)?.into(), "out")
    })
}

unsafe fn evaluate(
    model: *const ResumModel,
    kind: FunctionKind,
    z: ResumComplex,
    tol: f64,
    value: *mut ResumComplex,
    abs_err: *mut f64,
) -> ResumStatus {
    guard(|| {
        let m = model_ref(model)?;
        if value.is_null() {
            return Err(Failure::Null("value"));
        }
        let g = GlobalFunction::new(m.model.clone(), kind)?.with_f0(m.f0);
        let Evaluation {
            value: v,
            abs_error_estimate,
        } = g.eval(z.into(), tol)?;
        put(value, v.into(), "value")?;
        if !abs_err.is_null() {
            abs_err.write(abs_error_estimate);
        }
        Ok(())
    })
}

/// `f(z) = f0 + Σ c_k z^k`, continued to the plane minus the cuts.
/// `abs_err` may be null.
///
/// # Safety
/// `model` must be a live handle, `value` writable, `abs_err` null or writable.
#[no_mangle]
pub unsafe extern "C" fn resum_eval(
    model: *const ResumModel,
    z: ResumComplex,
    tol: f64,
    value: *mut ResumComplex,
    abs_err: *mut f64,
) -> ResumStatus {
    evaluate(model, FunctionKind::FiniteRadius, z, tol, value, abs_err)
}

/// The entire function `f0 + Σ c_k z^k / k!`. `abs_err` may be null.
///
/// # Safety
/// As for [`resum_eval`].
#[no_mangle]
pub unsafe extern "C" fn resum_eval_entire(
    model: *const ResumModel,
    z: ResumComplex,
    tol: f64,
    value: *mut ResumComplex,
    abs_err: *mut f64,
) -> ResumStatus {
    evaluate(model, FunctionKind::Entire, z, tol, value, abs_err)
}

/// Borel sum of `Σ_{k≥1} c_k k! x^{-k-1}` at `x > 0`. `abs_err` may be null.
///
/// # Safety
/// `model` must be a live handle, `value` writable, `abs_err` null or writable.
#[no_mangle]
pub unsafe extern "C" fn resum_borel_sum(
    model: *const ResumModel,
    x: f64,
    tol: f64,
    value: *mut ResumComplex,
    abs_err: *mut f64,
) -> ResumStatus {
    guard(|| {
        let m = model_ref(model)?;
        let g = GlobalFunction::borel(m.model.clone())?.with_f0(m.f0);
        let e = borel_sum(&g, x, tol)?;
        put(value, e.value.into(), "value")?;
        if !abs_err.is_null() {
            abs_err.write(e.abs_error_estimate);
        }
        Ok(())
    })
}

/// `ln Γ(n)` for `n > 0` from Stirling's terms plus a Laplace integral.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn resum_lngamma(n: f64, tol: f64, out: *mut f64) -> ResumStatus {
    guard(|| put(out, lngamma_via_sum(n, tol)?, "out"))
}

/// Copy the calling thread's last error message into `buf` (NUL-terminated,
/// truncated to `len - 1` bytes) and return the full message length in bytes.
/// Pass a null `buf` to query the length.
///
/// # Safety
/// `buf` must be null or point to `len` writable bytes.
#[no_mangle]
pub unsafe extern "C" fn resum_last_error_message(buf: *mut c_char, len: usize) -> usize {
    LAST_ERROR.with(|e| {
        let msg = e.borrow();
        if !buf.is_null() && len > 0 {
            let n = msg.len().min(len - 1);
            std::ptr::copy_nonoverlapping(msg.as_ptr().cast::<c_char>(), buf, n);
            buf.add(n).write(0);
        }
        msg.len()
    })
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn resum_version() -> *const c_char {
    static V: std::sync::OnceLock<std::ffi::CString> = std::sync::OnceLock::new();
    V.get_or_init(|| std::ffi::CString::new(VERSION).expect("version has no NUL"))
        .as_ptr()
}
