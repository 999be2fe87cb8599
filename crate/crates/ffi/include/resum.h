#ifndef RESUM_H
#define RESUM_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stddef.h>
#include <stdint.h>

// Status codes returned by every fallible function.
typedef enum ResumStatus {
  RESUM_STATUS_OK = 0,
  // Bad arguments or a model that fails validation.
  RESUM_STATUS_INVALID_INPUT = 1,
  // Quadrature or another numerical step failed.
  RESUM_STATUS_NUMERICAL = 2,
  RESUM_STATUS_IO = 3,
  // A required pointer was null.
  RESUM_STATUS_NULL_POINTER = 4,
  // The library panicked; this is a bug.
  RESUM_STATUS_INTERNAL = 5,
} ResumStatus;

// Opaque coefficient model with its constant term.
typedef struct ResumModel ResumModel;

// A complex number as two doubles.
typedef struct ResumComplex {
  double re;
  double im;
} ResumComplex;

// Parse a JSON model document.
//
// # Safety
// `json` must be a NUL-terminated string and `out` a valid pointer to writable storage.
enum ResumStatus resum_model_from_json(const char *json, struct ResumModel **out);

// Build a builtin model from a spec such as `hurwitz:a=1,b=1` or `exp_sqrt:gamma=-1`.
//
// # Safety
// `spec` must be a NUL-terminated string and `out` a valid pointer to writable storage.
enum ResumStatus resum_model_builtin(const char *spec, struct ResumModel **out);

// Release a model. Null is ignored.
//
// # Safety
// `model` must be null or a handle from this library that has not been freed.
void resum_model_free(struct ResumModel *model);

// Number of terms `a_j` in the model, or 0 for a null handle.
//
// # Safety
// `model` must be null or a live handle.
size_t resum_model_term_count(const struct ResumModel *model);

// Taylor coefficient `c_k`, `k ≥ 1`, by quadrature to absolute tolerance `tol`.
//
// # Safety
// `model` must be a live handle and `out` writable.
enum ResumStatus resum_coefficient(const struct ResumModel *model,
                                   uint32_t k,
                                   double tol,
                                   struct ResumComplex *out);

// `f(z) = f0 + Σ c_k z^k`, continued to the plane minus the cuts.
// `abs_err` may be null.
//
// # Safety
// `model` must be a live handle, `value` writable, `abs_err` null or writable.
enum ResumStatus resum_eval(const struct ResumModel *model,
                            struct ResumComplex z,
                            double tol,
                            struct ResumComplex *value,
                            double *abs_err);

// The entire function `f0 + Σ c_k z^k / k!`. `abs_err` may be null.
//
// # Safety
// As for [`resum_eval`].
enum ResumStatus resum_eval_entire(const struct ResumModel *model,
                                   struct ResumComplex z,
                                   double tol,
                                   struct ResumComplex *value,
                                   double *abs_err);

// Borel sum of `Σ_{k≥1} c_k k! x^{-k-1}` at `x > 0`. `abs_err` may be null.
//
// # Safety
// `model` must be a live handle, `value` writable, `abs_err` null or writable.
enum ResumStatus resum_borel_sum(const struct ResumModel *model,
                                 double x,
                                 double tol,
                                 struct ResumComplex *value,
                                 double *abs_err);

// `ln Γ(n)` for `n > 0` from Stirling's terms plus a Laplace integral.
//
// # Safety
// `out` must be writable.
enum ResumStatus resum_lngamma(double n, double tol, double *out);

// Copy the calling thread's last error message into `buf` (NUL-terminated,
// truncated to `len - 1` bytes) and return the full message length in bytes.
// Pass a null `buf` to query the length.
//
// # Safety
// `buf` must be null or point to `len` writable bytes.
size_t resum_last_error_message(char *buf, size_t len);

// Library version as a static NUL-terminated string.
const char *resum_version(void);

#endif  /* RESUM_H */
