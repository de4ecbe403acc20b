#ifndef ODDSQUEEZE_H
#define ODDSQUEEZE_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum OsqStatus {
  OSQ_STATUS_OK = 0,
  OSQ_STATUS_NULL_POINTER = 1,
  OSQ_STATUS_DOMAIN = 2,
  OSQ_STATUS_INVALID_ARGUMENT = 3,
  OSQ_STATUS_NUMERICAL = 4,
  OSQ_STATUS_IO = 5,
  OSQ_STATUS_PANIC = 6,
} OsqStatus;

typedef enum OsqQuadrature {
  OSQ_QUADRATURE_GAUSS_LEGENDRE = 0,
  OSQ_QUADRATURE_GAUSS_JACOBI = 1,
  OSQ_QUADRATURE_TANH_SINH = 2,
} OsqQuadrature;

/**
 * Opaque handle to a completed verification report.
 */
typedef struct OsqReport OsqReport;

/**
 * Opaque handle to a truncated squeeze matrix `D(ξ)`.
 */
typedef struct OsqSqueezeMatrix OsqSqueezeMatrix;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message describing the most recent failure on this thread, or null.
 * The pointer stays valid until the next call into this library on the
 * same thread.
 */
const char *osq_last_error_message(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *osq_version(void);

/**
 * Release a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must be null or a pointer previously returned by this library and
 * not yet freed.
 */
void osq_string_free(char *s);

/**
 * `I(p,n)` as an exact `"num/den"` string.
 *
 * # Safety
 * `out` must be valid for a pointer write.
 */
enum OsqStatus osq_ipn_exact(int64_t p, int64_t n, char **out);

/**
 * The inner alternating factorial sum as an exact `"num/den"` string.
 *
 * # Safety
 * `out` must be valid for a pointer write.
 */
enum OsqStatus osq_racah_inner_sum(int64_t p, int64_t n, int64_t l, char **out);

/**
 * `P_n^(alpha,beta)(y)` by the three-term recurrence.
 *
 * # Safety
 * `out` must be valid for an `f64` write.
 */
enum OsqStatus osq_jacobi_recurrence(uint64_t n, double alpha, double beta, double y, double *out);

/**
 * `⟨2m+1|ζ;2n+1⟩` for `ζ = |ζ| e^{-i phase}`.
 *
 * # Safety
 * `out_re` and `out_im` must be valid for `f64` writes.
 */
enum OsqStatus osq_overlap_value(uint64_t m,
                                 uint64_t n,
                                 double zeta_modulus,
                                 double phase,
                                 double *out_re,
                                 double *out_im);

/**
 * `I(p,n)` by quadrature. `node_count` is ignored for tanh-sinh and
 * `tol` is ignored by the Gauss rules.
 *
 * # Safety
 * `out` must be valid for an `f64` write.
 */
enum OsqStatus osq_ipn_quadrature(int64_t p,
                                  int64_t n,
                                  enum OsqQuadrature kind,
                                  size_t node_count,
                                  double tol,
                                  double *out);

/**
 * Build `D(ξ)` on `dim` Fock levels with `ξ = xi_modulus · e^{-i phase}`.
 *
 * # Safety
 * `out` must be valid for a pointer write. The handle must be released
 * with [`osq_squeeze_matrix_free`].
 */
enum OsqStatus osq_squeeze_matrix_new(double xi_modulus,
                                      double phase,
                                      size_t dim,
                                      struct OsqSqueezeMatrix **out);

/**
 * Number of Fock levels, or zero for a null handle.
 *
 * # Safety
 * `h` must be null or a live handle.
 */
size_t osq_squeeze_matrix_dim(const struct OsqSqueezeMatrix *h);

/**
 * `⟨row|D(ξ)|col⟩`.
 *
 * # Safety
 * `h` must be a live handle; `out_re` and `out_im` must be valid for
 * `f64` writes.
 */
enum OsqStatus osq_squeeze_matrix_entry(const struct OsqSqueezeMatrix *h,
                                        size_t row,
                                        size_t col,
                                        double *out_re,
                                        double *out_im);

/**
 * # Safety
 * `h` must be null or a handle from [`osq_squeeze_matrix_new`] not yet
 * freed.
 */
void osq_squeeze_matrix_free(struct OsqSqueezeMatrix *h);

/**
 * Run a verification suite. `suite` is one of `jacobi`, `racah`, `ipn`,
 * `identities`, `operator`, `completeness`, `even-divergence`, `all`;
 * `mode` is `exact`, `float` or `both`. Failed checks do not make this
 * call fail; inspect [`osq_report_failed`].
 *
 * # Safety
 * `suite` and `mode` must be NUL-terminated strings; `out` must be valid
 * for a pointer write. The handle must be released with
 * [`osq_report_free`].
 */
enum OsqStatus osq_report_run(const char *suite,
                              const char *mode,
                              uint64_t p_max,
                              uint64_t n_max,
                              double tol,
                              struct OsqReport **out);

/**
 * # Safety
 * `h` must be null or a live handle.
 */
size_t osq_report_record_count(const struct OsqReport *h);

/**
 * # Safety
 * `h` must be null or a live handle.
 */
size_t osq_report_passed(const struct OsqReport *h);

/**
 * # Safety
 * `h` must be null or a live handle.
 */
size_t osq_report_failed(const struct OsqReport *h);

/**
 * The report as a JSON document; free with [`osq_string_free`].
 *
 * # Safety
 * `h` must be a live handle; `out` must be valid for a pointer write.
 */
enum OsqStatus osq_report_to_json(const struct OsqReport *h, char **out);

/**
 * # Safety
 * `h` must be null or a handle from [`osq_report_run`] not yet freed.
 */
void osq_report_free(struct OsqReport *h);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ODDSQUEEZE_H */
