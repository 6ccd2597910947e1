#ifndef GMODULAR_H
#define GMODULAR_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum GmStatus {
  GM_STATUS_OK = 0,
  GM_STATUS_DOMAIN = 1,
  GM_STATUS_NON_CONVERGENCE = 2,
  GM_STATUS_UNSUPPORTED_REGIME = 3,
  GM_STATUS_OVERFLOW = 4,
  GM_STATUS_UNKNOWN = 5,
  GM_STATUS_INVALID_GRID = 6,
  GM_STATUS_NULL_POINTER = 7,
  GM_STATUS_INVALID_UTF8 = 8,
  GM_STATUS_PANIC = 9,
} GmStatus;

/**
 * Evaluation settings plus the last error message.
 */
typedef struct GmContext GmContext;

/**
 * Result of a suite run.
 */
typedef struct GmReport GmReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * New context with default settings. Free with [`gm_context_free`].
 */
struct GmContext *gm_context_new(void);

/**
 * # Safety
 * `ctx` must be null or come from [`gm_context_new`] and not be freed yet.
 */
void gm_context_free(struct GmContext *ctx);

/**
 * Override the series tolerance and the argument where the expansion
 * around 1 takes over.
 *
 * # Safety
 * `ctx` must be null or a live context.
 */
enum GmStatus gm_context_set_series(struct GmContext *ctx,
                                    double series_tol,
                                    double near_one_switch);

/**
 * Message of the last failed call on `ctx`, or null. Owned by the context.
 *
 * # Safety
 * `ctx` must be null or a live context.
 */
const char *gm_last_error(const struct GmContext *ctx);

/**
 * `K_a(r)`
 *
 * # Safety
 * `ctx` must be a live context and `out` writable.
 */
enum GmStatus gm_ell_k(struct GmContext *ctx, double a, double r, double *out);

/**
 * `E_a(r)`
 *
 * # Safety
 * `ctx` must be a live context and `out` writable.
 */
enum GmStatus gm_ell_e(struct GmContext *ctx, double a, double r, double *out);

/**
 * `μ_a(r)`
 *
 * # Safety
 * `ctx` must be a live context and `out` writable.
 */
enum GmStatus gm_mu(struct GmContext *ctx, double a, double r, double *out);

/**
 * `μ_a⁻¹(y)`
 *
 * # Safety
 * `ctx` must be a live context and `out` writable.
 */
enum GmStatus gm_mu_inv(struct GmContext *ctx, double a, double y, double *out);

/**
 * `φ_K^a(r)`
 *
 * # Safety
 * `ctx` must be a live context and `out` writable.
 */
enum GmStatus gm_phi(struct GmContext *ctx, double a, double k, double r, double *out);

/**
 * `η_K^a(x)`
 *
 * # Safety
 * `ctx` must be a live context and `out` writable.
 */
enum GmStatus gm_eta(struct GmContext *ctx, double a, double k, double x, double *out);

/**
 * `λ_a(K)`
 *
 * # Safety
 * `ctx` must be a live context and `out` writable.
 */
enum GmStatus gm_lambda(struct GmContext *ctx, double a, double k, double *out);

/**
 * Number of registered suites.
 */
uintptr_t gm_suite_count(void);

/**
 * Id of suite `index`, or null past the end. The string is static.
 */
const char *gm_suite_id(uintptr_t index);

/**
 * Run a suite on the default grid. On success `*out` receives a report
 * to be released with [`gm_report_free`]; failed checks still return `OK`.
 *
 * # Safety
 * `ctx` must be a live context, `suite_id` a NUL-terminated string and
 * `out` writable.
 */
enum GmStatus gm_run_suite(struct GmContext *ctx,
                           const char *suite_id,
                           double slack,
                           struct GmReport **out);

/**
 * # Safety
 * `report` must be null or come from [`gm_run_suite`] and not be freed yet.
 */
void gm_report_free(struct GmReport *report);

/**
 * Number of evaluated points; 0 for a null report.
 *
 * # Safety
 * `report` must be null or a live report.
 */
uintptr_t gm_report_total(const struct GmReport *report);

/**
 * # Safety
 * `report` must be null or a live report.
 */
uintptr_t gm_report_failures(const struct GmReport *report);

/**
 * Smallest scaled margin; NaN for a null report.
 *
 * # Safety
 * `report` must be null or a live report.
 */
double gm_report_min_margin(const struct GmReport *report);

/**
 * Exit code the command-line tool would give for this report.
 *
 * # Safety
 * `report` must be null or a live report.
 */
int32_t gm_report_exit_code(const struct GmReport *report);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* GMODULAR_H */
