#ifndef HERMGF_H
#define HERMGF_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every fallible call.
 */
typedef enum HgStatus {
  HG_STATUS_OK = 0,
  HG_STATUS_NULL_POINTER = 1,
  HG_STATUS_INVALID_ARGUMENT = 2,
  HG_STATUS_UNKNOWN_NAME = 3,
  HG_STATUS_BOUND_EXCEEDED = 4,
  HG_STATUS_INTERNAL = 5,
} HgStatus;

/**
 * Polynomial in `u` and `x` over the rationals.
 */
typedef struct HgPolynomial HgPolynomial;

/**
 * Outcome of one identity verification.
 */
typedef struct HgReport HgReport;

/**
 * Truncated power series in `z`.
 */
typedef struct HgSeries HgSeries;

/**
 * Message for the most recent failure on this thread, or NULL. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *hg_last_error(void);

/**
 * Frees a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void hg_string_free(char *s);

/**
 * `h_n(u)` for `kind = 'h'`, `H_n(u)` for `kind = 'H'`.
 *
 * # Safety
 * `out` must be a valid pointer to writable storage.
 */
enum HgStatus hg_hermite(char kind, uint32_t n, struct HgPolynomial **out);

/**
 * Canonical text form, e.g. `u^3 + 3*u`. Returns NULL for a NULL handle.
 *
 * # Safety
 * `p` must be NULL or a live polynomial handle.
 */
char *hg_polynomial_to_string(const struct HgPolynomial *p);

/**
 * Coefficient of `u^deg_u x^deg_x` as `p` or `p/q`.
 *
 * # Safety
 * `p` must be a live polynomial handle and `out` writable.
 */
enum HgStatus hg_polynomial_coefficient(const struct HgPolynomial *p,
                                        uint32_t deg_u,
                                        uint32_t deg_x,
                                        char **out);

/**
 * # Safety
 * `p` must be NULL or a live polynomial handle; it is invalid afterwards.
 */
void hg_polynomial_free(struct HgPolynomial *p);

/**
 * Builds a named series (`w`, `tree`, `rhs-main`, ...) to `order`.
 *
 * # Safety
 * `name` must be a NUL-terminated string and `out` writable.
 */
enum HgStatus hg_expand(const char *name, uint32_t order, struct HgSeries **out);

/**
 * Truncation order of a series, or 0 for NULL.
 *
 * # Safety
 * `s` must be NULL or a live series handle.
 */
uint32_t hg_series_order(const struct HgSeries *s);

/**
 * Coefficient of `z^n`.
 *
 * # Safety
 * `s` must be a live series handle and `out` writable.
 */
enum HgStatus hg_series_coefficient(const struct HgSeries *s,
                                    uint32_t n,
                                    struct HgPolynomial **out);

/**
 * # Safety
 * `s` must be NULL or a live series handle; it is invalid afterwards.
 */
void hg_series_free(struct HgSeries *s);

/**
 * Verifies a named identity to `order`. A mismatch is not an error: the
 * call returns `HG_STATUS_OK` and the report says `mismatch`.
 *
 * # Safety
 * `name` must be a NUL-terminated string and `out` writable.
 */
enum HgStatus hg_verify(const char *name, uint32_t order, struct HgReport **out);

/**
 * `true` iff the report says `verified`; `false` for NULL.
 *
 * # Safety
 * `r` must be NULL or a live report handle.
 */
bool hg_report_is_verified(const struct HgReport *r);

/**
 * The report as JSON:
 * `{"identity", "order", "status", "mismatch": {...} | null}`.
 *
 * # Safety
 * `r` must be NULL or a live report handle.
 */
char *hg_report_to_json(const struct HgReport *r);

/**
 * # Safety
 * `r` must be NULL or a live report handle; it is invalid afterwards.
 */
void hg_report_free(struct HgReport *r);

/**
 * Weighted census of all matchings on `m` points.
 *
 * # Safety
 * `out` must be writable.
 */
enum HgStatus hg_matching_census(uint32_t m, struct HgPolynomial **out);

/**
 * Number of w-trees with `n` internal vertices, by enumeration.
 *
 * # Safety
 * `out` must be writable.
 */
enum HgStatus hg_w_tree_count(uint32_t n, uint64_t *out);

/**
 * Factor census check for all `n' <= n` as JSON
 * `{"n_max", "passed", "checks": [...]}`.
 *
 * # Safety
 * `out` must be writable.
 */
enum HgStatus hg_census_check_json(uint32_t n, char **out);

#endif  /* HERMGF_H */
