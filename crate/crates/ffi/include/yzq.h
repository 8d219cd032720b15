#ifndef YZQ_H
#define YZQ_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes. `YZQ_STATUS_OK` is zero.
 */
typedef enum {
  YZQ_STATUS_OK = 0,
  YZQ_STATUS_NULL_POINTER = 1,
  YZQ_STATUS_INVALID_UTF8 = 2,
  YZQ_STATUS_UNKNOWN_SERIES = 3,
  YZQ_STATUS_UNKNOWN_SUITE = 4,
  YZQ_STATUS_OUT_OF_RANGE = 5,
  YZQ_STATUS_PANIC = 6,
} YzqStatus;

/**
 * Opaque handle to an exact truncated series.
 */
typedef struct YzqSeries YzqSeries;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread. The pointer stays valid
 * until the next failing call on the same thread.
 */
const char *yzq_last_error_message(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *yzq_version(void);

/**
 * Computes the named series through `t^order` into `*out`.
 *
 * # Safety
 * `id` must be a NUL-terminated string and `out` a valid pointer.
 */
YzqStatus yzq_series_new(const char *id, size_t order, YzqSeries **out);

/**
 * # Safety
 * `s` must come from [`yzq_series_new`] and not have been freed; null is ignored.
 */
void yzq_series_free(YzqSeries *s);

/**
 * # Safety
 * `s` must be a live handle and `out` a valid pointer.
 */
YzqStatus yzq_series_order(const YzqSeries *s, size_t *out);

/**
 * Writes the series name (static string) into `*out`.
 *
 * # Safety
 * `s` must be a live handle and `out` a valid pointer.
 */
YzqStatus yzq_series_id(const YzqSeries *s, const char **out);

/**
 * Coefficient of `t^k` as a newly allocated canonical string.
 *
 * # Safety
 * `s` must be a live handle and `out` a valid pointer. Release the string
 * with [`yzq_string_free`].
 */
YzqStatus yzq_series_coefficient(const YzqSeries *s, size_t k, char **out);

/**
 * # Safety
 * `p` must come from this library; null is ignored.
 */
void yzq_string_free(char *p);

/**
 * Runs a verify suite (`qmod`, `n0-ode`, `ode3`, `prop31`, `lemma5-6`,
 * `lemma7`, `all`). `*passed` tells whether every identity held;
 * `*first_failure` is the smallest failing degree, or -1.
 *
 * # Safety
 * `suite` must be a NUL-terminated string; the output pointers must be valid.
 */
YzqStatus yzq_verify(const char *suite, size_t order, bool *passed, int64_t *first_failure);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* YZQ_H */
