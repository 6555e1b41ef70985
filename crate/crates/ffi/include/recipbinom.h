#ifndef RECIPBINOM_H
#define RECIPBINOM_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum RbStatus {
  RB_STATUS_OK = 0,
  RB_STATUS_NULL_ARGUMENT = 1,
  RB_STATUS_INVALID_UTF8 = 2,
  RB_STATUS_PARSE = 3,
  RB_STATUS_DOMAIN = 4,
  RB_STATUS_DIVERGENT = 5,
  RB_STATUS_ORDER_CAP = 6,
  RB_STATUS_OUT_OF_RANGE = 7,
  RB_STATUS_SERIES = 8,
  RB_STATUS_PANIC = 9,
} RbStatus;

// Exact expansion of a closed form.
typedef struct RbExpansion RbExpansion;

// Reports produced by one check id.
typedef struct RbReport RbReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Library version, a static string.
const char *rb_version(void);

// Message of the last failure on this thread, or null. Valid until the next
// call into the library on the same thread.
const char *rb_last_error_message(void);

// Releases a string returned by this library. Null is ignored.
void rb_string_free(char *s);

// `1 / binom(n, m)` rendered as `"p/q"` (zero outside the triangle).
enum RbStatus rb_recip_binom(int64_t n, int64_t m, char **out);

// Table cell `variant` (`"A"`, `"I3"`, ...) at `(n, m)`, rendered as `"p/q"`.
enum RbStatus rb_table_entry(const char *variant, int64_t n, int64_t m, char **out);

// Expands closed form `id` to `order`; the handle goes to `*out`.
enum RbStatus rb_expand(const char *id, size_t order, struct RbExpansion **out);

enum RbStatus rb_expansion_order(const struct RbExpansion *h, size_t *out);

enum RbStatus rb_expansion_is_bivariate(const struct RbExpansion *h, bool *out);

// `[x^n y^m]` as `"p/q"`; pass `m = 0` for univariate expansions.
enum RbStatus rb_expansion_coeff(const struct RbExpansion *h, size_t n, size_t m, char **out);

// `[x^n y^m]` rounded to a double.
enum RbStatus rb_expansion_coeff_f64(const struct RbExpansion *h, size_t n, size_t m, double *out);

void rb_expansion_free(struct RbExpansion *h);

// Runs check `id` (as accepted by the `check` command) up to `max_n`.
enum RbStatus rb_check_run(const char *id, size_t max_n, struct RbReport **out);

// True when no report of the check has status `fail`.
enum RbStatus rb_report_passed(const struct RbReport *h, bool *out);

// The reports as a JSON array.
enum RbStatus rb_report_json(const struct RbReport *h, char **out);

void rb_report_free(struct RbReport *h);

// `Li2(z)`; for `z > 1` the real part, with `*branch_extended` set.
// `branch_extended` may be null.
enum RbStatus rb_dilog(double z, double *value, bool *branch_extended);

// Double evaluation of closed form `id` at `(x, y)`.
enum RbStatus rb_eval_closed(const char *id, double x, double y, double *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* RECIPBINOM_H */
