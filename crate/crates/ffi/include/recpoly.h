#ifndef RECPOLY_H
#define RECPOLY_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum {
  RP_STATUS_OK = 0,
  RP_STATUS_NULL_ARGUMENT = 1,
  RP_STATUS_INVALID_UTF8 = 2,
  RP_STATUS_PARSE = 3,
  RP_STATUS_INVALID_ARGUMENT = 4,
  RP_STATUS_NEEDS_DELTA_INITIALS = 5,
  RP_STATUS_RESOURCE = 6,
  RP_STATUS_NO_CONVERGENCE = 7,
  RP_STATUS_UNKNOWN_IDENTITY = 8,
  RP_STATUS_VERIFICATION = 9,
  RP_STATUS_IO = 10,
  RP_STATUS_PANIC = 11,
} RpStatus;

typedef enum {
  RP_ENGINE_ITERATE = 0,
  RP_ENGINE_MULTINOMIAL = 1,
  RP_ENGINE_DETERMINANT = 2,
  RP_ENGINE_COMPANION = 3,
} RpEngine;

typedef enum {
  RP_FAMILY_GENERIC = 0,
  RP_FAMILY_CLASSICAL = 1,
  RP_FAMILY_NUMBERS = 2,
  RP_FAMILY_DICKSON = 3,
} RpFamily;

/**
 * Opaque polynomial handle.
 */
typedef struct RpPoly RpPoly;

/**
 * Opaque recurrence handle.
 */
typedef struct RpSpec RpSpec;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or null. The pointer is
 * valid until the next call into this library on the same thread.
 */
const char *rp_last_error(void);

/**
 * Library version as a static string.
 */
const char *rp_version(void);

/**
 * Parses a TOML recurrence document.
 *
 * # Safety
 * `toml` must be a nul-terminated string and `out` a writable pointer.
 */
RpStatus rp_spec_from_toml(const char *toml, RpSpec **out);

/**
 * Builds a named preset (`fibonacci2`, `lucas2`, `dickson-d`, `dickson-e`,
 * `generalized-lucas`). `order` is read only by `generalized-lucas`; pass
 * 0 otherwise.
 *
 * # Safety
 * `name` must be a nul-terminated string and `out` a writable pointer.
 */
RpStatus rp_spec_from_preset(const char *name, int64_t order, RpSpec **out);

/**
 * Order `k` of the recurrence, or 0 for a null handle.
 *
 * # Safety
 * `spec` must be null or a handle from this library.
 */
size_t rp_spec_order(const RpSpec *spec);

/**
 * # Safety
 * `spec` must be null or a handle from this library not yet freed.
 */
void rp_spec_free(RpSpec *spec);

/**
 * `P_n` by one engine. `budget` caps intermediate term counts; 0 means
 * unlimited. The closed-form engines need delta initials at `k−1` unless
 * `compose` is true.
 *
 * # Safety
 * `spec` must be a live handle and `out` a writable pointer.
 */
RpStatus rp_term(const RpSpec *spec,
                 uint64_t n,
                 RpEngine engine,
                 bool compose,
                 size_t budget,
                 RpPoly **out);

/**
 * Parses an expression over comma-separated variable names, e.g.
 * `rp_poly_parse("x^2 - 2*a", "x,a", &p)`.
 *
 * # Safety
 * `text` and `vars` must be nul-terminated strings and `out` writable.
 */
RpStatus rp_poly_parse(const char *text, const char *vars, RpPoly **out);

/**
 * Canonical text form of a polynomial.
 *
 * # Safety
 * `poly` must be a live handle and `out` writable.
 */
RpStatus rp_poly_to_string(const RpPoly *poly, char **out);

/**
 * Exact value at an integer point such as `"x=1,a=-1"`, as a decimal string.
 *
 * # Safety
 * `poly` must be a live handle, `point` nul-terminated, `out` writable.
 */
RpStatus rp_poly_eval(const RpPoly *poly, const char *point, char **out);

/**
 * Number of nonzero terms, or 0 for a null handle.
 *
 * # Safety
 * `poly` must be null or a live handle.
 */
size_t rp_poly_num_terms(const RpPoly *poly);

/**
 * Exact equality; false if either handle is null.
 *
 * # Safety
 * Both arguments must be null or live handles.
 */
bool rp_poly_equal(const RpPoly *a, const RpPoly *b);

/**
 * # Safety
 * `poly` must be null or a handle from this library not yet freed.
 */
void rp_poly_free(RpPoly *poly);

/**
 * # Safety
 * `s` must be null or a string returned by this library not yet freed.
 */
void rp_string_free(char *s);

/**
 * Runs one catalog identity; `*passed` receives the verdict. A failing
 * identity is a successful call with `*passed == false`; the witness is
 * then available from [`rp_last_error`].
 *
 * # Safety
 * `id` must be nul-terminated and `passed` writable.
 */
RpStatus rp_identity_check(const char *id,
                           RpFamily family,
                           uint64_t n_max,
                           uint64_t p_max,
                           uint64_t m_max,
                           bool *passed);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* RECPOLY_H */
