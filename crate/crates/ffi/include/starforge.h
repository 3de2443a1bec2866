#ifndef STARFORGE_H
#define STARFORGE_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum SfStatus {
  SF_OK = 0,
  /**
   * the computation ran and a check failed
   */
  SF_CHECK_FAILED = 1,
  SF_NULL_ARGUMENT = 2,
  SF_INVALID_UTF8 = 3,
  SF_PARSE_ERROR = 4,
  SF_INVALID_INPUT = 5,
  SF_NOT_INVERTIBLE = 6,
  SF_IO_ERROR = 7,
  SF_PANIC = 8,
} SfStatus;

/**
 * A Drinfeld double D(kG) of a finite group algebra.
 */
typedef struct SfDouble SfDouble;

/**
 * The quadratic algebra of FRT relations of an R-matrix.
 */
typedef struct SfQuadratic SfQuadratic;

/**
 * An R-matrix over Q(q).
 */
typedef struct SfRMatrix SfRMatrix;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failing call on this thread, or null. Owned by the
 * library; valid until the next call.
 */
const char *sf_last_error(void);

/**
 * Library version as a static string.
 */
const char *sf_version(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be freed twice.
 */
void sf_string_free(char *s);

/**
 * Moyal product of two expressions over `x1..x(2ell)` truncated at
 * `order`; writes the rendered series to `*result`.
 *
 * # Safety
 * `u` and `v` must be nul-terminated strings; `result` must be writable.
 */
enum SfStatus sf_moyal_star(uint32_t ell,
                            const char *u,
                            const char *v,
                            uint32_t order,
                            char **result);

/**
 * Runs a verification suite (`moyal`, `hopf`, `smash`, `double`, `frt`,
 * `all`); writes the JSON report to `*report_json`. Returns
 * `SF_CHECK_FAILED` if any check fails.
 *
 * # Safety
 * `suite` must be a nul-terminated string; `report_json` must be writable.
 */
enum SfStatus sf_verify(const char *suite, uint64_t seed, char **report_json);

/**
 * Loads an R-matrix by shipped name (`sl2q`, `nonflat`, `identity`) or
 * JSON file path.
 *
 * # Safety
 * `spec` must be a nul-terminated string; `handle_out` must be writable.
 */
enum SfStatus sf_rmatrix_load(const char *spec, struct SfRMatrix **handle_out);

/**
 * Dimension `n` of `V`.
 *
 * # Safety
 * `r` must be a live handle; `n` must be writable.
 */
enum SfStatus sf_rmatrix_dim(const struct SfRMatrix *r, uint32_t *n);

/**
 * `SF_OK` if the Yang-Baxter equation holds, `SF_CHECK_FAILED` with the
 * witness in [`sf_last_error`] otherwise.
 *
 * # Safety
 * `r` must be a live handle.
 */
enum SfStatus sf_rmatrix_ybe(const struct SfRMatrix *r);

/**
 * # Safety
 * `r` must be null or a handle from [`sf_rmatrix_load`], freed once.
 */
void sf_rmatrix_free(struct SfRMatrix *r);

/**
 * FRT relations of `r`, row-reduced.
 *
 * # Safety
 * `r` must be a live handle; `handle_out` must be writable.
 */
enum SfStatus sf_frt_relations(const struct SfRMatrix *r, struct SfQuadratic **handle_out);

/**
 * Number of independent quadratic relations.
 *
 * # Safety
 * `q` must be a live handle; `count` must be writable.
 */
enum SfStatus sf_quadratic_relation_count(const struct SfQuadratic *q, uint32_t *count);

/**
 * Relations, one `... = 0` per line.
 *
 * # Safety
 * `q` must be a live handle; `result` must be writable.
 */
enum SfStatus sf_quadratic_render(const struct SfQuadratic *q, char **result);

/**
 * Dimension of the degree-`degree` component (2 or 3) and the
 * commutative benchmark.
 *
 * # Safety
 * `q` must be a live handle; `dim` and `benchmark` must be writable.
 */
enum SfStatus sf_quadratic_flatness(const struct SfQuadratic *q,
                                    uint32_t degree,
                                    uint64_t *dim,
                                    uint64_t *benchmark);

/**
 * # Safety
 * `q` must be null or a handle from [`sf_frt_relations`], freed once.
 */
void sf_quadratic_free(struct SfQuadratic *q);

/**
 * Builds `D(kG)` for a group given by shipped name (`Z2`, `S3`, ..) or
 * JSON file path.
 *
 * # Safety
 * `group` must be a nul-terminated string; `handle_out` must be writable.
 */
enum SfStatus sf_double_build(const char *group, struct SfDouble **handle_out);

/**
 * Dimension of the double.
 *
 * # Safety
 * `d` must be a live handle; `dim` must be writable.
 */
enum SfStatus sf_double_dim(const struct SfDouble *d, uint64_t *dim);

/**
 * Hopf axioms, structure identities and R-matrix checks; writes the JSON
 * report to `*report_json`.
 *
 * # Safety
 * `d` must be a live handle; `report_json` must be writable.
 */
enum SfStatus sf_double_check(const struct SfDouble *d, char **report_json);

/**
 * # Safety
 * `d` must be null or a handle from [`sf_double_build`], freed once.
 */
void sf_double_free(struct SfDouble *d);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* STARFORGE_H */
