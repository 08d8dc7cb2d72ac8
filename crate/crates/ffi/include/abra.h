/* C interface to the abra library: abelian border arrays of binary words. */

#ifndef ABRA_H
#define ABRA_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status code returned by every fallible entry point.
 */
typedef enum AbraStatus {
  ABRA_STATUS_OK = 0,
  /**
   * A required pointer argument was NULL.
   */
  ABRA_STATUS_NULL_POINTER = 1,
  /**
   * A string argument was not valid UTF-8.
   */
  ABRA_STATUS_INVALID_UTF8 = 2,
  /**
   * A word or array failed to parse.
   */
  ABRA_STATUS_PARSE_ERROR = 3,
  /**
   * The operation rejects empty input.
   */
  ABRA_STATUS_EMPTY_INPUT = 4,
  /**
   * The input parsed but violates the operation's precondition
   * (for example, an invalid border array passed to extensions).
   */
  ABRA_STATUS_INVALID_ARGUMENT = 5,
} AbraStatus;

/**
 * Which border-array engine to run.
 */
typedef enum AbraEngine {
  ABRA_ENGINE_AUTO = 0,
  ABRA_ENGINE_NAIVE = 1,
  ABRA_ENGINE_INCREMENTAL = 2,
  ABRA_ENGINE_PACKED = 3,
} AbraEngine;

/**
 * Opaque computed border array.
 */
typedef struct AbraBorderArray AbraBorderArray;

/**
 * Opaque verification outcome.
 */
typedef struct AbraVerifyResult AbraVerifyResult;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Computes the abelian border array of a '0'/'1' word.
 *
 * On success writes a handle to `out`; free it with
 * [`abra_border_array_free`].
 *
 * # Safety
 * `word` must be a NUL-terminated string and `out` a valid pointer.
 */
enum AbraStatus abra_border_array_compute(const char *word,
                                          enum AbraEngine engine,
                                          struct AbraBorderArray **out);

/**
 * Number of entries in a computed border array.
 *
 * # Safety
 * `ba` must be a live handle from [`abra_border_array_compute`].
 */
size_t abra_border_array_len(const struct AbraBorderArray *ba);

/**
 * Pointer to the entries of a computed border array (`len` values, entry
 * `i` of the array at offset `i - 1`). Valid until the handle is freed.
 *
 * # Safety
 * `ba` must be a live handle from [`abra_border_array_compute`].
 */
const size_t *abra_border_array_data(const struct AbraBorderArray *ba);

/**
 * Frees a border-array handle. NULL is ignored.
 *
 * # Safety
 * `ba` must be NULL or a handle not yet freed.
 */
void abra_border_array_free(struct AbraBorderArray *ba);

/**
 * Decides whether `entries[0..len]` is a valid abelian border array.
 *
 * On success writes a handle to `out`; free it with
 * [`abra_verify_result_free`]. Verification itself never fails: invalid
 * arrays produce a handle whose `is_valid` is false.
 *
 * # Safety
 * `entries` must point to `len` readable values and `out` must be valid.
 */
enum AbraStatus abra_verify(const size_t *entries,
                            size_t len,
                            enum AbraEngine engine,
                            struct AbraVerifyResult **out);

/**
 * Whether the verified candidate is a valid abelian border array.
 *
 * # Safety
 * `result` must be a live handle from [`abra_verify`].
 */
bool abra_verify_result_is_valid(const struct AbraVerifyResult *result);

/**
 * 1-based index of the first failure for an invalid candidate; 0 when the
 * candidate is valid.
 *
 * # Safety
 * `result` must be a live handle from [`abra_verify`].
 */
size_t abra_verify_result_mismatch_index(const struct AbraVerifyResult *result);

/**
 * The canonical generating word of a valid candidate as a fresh string;
 * NULL when the candidate is invalid. Free with [`abra_string_free`].
 *
 * # Safety
 * `result` must be a live handle from [`abra_verify`].
 */
char *abra_verify_result_word(const struct AbraVerifyResult *result);

/**
 * Frees a verification handle. NULL is ignored.
 *
 * # Safety
 * `result` must be NULL or a handle not yet freed.
 */
void abra_verify_result_free(struct AbraVerifyResult *result);

/**
 * The two values that extend a valid array of length `len` to length
 * `len + 1`. Fails with `InvalidArgument` when the input array is not
 * valid.
 *
 * # Safety
 * `entries` must point to `len` readable values; the out-pointers must be
 * valid.
 */
enum AbraStatus abra_extensions(const size_t *entries,
                                size_t len,
                                size_t *out_with_zero,
                                size_t *out_with_one);

/**
 * Number of valid abelian border arrays of length `n` (`2^(n-1)`), written
 * as a decimal string. Free with [`abra_string_free`].
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum AbraStatus abra_count_valid(size_t n, char **out);

/**
 * `(3^(n-1) + 1) / 2` as a decimal string, the ternary upper bound.
 * Free with [`abra_string_free`].
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum AbraStatus abra_ternary_upper_bound(size_t n, char **out);

/**
 * The `n`-th Bell number as a decimal string. Free with
 * [`abra_string_free`].
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum AbraStatus abra_bell_number(size_t n, char **out);

/**
 * Frees a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must be NULL or a string returned by this library, not yet freed.
 */
void abra_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ABRA_H */
