#ifndef STANLEY_H
#define STANLEY_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every fallible call.
 */
typedef enum StanleyStatus {
  STANLEY_STATUS_OK = 0,
  STANLEY_STATUS_NULL_POINTER = 1,
  STANLEY_STATUS_INVALID_UTF8 = 2,
  STANLEY_STATUS_PARSE = 3,
  STANLEY_STATUS_DOMAIN = 4,
  STANLEY_STATUS_VERIFICATION_FAILED = 5,
  STANLEY_STATUS_RESOURCE_LIMIT = 6,
  STANLEY_STATUS_PANIC = 7,
} StanleyStatus;

/**
 * Outcome of decomposition verification.
 */
typedef enum StanleyVerdict {
  STANLEY_VERDICT_VALID = 0,
  STANLEY_VERDICT_OVERLAP = 1,
  STANLEY_VERDICT_GAP = 2,
  STANLEY_VERDICT_LEAK = 3,
} StanleyVerdict;

/**
 * Opaque Stanley decomposition.
 */
typedef struct StanleyDecomposition StanleyDecomposition;

/**
 * Opaque monomial ideal.
 */
typedef struct StanleyIdeal StanleyIdeal;

/**
 * Search budgets for sdepth and fdepth.
 */
typedef struct StanleyLimits {
  size_t max_poset_points;
  uint64_t max_nodes;
} StanleyLimits;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or NULL. Owned by the
 * library; valid until the next call on the same thread.
 */
const char *stanley_last_error(void);

/**
 * Default budgets: 5000 poset points, 10^7 search nodes.
 */
struct StanleyLimits stanley_limits_default(void);

/**
 * # Safety
 * `s` is null or was returned by this library and not yet freed.
 */
void stanley_string_free(char *s);

/**
 * Parses an ideal in the line format (`vars x y`, `gen x*y`).
 *
 * # Safety
 * `text` is a NUL-terminated string; `out` is writable.
 */
enum StanleyStatus stanley_ideal_parse(const char *text, struct StanleyIdeal **out);

/**
 * # Safety
 * `ideal` is null or a live handle from this library.
 */
void stanley_ideal_free(struct StanleyIdeal *ideal);

/**
 * Number of variables, 0 for a null handle.
 *
 * # Safety
 * `ideal` is null or a live handle.
 */
size_t stanley_ideal_num_vars(const struct StanleyIdeal *ideal);

/**
 * Renders the minimal generators, e.g. `(x^2, x*y)`.
 *
 * # Safety
 * `ideal` is a live handle; `out` is writable.
 */
enum StanleyStatus stanley_ideal_to_string(const struct StanleyIdeal *ideal, char **out);

/**
 * Writes whether the monomial `mono` (e.g. `x^2*y`) lies in the ideal.
 *
 * # Safety
 * `ideal` is a live handle, `mono` a NUL-terminated string, `out` writable.
 */
enum StanleyStatus stanley_ideal_contains(const struct StanleyIdeal *ideal,
                                          const char *mono,
                                          bool *out);

/**
 * The colon ideal `I : mono` as a new handle.
 *
 * # Safety
 * `ideal` is a live handle, `mono` a NUL-terminated string, `out` writable.
 */
enum StanleyStatus stanley_ideal_colon(const struct StanleyIdeal *ideal,
                                       const char *mono,
                                       struct StanleyIdeal **out);

/**
 * The image of the ideal under `var -> 1`, over the remaining variables.
 *
 * # Safety
 * `ideal` is a live handle, `var` a NUL-terminated string, `out` writable.
 */
enum StanleyStatus stanley_ideal_localize(const struct StanleyIdeal *ideal,
                                          const char *var,
                                          struct StanleyIdeal **out);

/**
 * sdepth of `S/I`. When `decomposition` is non-null it receives an optimal
 * decomposition.
 *
 * # Safety
 * `ideal` is a live handle; `out` writable; `decomposition` null or writable.
 */
enum StanleyStatus stanley_sdepth(const struct StanleyIdeal *ideal,
                                  struct StanleyLimits limits,
                                  size_t *out,
                                  struct StanleyDecomposition **decomposition);

/**
 * fdepth of `S/I`, searching filtration offsets up to the lcm exponent plus `slack`.
 *
 * # Safety
 * `ideal` is a live handle; `out` writable.
 */
enum StanleyStatus stanley_fdepth(const struct StanleyIdeal *ideal,
                                  uint32_t slack,
                                  struct StanleyLimits limits,
                                  size_t *out);

/**
 * Parses a decomposition (`vars`, `gen` and `space u | vars` lines).
 * `base_dir` resolves `ideal <file>` lines and may be null.
 *
 * # Safety
 * `text` is a NUL-terminated string; `base_dir` null or NUL-terminated; `out` writable.
 */
enum StanleyStatus stanley_decomposition_parse(const char *text,
                                               const char *base_dir,
                                               struct StanleyDecomposition **out);

/**
 * # Safety
 * `d` is null or a live handle from this library.
 */
void stanley_decomposition_free(struct StanleyDecomposition *d);

/**
 * Renders the decomposition in the line format.
 *
 * # Safety
 * `d` is a live handle; `out` writable.
 */
enum StanleyStatus stanley_decomposition_to_string(const struct StanleyDecomposition *d,
                                                   char **out);

/**
 * Checks the decomposition. `witness`, when non-null, receives a
 * description of the first offending monomial (or `Valid`).
 *
 * # Safety
 * `d` is a live handle; `out` writable; `witness` null or writable.
 */
enum StanleyStatus stanley_decomposition_verify(const struct StanleyDecomposition *d,
                                                enum StanleyVerdict *out,
                                                char **witness);

/**
 * Minimum space dimension of a decomposition.
 *
 * # Safety
 * `d` is a live handle; `out` writable.
 */
enum StanleyStatus stanley_decomposition_sdepth(const struct StanleyDecomposition *d, size_t *out);

/**
 * Localizes a decomposition at `var -> 1`. Fails with
 * `VerificationFailed` when the input or the result is not valid.
 *
 * # Safety
 * `d` is a live handle, `var` a NUL-terminated string, `out` writable.
 */
enum StanleyStatus stanley_decomposition_localize(const struct StanleyDecomposition *d,
                                                  const char *var,
                                                  struct StanleyDecomposition **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* STANLEY_H */
