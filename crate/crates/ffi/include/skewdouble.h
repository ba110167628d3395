#ifndef SKEWDOUBLE_H
#define SKEWDOUBLE_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every fallible call.
 */
typedef enum SdStatus {
  SD_STATUS_OK = 0,
  SD_STATUS_NULL_POINTER = 1,
  SD_STATUS_INVALID_UTF8 = 2,
  SD_STATUS_PARSE = 3,
  /**
   * Input is well-formed but not of the required kind.
   */
  SD_STATUS_INVALID_INPUT = 4,
  /**
   * Relations violate the association scheme axioms.
   */
  SD_STATUS_AXIOM = 5,
  /**
   * A size cap was exceeded.
   */
  SD_STATUS_LIMIT = 6,
  /**
   * The result does not fit the C type.
   */
  SD_STATUS_OVERFLOW = 7,
  /**
   * A checked property turned out false.
   */
  SD_STATUS_CHECK_FAILED = 8,
  SD_STATUS_PANIC = 9,
} SdStatus;

/**
 * Opaque permutation group.
 */
typedef struct SdGroup SdGroup;

/**
 * Opaque association scheme.
 */
typedef struct SdScheme SdScheme;

/**
 * Opaque skew-Hadamard (or any ±1) matrix.
 */
typedef struct SdSignMatrix SdSignMatrix;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or NULL if none.
 *
 * The pointer stays valid until the next failing call on the same thread.
 */
const char *sd_last_error_message(void);

/**
 * # Safety
 * `s` must be NULL or a string returned by this library, not yet freed.
 */
void sd_string_free(char *s);

/**
 * Paley skew-Hadamard matrix of order `q + 1` for a prime `q ≡ 3 (mod 4)`.
 *
 * # Safety
 * `out_matrix` must be a valid pointer.
 */
enum SdStatus sd_paley(uint64_t q, struct SdSignMatrix **out_matrix);

/**
 * Parses the `.shm` text format.
 *
 * # Safety
 * `src` must be a NUL-terminated string; `out_matrix` a valid pointer.
 */
enum SdStatus sd_sign_matrix_parse(const char *src, struct SdSignMatrix **out_matrix);

/**
 * # Safety
 * `m` must be a live handle; `out_text` a valid pointer.
 */
enum SdStatus sd_sign_matrix_to_text(const struct SdSignMatrix *m, char **out_text);

/**
 * Order of the matrix, 0 for NULL.
 *
 * # Safety
 * `m` must be NULL or a live handle.
 */
size_t sd_sign_matrix_order(const struct SdSignMatrix *m);

/**
 * Entry at 0-based `(row, col)`: +1 or -1, or 0 when out of range or NULL.
 *
 * # Safety
 * `m` must be NULL or a live handle.
 */
int8_t sd_sign_matrix_entry(const struct SdSignMatrix *m, size_t row, size_t col);

/**
 * # Safety
 * `m` must be NULL or a live handle.
 */
bool sd_sign_matrix_is_skew_hadamard(const struct SdSignMatrix *m);

/**
 * # Safety
 * `m` must be NULL or a live handle.
 */
bool sd_sign_matrix_is_normalized(const struct SdSignMatrix *m);

/**
 * # Safety
 * `m` must be a live handle; `out_matrix` a valid pointer.
 */
enum SdStatus sd_sign_matrix_normalize(const struct SdSignMatrix *m,
                                       struct SdSignMatrix **out_matrix);

/**
 * Skew-Hadamard matrix of twice the order.
 *
 * # Safety
 * `m` must be a live handle; `out_matrix` a valid pointer.
 */
enum SdStatus sd_sign_matrix_double(const struct SdSignMatrix *m, struct SdSignMatrix **out_matrix);

/**
 * # Safety
 * `m` must be NULL or a handle not yet freed.
 */
void sd_sign_matrix_free(struct SdSignMatrix *m);

/**
 * Class-2 scheme of a normalized skew-Hadamard matrix.
 *
 * # Safety
 * `m` must be a live handle; `out_scheme` a valid pointer.
 */
enum SdStatus sd_scheme_from_skew_hadamard(const struct SdSignMatrix *m,
                                           struct SdScheme **out_scheme);

/**
 * Parses the `.asc` text format and checks the scheme axioms.
 *
 * # Safety
 * `src` must be a NUL-terminated string; `out_scheme` a valid pointer.
 */
enum SdStatus sd_scheme_parse(const char *src, struct SdScheme **out_scheme);

/**
 * # Safety
 * `x` must be a live handle; `out_text` a valid pointer.
 */
enum SdStatus sd_scheme_to_text(const struct SdScheme *x, char **out_text);

/**
 * Doubled scheme of order `2m + 1`.
 *
 * # Safety
 * `x` must be a live handle; `out_scheme` a valid pointer.
 */
enum SdStatus sd_scheme_doubled(const struct SdScheme *x, struct SdScheme **out_scheme);

/**
 * Number of points, 0 for NULL.
 *
 * # Safety
 * `x` must be NULL or a live handle.
 */
size_t sd_scheme_order(const struct SdScheme *x);

/**
 * Number of non-identity relations, 0 for NULL.
 *
 * # Safety
 * `x` must be NULL or a live handle.
 */
size_t sd_scheme_class(const struct SdScheme *x);

/**
 * Index of the relation containing the 1-based pair `(p, q)`.
 *
 * # Safety
 * `x` must be a live handle; `out_relation` a valid pointer.
 */
enum SdStatus sd_scheme_relation_of(const struct SdScheme *x,
                                    size_t p,
                                    size_t q,
                                    size_t *out_relation);

/**
 * Checks the class-2 product identities.
 *
 * # Safety
 * `x` must be a live handle; `out_holds` a valid pointer.
 */
enum SdStatus sd_scheme_verify_class2_products(const struct SdScheme *x, bool *out_holds);

/**
 * # Safety
 * `x` must be NULL or a handle not yet freed.
 */
void sd_scheme_free(struct SdScheme *x);

/**
 * `|R(i) ∩ R(j) ∩ R(k)|` for 1-based points `i < j < k`, with `R(p)` the
 * out-neighbourhood of `p` in relation 1.
 *
 * # Safety
 * `x` must be a live handle; `out_nu` a valid pointer.
 */
enum SdStatus sd_nu(const struct SdScheme *x, size_t i, size_t j, size_t k, size_t *out_nu);

/**
 * Text report of the maximum of `nu`, its maximizers and the histogram.
 *
 * With `assert_extremal` set, the scheme must be a doubled scheme of order
 * at least 15, and [`SdStatus::CheckFailed`] is returned (with the report
 * still written) when the extremal triples are not the expected ones.
 *
 * # Safety
 * `x` must be a live handle; `out_text` a valid pointer.
 */
enum SdStatus sd_nu_report(const struct SdScheme *x, bool assert_extremal, char **out_text);

/**
 * # Safety
 * `x` must be a live handle; `out_group` a valid pointer.
 */
enum SdStatus sd_automorphism_group(const struct SdScheme *x, struct SdGroup **out_group);

/**
 * Degree of the group, 0 for NULL.
 *
 * # Safety
 * `g` must be NULL or a live handle.
 */
size_t sd_group_degree(const struct SdGroup *g);

/**
 * # Safety
 * `g` must be NULL or a live handle.
 */
size_t sd_group_generator_count(const struct SdGroup *g);

/**
 * Writes the 1-based images of generator `index` into `images`, which must
 * hold `sd_group_degree(g)` entries.
 *
 * # Safety
 * `g` must be a live handle; `images` must point to `degree` writable slots.
 */
enum SdStatus sd_group_generator(const struct SdGroup *g, size_t index, size_t *images);

/**
 * Exact group order; [`SdStatus::Overflow`] if it exceeds `uint64_t`.
 *
 * # Safety
 * `g` must be a live handle; `out_order` a valid pointer.
 */
enum SdStatus sd_group_order(const struct SdGroup *g, uint64_t *out_order);

/**
 * Group order in decimal.
 *
 * # Safety
 * `g` must be a live handle; `out_text` a valid pointer.
 */
enum SdStatus sd_group_order_text(const struct SdGroup *g, char **out_text);

/**
 * Number of orbits on points, 0 for NULL.
 *
 * # Safety
 * `g` must be NULL or a live handle.
 */
size_t sd_group_orbit_count(const struct SdGroup *g);

/**
 * # Safety
 * `g` must be NULL or a live handle.
 */
bool sd_group_is_transitive(const struct SdGroup *g);

/**
 * Generator list in the group text format.
 *
 * # Safety
 * `g` must be a live handle; `out_text` a valid pointer.
 */
enum SdStatus sd_group_to_text(const struct SdGroup *g, char **out_text);

/**
 * # Safety
 * `g` must be NULL or a handle not yet freed.
 */
void sd_group_free(struct SdGroup *g);

/**
 * Whether the scheme is the orbital scheme of its automorphism group.
 * `out_text` may be NULL; otherwise it receives the verdict text.
 *
 * # Safety
 * `x` must be a live handle; `out_schurian` a valid pointer.
 */
enum SdStatus sd_is_schurian(const struct SdScheme *x, bool *out_schurian, char **out_text);

/**
 * Runs the doubling pipeline on a class-2 scheme of order at least 7.
 * `out_text` may be NULL; otherwise it receives the stage report.
 *
 * # Safety
 * `x` must be a live handle; `out_verified` a valid pointer.
 */
enum SdStatus sd_verify_doubling_theorem(const struct SdScheme *x,
                                         bool *out_verified,
                                         char **out_text);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SKEWDOUBLE_H */
