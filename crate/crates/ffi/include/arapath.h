#ifndef ARAPATH_H
#define ARAPATH_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every `ara_*` call.
 */
typedef enum {
  ARA_STATUS_OK = 0,
  ARA_STATUS_NULL_POINTER = 1,
  /**
   * Malformed text, bad parameters or a non-square-free ideal.
   */
  ARA_STATUS_PARSE_ERROR = 2,
  /**
   * No block pair for `t`; the certificate is still returned.
   */
  ARA_STATUS_DEGRADED = 3,
  ARA_STATUS_VERIFICATION_FAILED = 4,
  /**
   * A Groebner budget or the Hochster variable cap was hit.
   */
  ARA_STATUS_RESOURCE_LIMIT = 5,
  ARA_STATUS_INVALID_ARGUMENT = 6,
  ARA_STATUS_PANIC = 7,
} AraStatus;

/**
 * Verification policy for [`ara_construct`].
 */
typedef enum {
  ARA_VERIFY_AUTO = 0,
  ARA_VERIFY_ALWAYS = 1,
  ARA_VERIFY_NEVER = 2,
} AraVerify;

/**
 * Opaque construction certificate.
 */
typedef struct AraCertificate AraCertificate;

/**
 * Opaque square-free monomial ideal.
 */
typedef struct AraIdeal AraIdeal;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Description of the last failure on this thread, or null. The pointer
 * stays valid until the next `ara_*` call on the same thread.
 */
const char *ara_last_error(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void ara_string_free(char *s);

/**
 * The closed formula for the arithmetical rank of `I_t(L_n)`.
 *
 * # Safety
 * `out` must be valid for writes.
 */
AraStatus ara_formula_value(uint32_t n, uint32_t t, uint32_t *out);

/**
 * `I_t(L_n)` as a new handle.
 *
 * # Safety
 * `out` must be valid for writes.
 */
AraStatus ara_path_ideal(uint32_t n, uint32_t t, AraIdeal **out);

/**
 * Parses a monomial ideal such as `(x1*x2; x2*x3)`.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` valid for writes.
 */
AraStatus ara_ideal_parse(const char *text, AraIdeal **out);

/**
 * # Safety
 * `ideal` must come from this library and not have been freed. Null is
 * ignored.
 */
void ara_ideal_free(AraIdeal *ideal);

/**
 * # Safety
 * `ideal` must be a live handle and `out` valid for writes.
 */
AraStatus ara_ideal_generator_count(const AraIdeal *ideal, size_t *out);

/**
 * The ideal in text form, e.g. `x1*x2; x2*x3`.
 *
 * # Safety
 * `ideal` must be a live handle and `out` valid for writes.
 */
AraStatus ara_ideal_to_string(const AraIdeal *ideal, char **out);

/**
 * `pd(R/I)` over GF(`p`). `cap` bounds the relevant variables; 0 means the
 * default.
 *
 * # Safety
 * `ideal` must be a live handle and `out` valid for writes.
 */
AraStatus ara_projective_dimension(const AraIdeal *ideal, uint32_t p, size_t cap, size_t *out);

/**
 * Builds the certificate for `(n, t)` over GF(`p`) from the builtin pairs.
 * Returns `Degraded` (no pair for `t`) or `ResourceLimit` (a check ran out
 * of budget) with `*out` still set; on any other failure `*out` is null.
 *
 * # Safety
 * `out` must be valid for writes.
 */
AraStatus ara_construct(uint32_t n, uint32_t t, uint32_t p, AraVerify verify, AraCertificate **out);

/**
 * # Safety
 * `cert` must come from this library and not have been freed. Null is
 * ignored.
 */
void ara_certificate_free(AraCertificate *cert);

/**
 * # Safety
 * `cert` must be a live handle and `out` valid for writes.
 */
AraStatus ara_certificate_count(const AraCertificate *cert, size_t *out);

/**
 * Generator `index` (from 0) in the polynomial text format.
 *
 * # Safety
 * `cert` must be a live handle and `out` valid for writes.
 */
AraStatus ara_certificate_generator(const AraCertificate *cert, size_t index, char **out);

/**
 * `pd(R/I_t(L_n))`, or -1 when `n` was above the enumeration cap.
 *
 * # Safety
 * `cert` must be a live handle and `out` valid for writes.
 */
AraStatus ara_certificate_pd(const AraCertificate *cert, int64_t *out);

/**
 * Whether the radical-equality certification ran and passed.
 *
 * # Safety
 * `cert` must be a live handle and `out` valid for writes.
 */
AraStatus ara_certificate_verified(const AraCertificate *cert, bool *out);

/**
 * The certificate in the same JSON shape the command line emits.
 *
 * # Safety
 * `cert` must be a live handle and `out` valid for writes.
 */
AraStatus ara_certificate_to_json(const AraCertificate *cert, char **out);

/**
 * Certifies `sqrt(gens) = ideal` over GF(`p`). `gens` separates polynomials
 * with `|`, `;` or newlines. Returns `VerificationFailed` when a check
 * fails and `ResourceLimit` when one ran out of budget; the transcript is
 * written to `transcript` (if non-null) in both cases.
 *
 * # Safety
 * `gens` and `ideal` must be NUL-terminated strings; `transcript` is null or
 * valid for writes.
 */
AraStatus ara_verify(const char *gens, const char *ideal, uint32_t p, char **transcript);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ARAPATH_H */
