#ifndef TRUNCW_H
#define TRUNCW_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum TruncwStatus {
  TRUNCW_STATUS_OK = 0,
  TRUNCW_STATUS_NULL_POINTER = 1,
  TRUNCW_STATUS_INVALID_INPUT = 2,
  TRUNCW_STATUS_OUT_OF_RANGE = 3,
  TRUNCW_STATUS_NOT_CLASSIFIABLE = 4,
  TRUNCW_STATUS_VERIFICATION_FAILED = 5,
  TRUNCW_STATUS_INTERNAL = 6,
} TruncwStatus;

/*
 The gl(p) basis adapted to the principal sl(2).
 */
typedef struct TruncwBasis TruncwBasis;

/*
 A finite-dimensional Yangian module given by its mode matrices.
 */
typedef struct TruncwRep TruncwRep;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Message for the last failing call on this thread. Valid until the next
 failing call; never NULL.
 */
const char *truncw_last_error(void);

/*
 Releases a string returned by this library. NULL is ignored.

 # Safety
 `s` must come from this library and not be freed twice.
 */
void truncw_string_free(char *s);

/*
 # Safety
 `out` must be a valid pointer.
 */
enum TruncwStatus truncw_basis_new(uintptr_t p, struct TruncwBasis **out);

/*
 # Safety
 `b` must come from `truncw_basis_new` and not be freed twice.
 */
void truncw_basis_free(struct TruncwBasis *b);

/*
 Coefficient of M_{r,s} in M_{j,m} M_{l,n} as an "n/d" string.

 # Safety
 `b` must be a live basis handle and `out` a valid pointer.
 */
enum TruncwStatus truncw_basis_cg(const struct TruncwBasis *b,
                                  uintptr_t j,
                                  int64_t m,
                                  uintptr_t l,
                                  int64_t n,
                                  uintptr_t r,
                                  int64_t s,
                                  char **out);

/*
 Tensor product of evaluation modules of gl(n); `factors` uses the CLI
 syntax "1,0;1/2,-1/2".

 # Safety
 `factors` must be a NUL-terminated string and `out` a valid pointer.
 */
enum TruncwStatus truncw_rep_new(uintptr_t n, const char *factors, struct TruncwRep **out);

/*
 # Safety
 `r` must come from `truncw_rep_new` and not be freed twice.
 */
void truncw_rep_free(struct TruncwRep *r);

/*
 # Safety
 `r` must be a live handle and `dim` a valid pointer.
 */
enum TruncwStatus truncw_rep_dim(const struct TruncwRep *r, uintptr_t *dim);

/*
 Checks the RTT relation on the module. Returns `VerificationFailed`
 with the offending index tuple in the error message when it fails.

 # Safety
 `r` must be a live handle.
 */
enum TruncwStatus truncw_rep_rtt_check(const struct TruncwRep *r);

/*
 Coefficients 1, d_1, ..., d_len-1 of the quantum determinant as a
 comma-separated list of "n/d" strings.

 # Safety
 `r` must be a live handle and `out` a valid pointer.
 */
enum TruncwStatus truncw_rep_qdet(const struct TruncwRep *r, uintptr_t len, char **out);

/*
 Classifies Drinfeld data given as JSON (the CLI `classify` input) and
 writes the JSON verdict.

 # Safety
 `input` must be a NUL-terminated string and `out` a valid pointer.
 */
enum TruncwStatus truncw_classify_json(uintptr_t n, uintptr_t p, const char *input, char **out);

/*
 Runs a verification suite ("rtt", "soldering", "dirac", "identify",
 "center", "cohomology", "all", "basis", "yangian", "coproduct") and
 writes the JSON report. Returns `VerificationFailed` when any check
 fails; the report is written either way.

 # Safety
 `suite` must be a NUL-terminated string and `out` a valid pointer.
 */
enum TruncwStatus truncw_verify(uintptr_t n,
                                uintptr_t p,
                                const char *suite,
                                uint64_t seed,
                                char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TRUNCW_H */
