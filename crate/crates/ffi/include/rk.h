#ifndef RK_H
#define RK_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum RkStatus {
  RkStatus_Ok = 0,
  RkStatus_InvalidInput = 1,
  RkStatus_Internal = 2,
  RkStatus_NullPointer = 3,
  RkStatus_Panic = 4,
} RkStatus;

/**
 * A 2-bridge knot `K(p/q)`.
 */
typedef struct RkKnot RkKnot;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *rk_last_error(void);

/**
 * Release a string returned by this library. Null is ignored.
 */
void rk_string_free(char *s);

/**
 * Schema version of the JSON documents.
 */
uint32_t rk_schema_version(void);

/**
 * Create `K(p/q)`. Requires `p` odd, `0 < q < p`, `gcd(p, q) = 1`.
 */
enum RkStatus rk_knot_new(uint64_t p, uint64_t q, struct RkKnot **out);

void rk_knot_free(struct RkKnot *knot);

/**
 * Even continued fraction as JSON.
 */
enum RkStatus rk_knot_continued_fraction(const struct RkKnot *knot, char **out);

/**
 * Alexander polynomial in canonical text form `deg:coeff;...`, as a JSON
 * string.
 */
enum RkStatus rk_knot_alexander(const struct RkKnot *knot, char **out);

/**
 * Reduced twisted Alexander polynomial for a character of order `k`.
 */
enum RkStatus rk_knot_twisted(const struct RkKnot *knot, uint64_t k, char **out);

/**
 * Casson-Gordon signatures; `p` must be a perfect square.
 */
enum RkStatus rk_knot_cg(const struct RkKnot *knot, char **out);

/**
 * Norm obstructions over all odd primes dividing `p`, scanning mod-r
 * tests up to `r_bound`.
 */
enum RkStatus rk_knot_obstruct(const struct RkKnot *knot, uint64_t r_bound, char **out);

/**
 * Full pipeline report with default settings.
 */
enum RkStatus rk_knot_run(const struct RkKnot *knot, char **out);

/**
 * Survey row for determinant `m²`. `config` is key = value text or null.
 */
enum RkStatus rk_survey(uint64_t m, const char *config, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* RK_H */
