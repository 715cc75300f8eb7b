/* C interface to the bellcomp exact-arithmetic library. */

#ifndef BELLCOMP_H
#define BELLCOMP_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of a call across the C boundary.
 */
typedef enum BellcompStatus {
  /**
   * The call succeeded and any out-pointer was written.
   */
  BellcompStatus_Ok = 0,
  /**
   * A required pointer argument was NULL.
   */
  BellcompStatus_NullArgument = 1,
  /**
   * A string argument could not be parsed (strategy name, rational).
   */
  BellcompStatus_InvalidArgument = 2,
  /**
   * The inputs are outside the chosen strategy's domain.
   */
  BellcompStatus_DomainError = 3,
} BellcompStatus;

/**
 * Opaque handle to a sparse multivariate polynomial with exact rational
 * coefficients.
 */
typedef struct BellcompPoly BellcompPoly;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Compute the partial Bell polynomial `B(n, k)` by the named strategy and
 * hand back an owned handle.
 *
 * `strategy` is one of `direct`, `compositions`, `enumeration`, `id1`,
 * `id2`, `id3`, `id4`, `id5`, `id6`.
 *
 * # Safety
 * `strategy` must be NULL or a valid NUL-terminated string; `out` must be a
 * valid pointer. A NULL `strategy` selects `direct`. On `Ok` the caller
 * owns `*out` and must free it with [`bellcomp_poly_free`].
 */
enum BellcompStatus bellcomp_bell(uint32_t n,
                                  uint32_t k,
                                  const char *strategy,
                                  struct BellcompPoly **out);

/**
 * Release a polynomial handle. NULL is ignored.
 *
 * # Safety
 * `p` must be NULL or a pointer previously returned through this API and
 * not yet freed.
 */
void bellcomp_poly_free(struct BellcompPoly *p);

/**
 * Number of monomials with nonzero coefficient; 0 for NULL.
 *
 * # Safety
 * `p` must be NULL or a live handle from this API.
 */
uintptr_t bellcomp_poly_term_count(const struct BellcompPoly *p);

/**
 * Deterministic text form (`c*x<i>^<e>` factors, terms joined by ` + `),
 * or NULL for a NULL handle. Free with [`bellcomp_string_free`].
 *
 * # Safety
 * `p` must be NULL or a live handle from this API.
 */
char *bellcomp_poly_to_text(const struct BellcompPoly *p);

/**
 * JSON form: an array of `{"coeff": "p/q", "monomial": {"i": e}}` objects
 * in graded lexicographic order. Free with [`bellcomp_string_free`].
 *
 * # Safety
 * `p` must be NULL or a live handle from this API.
 */
char *bellcomp_poly_to_json(const struct BellcompPoly *p);

/**
 * Evaluate the polynomial at `x_{i+1} = values[i]`, each value a rational
 * string like `"3"` or `"1/2"`. The result is written as a rational string.
 *
 * # Safety
 * `p` must be a live handle; `values` must point to `len` valid
 * NUL-terminated strings; `out` must be valid. On `Ok` the caller owns
 * `*out` and must free it with [`bellcomp_string_free`].
 */
enum BellcompStatus bellcomp_poly_eval(const struct BellcompPoly *p,
                                       const char *const *values,
                                       uintptr_t len,
                                       char **out);

/**
 * Stirling number of the second kind `S(n, k)` as a decimal string.
 *
 * # Safety
 * `out` must be valid; on `Ok` the caller owns `*out` and must free it
 * with [`bellcomp_string_free`].
 */
enum BellcompStatus bellcomp_stirling2(uint32_t n, uint32_t k, char **out);

/**
 * Total weight of the `k`-part compositions of `n` under the weight
 * function `f(part_sizes[i]) = weights[i]`, by the named strategy.
 *
 * `strategy` is one of `enumerate`, `partitions`, `convolution`, `depril`,
 * `weighted-conv`, `part-removal`; `removed_part` is only read by
 * `part-removal`. The result is written as a rational string.
 *
 * # Safety
 * `part_sizes` and `weights` must point to `len` elements (`weights` to
 * valid NUL-terminated strings); `strategy` must be NULL (meaning
 * `convolution`) or a valid string; `out` must be valid. On `Ok` the caller
 * owns `*out` and must free it with [`bellcomp_string_free`].
 */
enum BellcompStatus bellcomp_composition_weight(uint32_t k,
                                                uint32_t n,
                                                const uint32_t *part_sizes,
                                                const char *const *weights,
                                                uintptr_t len,
                                                const char *strategy,
                                                uint32_t removed_part,
                                                char **out);

/**
 * Release a string returned by this API. NULL is ignored.
 *
 * # Safety
 * `s` must be NULL or a string previously returned by this API and not yet
 * freed.
 */
void bellcomp_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BELLCOMP_H */
