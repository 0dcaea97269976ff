#ifndef XOP_H
#define XOP_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes; the numeric values match the `xop` exit codes.
 */
typedef enum XopStatus {
  XOP_STATUS_OK = 0,
  XOP_STATUS_CHECK_FAILED = 1,
  XOP_STATUS_BAD_INPUT = 2,
  XOP_STATUS_CONSTRUCTION = 3,
  XOP_STATUS_NON_CONVERGENCE = 4,
  XOP_STATUS_NULL_POINTER = 5,
  XOP_STATUS_PANIC = 6,
} XopStatus;

/**
 * A family of exceptional polynomials with fixed parameters.
 */
typedef struct XopFamily XopFamily;

/**
 * An exact polynomial with rational coefficients.
 */
typedef struct XopPoly XopPoly;

/**
 * Zeros of a polynomial split into regular and exceptional ones.
 */
typedef struct XopZeros XopZeros;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or NULL.
 *
 * The pointer stays valid until the next `xop_*` call on this thread.
 */
const char *xop_last_error(void);

/**
 * Exceptional Hermite family for a partition such as `"2,2"`.
 *
 * # Safety
 * `partition` must be a NUL-terminated string and `out` a writable pointer.
 */
enum XopStatus xop_family_hermite(const char *partition, struct XopFamily **out);

/**
 * Type-III Laguerre family; `alpha` is an exact rational such as `"-2/5"`.
 *
 * # Safety
 * `alpha` must be a NUL-terminated string and `out` a writable pointer.
 */
enum XopStatus xop_family_laguerre3(uint32_t m, const char *alpha, struct XopFamily **out);

/**
 * Type-I Laguerre family.
 *
 * # Safety
 * `alpha` must be a NUL-terminated string and `out` a writable pointer.
 */
enum XopStatus xop_family_laguerre1(uint32_t m, const char *alpha, struct XopFamily **out);

/**
 * Generic Laguerre family; NULL partitions mean empty.
 *
 * # Safety
 * String arguments must be NUL-terminated or NULL; `out` must be writable.
 */
enum XopStatus xop_family_laguerre(const char *alpha,
                                   const char *lambda,
                                   const char *mu,
                                   struct XopFamily **out);

/**
 * Jacobi family; NULL partitions mean empty.
 *
 * # Safety
 * String arguments must be NUL-terminated or NULL; `out` must be writable.
 */
enum XopStatus xop_family_jacobi(const char *alpha,
                                 const char *beta,
                                 const char *lambda,
                                 const char *mu,
                                 struct XopFamily **out);

/**
 * Releases a family; NULL is ignored.
 *
 * # Safety
 * `family` must come from an `xop_family_*` constructor and not be used afterwards.
 */
void xop_family_free(struct XopFamily *family);

/**
 * 1 when `n` is a degree of the family, 0 otherwise (also for NULL).
 *
 * # Safety
 * `family` must be a live handle or NULL.
 */
int xop_family_contains(const struct XopFamily *family, uint64_t n);

/**
 * The degree-`n` exceptional polynomial.
 *
 * # Safety
 * `family` must be a live handle and `out` writable.
 */
enum XopStatus xop_exceptional_polynomial(const struct XopFamily *family,
                                          uint64_t n,
                                          struct XopPoly **out);

/**
 * The generalized polynomial whose zeros are the limit points.
 *
 * # Safety
 * `family` must be a live handle and `out` writable.
 */
enum XopStatus xop_generalized_polynomial(const struct XopFamily *family, struct XopPoly **out);

/**
 * Degree, or -1 for the zero polynomial or NULL.
 *
 * # Safety
 * `poly` must be a live handle or NULL.
 */
int64_t xop_poly_degree(const struct XopPoly *poly);

/**
 * Coefficient of `x^i` as an exact `"p/q"` string; free it with [`xop_string_free`].
 *
 * # Safety
 * `poly` must be a live handle and `out` writable.
 */
enum XopStatus xop_poly_coefficient(const struct XopPoly *poly, size_t i, char **out);

/**
 * Releases a polynomial; NULL is ignored.
 *
 * # Safety
 * `poly` must come from this library and not be used afterwards.
 */
void xop_poly_free(struct XopPoly *poly);

/**
 * Releases a string returned by this library; NULL is ignored.
 *
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void xop_string_free(char *s);

/**
 * All zeros of `poly`, classified against the support of `family`.
 *
 * # Safety
 * Handles must be live and `out` writable.
 */
enum XopStatus xop_zeros(const struct XopFamily *family,
                         const struct XopPoly *poly,
                         uint32_t precision_bits,
                         struct XopZeros **out);

/**
 * Number of regular zeros (0 for NULL).
 *
 * # Safety
 * `zeros` must be a live handle or NULL.
 */
size_t xop_zeros_regular_count(const struct XopZeros *zeros);

/**
 * Number of exceptional zeros (0 for NULL).
 *
 * # Safety
 * `zeros` must be a live handle or NULL.
 */
size_t xop_zeros_exceptional_count(const struct XopZeros *zeros);

/**
 * The `i`-th zero, regular ones first, rounded to double precision.
 *
 * # Safety
 * `zeros` must be a live handle; the output pointers must be writable.
 */
enum XopStatus xop_zeros_get(const struct XopZeros *zeros,
                             size_t i,
                             double *re,
                             double *im,
                             int *exceptional);

/**
 * Releases a zero set; NULL is ignored.
 *
 * # Safety
 * `zeros` must come from [`xop_zeros`] and not be used afterwards.
 */
void xop_zeros_free(struct XopZeros *zeros);

/**
 * Predicted limit of the scaled gap for a limit point `zeta` of `family`.
 *
 * # Safety
 * `family` must be a live handle; the output pointers must be writable.
 */
enum XopStatus xop_limit_formula(const struct XopFamily *family,
                                 double zeta_re,
                                 double zeta_im,
                                 double *out_re,
                                 double *out_im);

/**
 * Scaled gap `n^ρ (ζ_{k,n} - ζ_{k,∞})` for the limit point nearest to `anchor`
 * (a string such as `"0.66+0.69i"`).
 *
 * # Safety
 * `family` must be a live handle, `anchor` NUL-terminated, outputs writable.
 */
enum XopStatus xop_scaled_gap(const struct XopFamily *family,
                              const char *anchor,
                              uint64_t n,
                              uint32_t precision_bits,
                              double *out_re,
                              double *out_im);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* XOP_H */
