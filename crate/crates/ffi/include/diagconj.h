#ifndef DIAGCONJ_H
#define DIAGCONJ_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Normalizer case of `D_n(l)`.
 */
typedef enum DcNormalizerCase {
  DC_NORMALIZER_CASE_FULL_TORUS = 0,
  DC_NORMALIZER_CASE_AXIS_CASE = 1,
  DC_NORMALIZER_CASE_SAME_SIGN_ALL_NONZERO = 2,
  DC_NORMALIZER_CASE_NO_UNIT_WEIGHTS = 3,
  DC_NORMALIZER_CASE_ZERO_AND_UNIT_SAME_SIGN = 4,
  DC_NORMALIZER_CASE_MIXED_SIGNS = 5,
} DcNormalizerCase;

/**
 * Status code returned by every fallible function.
 */
typedef enum DcStatus {
  DC_STATUS_OK = 0,
  DC_STATUS_NULL_POINTER = 1,
  DC_STATUS_MALFORMED = 2,
  DC_STATUS_DIMENSION_MISMATCH = 3,
  DC_STATUS_RANK_DEFICIENT = 4,
  DC_STATUS_NOT_UNIMODULAR = 5,
  DC_STATUS_ZERO_VECTOR = 6,
  DC_STATUS_NOT_PRIMITIVE = 7,
  DC_STATUS_NOT_IN_GROUP = 8,
  DC_STATUS_CODIMENSION_TOO_LARGE = 9,
  DC_STATUS_TOO_LARGE = 10,
  /**
   * A value does not fit in `int64_t`.
   */
  DC_STATUS_OVERFLOW = 11,
  /**
   * Internal error; the library caught a panic.
   */
  DC_STATUS_PANIC = 12,
} DcStatus;

/**
 * Opaque integer matrix.
 */
typedef struct DcMatrix DcMatrix;

/**
 * Opaque diagonalizable subgroup `D_n(A)`.
 */
typedef struct DcSubgroup DcSubgroup;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static NUL-terminated string.
 */
const char *dc_version(void);

/**
 * Message describing the last failed call on this thread, or NULL.
 *
 * The pointer stays valid until the next call into the library on this thread.
 */
const char *dc_last_error_message(void);

/**
 * # Safety
 * `s` must be NULL or a string returned by this library and not yet freed.
 */
void dc_string_free(char *s);

/**
 * Builds a `rows × cols` matrix from row-major `entries`.
 *
 * # Safety
 * `entries` must point to `rows * cols` readable values; `out` must be writable.
 */
enum DcStatus dc_matrix_new(size_t rows,
                            size_t cols,
                            const int64_t *entries,
                            struct DcMatrix **out);

/**
 * Parses a matrix literal (`"2 4; 6 8"`) or JSON (`{"rows":..,"cols":..,"entries":..}`
 * or an array of rows).
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum DcStatus dc_matrix_parse(const char *text, struct DcMatrix **out);

/**
 * # Safety
 * `m` must be NULL or a handle from this library that has not been freed.
 */
void dc_matrix_free(struct DcMatrix *m);

/**
 * Number of rows, or 0 for NULL.
 *
 * # Safety
 * `m` must be NULL or a live handle.
 */
size_t dc_matrix_rows(const struct DcMatrix *m);

/**
 * Number of columns, or 0 for NULL.
 *
 * # Safety
 * `m` must be NULL or a live handle.
 */
size_t dc_matrix_cols(const struct DcMatrix *m);

/**
 * Reads entry `(i, j)` (0-based).
 *
 * # Safety
 * `m` must be a live handle; `out` must be writable.
 */
enum DcStatus dc_matrix_get(const struct DcMatrix *m, size_t i, size_t j, int64_t *out);

/**
 * Serializes as `{"cols":..,"entries":[[..]],"rows":..}` with exact integers.
 *
 * # Safety
 * `m` must be a live handle; `out` must be writable.
 */
enum DcStatus dc_matrix_to_json(const struct DcMatrix *m, char **out);

/**
 * Smith normal form `S = U·A·V`. Any of the three out-pointers may be NULL.
 *
 * # Safety
 * `a` must be a live handle; non-NULL out-pointers must be writable.
 */
enum DcStatus dc_smith(const struct DcMatrix *a,
                       struct DcMatrix **u,
                       struct DcMatrix **s,
                       struct DcMatrix **v);

/**
 * Hermite basis of the row lattice (zero rows removed).
 *
 * # Safety
 * `a` must be a live handle; `out` must be writable.
 */
enum DcStatus dc_hermite(const struct DcMatrix *a, struct DcMatrix **out);

/**
 * Whether `A` and `B` generate the same row lattice.
 *
 * # Safety
 * `a`, `b` must be live handles; `out` must be writable.
 */
enum DcStatus dc_lattice_equal(const struct DcMatrix *a, const struct DcMatrix *b, bool *out);

/**
 * `D_n(A)` for the defining matrix `a`.
 *
 * # Safety
 * `a` must be a live handle; `out` must be writable.
 */
enum DcStatus dc_subgroup_new(const struct DcMatrix *a, struct DcSubgroup **out);

/**
 * `D_n(l_1, …, l_n)`.
 *
 * # Safety
 * `l` must point to `n` readable values; `out` must be writable.
 */
enum DcStatus dc_subgroup_from_weights(const int64_t *l, size_t n, struct DcSubgroup **out);

/**
 * # Safety
 * `g` must be NULL or a handle from this library that has not been freed.
 */
void dc_subgroup_free(struct DcSubgroup *g);

/**
 * Dimension `n − rk A`, or 0 for NULL.
 *
 * # Safety
 * `g` must be NULL or a live handle.
 */
size_t dc_subgroup_dimension(const struct DcSubgroup *g);

/**
 * Isomorphism type as `{"factors":[..],"torus_rank":r}`.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum DcStatus dc_subgroup_isotype_json(const struct DcSubgroup *g, char **out);

/**
 * `GL_n`-conjugacy. When conjugate and `perm` is non-NULL, writes the
 * 0-based images of a permutation `σ` with `D_n(A) = D_n(B∘σ)` to `perm[0..n]`.
 *
 * # Safety
 * `g1`, `g2` must be live handles; `out` must be writable; `perm` must be
 * NULL or have room for `n` values.
 */
enum DcStatus dc_conjugate_gl(const struct DcSubgroup *g1,
                              const struct DcSubgroup *g2,
                              bool *out,
                              size_t *perm);

/**
 * `Cr_n`-conjugacy. When conjugate and `witness` is non-NULL, stores a
 * unimodular `M` with `transform(G1, M⁻¹) = G2`; otherwise `*witness` is NULL.
 *
 * # Safety
 * `g1`, `g2` must be live handles; `out` must be writable; `witness` must be
 * NULL or writable.
 */
enum DcStatus dc_conjugate_crn(const struct DcSubgroup *g1,
                               const struct DcSubgroup *g2,
                               bool *out,
                               struct DcMatrix **witness);

/**
 * Canonical representative in `L_n` of `l` up to coordinate permutation and sign.
 *
 * # Safety
 * `l` must point to `n` readable values and `out` to `n` writable ones.
 */
enum DcStatus dc_codim1_canonical(const int64_t *l, size_t n, int64_t *out);

/**
 * Whether the action of `D_n(l)` on affine `n`-space is stable.
 *
 * # Safety
 * `l` must point to `n` readable values; `out` must be writable.
 */
enum DcStatus dc_is_stable(const int64_t *l, size_t n, bool *out);

/**
 * Orbit report for points whose zero coordinates are `zeros[0..nzeros]` (0-based).
 *
 * # Safety
 * `l` must point to `n` readable values, `zeros` to `nzeros`; `out` must be writable.
 */
enum DcStatus dc_orbit_report_json(const int64_t *l,
                                   size_t n,
                                   const size_t *zeros,
                                   size_t nzeros,
                                   char **out);

/**
 * Normalizer case of `D_n(l)`. For `AxisCase`, `axis` (if non-NULL)
 * receives the 0-based axis.
 *
 * # Safety
 * `l` must point to `n` readable values; `out` must be writable; `axis`
 * must be NULL or writable.
 */
enum DcStatus dc_normalizer_case(const int64_t *l,
                                 size_t n,
                                 enum DcNormalizerCase *out,
                                 size_t *axis);

/**
 * Runs a command-line invocation (`argv` excludes the program name) and
 * returns its JSON output through `out`. Standard input is empty.
 *
 * The return value is the command's exit code (0, 1 or 2), or -1 when an
 * argument pointer is NULL or not UTF-8.
 *
 * # Safety
 * `argv` must point to `argc` NUL-terminated strings; `out` must be writable.
 */
int32_t dc_run(const char *const *argv, size_t argc, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* DIAGCONJ_H */
