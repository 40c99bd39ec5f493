#ifndef SLICE_LAB_H
#define SLICE_LAB_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes of every fallible call.
 */
typedef enum SlStatus {
  SL_STATUS_OK = 0,
  SL_STATUS_NULL_POINTER = 1,
  SL_STATUS_INVALID_ARGUMENT = 2,
  SL_STATUS_GEOMETRY_ERROR = 3,
  SL_STATUS_QUADRATURE_ERROR = 4,
  SL_STATUS_BUFFER_TOO_SMALL = 5,
  SL_STATUS_UNSUPPORTED = 6,
  SL_STATUS_PANIC = 7,
} SlStatus;

typedef enum SlVerdict {
  SL_VERDICT_ZONOTOPE = 0,
  SL_VERDICT_NOT_ZONOID = 1,
  SL_VERDICT_DEGENERATE_CUBE = 2,
} SlVerdict;

/**
 * Opaque handle to a central slice of the cube.
 */
typedef struct SlSlice SlSlice;

typedef struct SlQuadrature {
  double value;
  double error_bound;
  double truncation_t;
  size_t panel_count;
} SlQuadrature;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Creates the slice of `[-1/2, 1/2]^len` by the hyperplane with integer
 * normal `normal[0..len]`. The normal is canonicalized (primitive, first
 * nonzero entry positive).
 *
 * # Safety
 * `normal` must point to `len` readable values and `out` must be writable.
 */
enum SlStatus sl_slice_new(const int64_t *normal, size_t len, struct SlSlice **out);

/**
 * Releases a handle from `sl_slice_new`; null is ignored.
 *
 * # Safety
 * `slice` must be null or a live handle that is not used afterwards.
 */
void sl_slice_free(struct SlSlice *slice);

/**
 * Ambient dimension n.
 *
 * # Safety
 * `slice` must be a live handle and `out` writable.
 */
enum SlStatus sl_slice_dimension(const struct SlSlice *slice, size_t *out);

/**
 * Canonical normal written to `out[0..n]`.
 *
 * # Safety
 * `slice` must be a live handle and `out` must hold `capacity` values.
 */
enum SlStatus sl_slice_normal(const struct SlSlice *slice, int64_t *out, size_t capacity);

/**
 * Number of vertices of the slice.
 *
 * # Safety
 * `slice` must be a live handle and `out` writable.
 */
enum SlStatus sl_slice_vertex_count(const struct SlSlice *slice, size_t *out);

/**
 * Vertex coordinates as doubles, row-major (`vertex_count × n` values), in
 * lexicographic vertex order.
 *
 * # Safety
 * `slice` must be a live handle and `out` must hold `capacity` values.
 */
enum SlStatus sl_slice_vertices_f64(const struct SlSlice *slice, double *out, size_t capacity);

/**
 * Zonotope verdict of a slice of affine dimension at most 3.
 *
 * # Safety
 * `slice` must be a live handle and `out` writable.
 */
enum SlStatus sl_slice_verdict(const struct SlSlice *slice, enum SlVerdict *out);

/**
 * Exact volume as the NUL-terminated text `q` or `q*sqrt(r)`.
 *
 * # Safety
 * `slice` must be a live handle; `buf` must hold `capacity` bytes; `needed`
 * may be null.
 */
enum SlStatus sl_slice_volume_exact(const struct SlSlice *slice,
                                    char *buf,
                                    size_t capacity,
                                    size_t *needed);

/**
 * Exact volume rounded to a double.
 *
 * # Safety
 * `slice` must be a live handle and `out` writable.
 */
enum SlStatus sl_slice_volume_f64(const struct SlSlice *slice, double *out);

/**
 * Full JSON report (the `slice --json` output) as a newly allocated string
 * to be released with `sl_string_free`.
 *
 * # Safety
 * `slice` must be a live handle and `out` writable.
 */
enum SlStatus sl_slice_report_json(const struct SlSlice *slice, double tolerance, char **out);

/**
 * Releases a string returned by the library; null is ignored.
 *
 * # Safety
 * `text` must be null or a string from this library not freed before.
 */
void sl_string_free(char *text);

/**
 * `I_p = (1/π)∫ |sin t / t|^p dt` for `2 ≤ p ≤ 64`.
 *
 * # Safety
 * `out` must be writable.
 */
enum SlStatus sl_sinc_power_integral(uint32_t p, double tolerance, struct SlQuadrature *out);

/**
 * Slice volume by quadrature of the sinc product, for any dimension.
 *
 * # Safety
 * `normal` must point to `len` readable values and `out` must be writable.
 */
enum SlStatus sl_slice_volume_quadrature(const int64_t *normal,
                                         size_t len,
                                         double tolerance,
                                         struct SlQuadrature *out);

/**
 * Message for the most recent failure on this thread, or null. The pointer
 * stays valid until the next library call on the same thread.
 */
const char *sl_last_error_message(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SLICE_LAB_H */
