#ifndef SPECTRAMIN_H
#define SPECTRAMIN_H

/* Generated by cbindgen. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum SmStatus {
  SM_STATUS_OK = 0,
  SM_STATUS_NULL_POINTER = 1,
  SM_STATUS_INVALID_ARGUMENT = 2,
  SM_STATUS_PARSE = 3,
  SM_STATUS_INFEASIBLE = 4,
  SM_STATUS_NO_CONVERGENCE = 5,
  SM_STATUS_BUDGET = 6,
  SM_STATUS_INCONSISTENT = 7,
  SM_STATUS_PANIC = 8,
} SmStatus;

/**
 * Opaque graph handle.
 */
typedef struct SmGraph SmGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread, or NULL. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *sm_last_error_message(void);

/**
 * Parses a graph6 string.
 *
 * # Safety
 * `text` must be a valid NUL-terminated string and `out` a valid pointer.
 */
enum SmStatus sm_graph_from_graph6(const char *text, struct SmGraph **out);

/**
 * Releases a handle. NULL is ignored.
 *
 * # Safety
 * `g` must come from this library and not be freed twice.
 */
void sm_graph_free(struct SmGraph *g);

/**
 * # Safety
 * `g` must be a live handle and `out` a valid pointer.
 */
enum SmStatus sm_graph_to_graph6(const struct SmGraph *g, char **out);

/**
 * Releases a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must come from this library and not be freed twice.
 */
void sm_string_free(char *s);

/**
 * Order and size of a graph. Either out-pointer may be NULL.
 *
 * # Safety
 * `g` must be a live handle; non-null out-pointers must be valid.
 */
enum SmStatus sm_graph_counts(const struct SmGraph *g, size_t *n, size_t *e);

/**
 * Spectral radius with a certified error bound. `error_bound` may be NULL.
 *
 * # Safety
 * `g` must be a live handle; `rho` must be valid.
 */
enum SmStatus sm_spectral_radius(const struct SmGraph *g,
                                 double tol,
                                 double *rho,
                                 double *error_bound);

/**
 * Builds a graph from a family spec such as `"cycle:n=5"`.
 *
 * # Safety
 * `spec` must be a valid string and `out` a valid pointer.
 */
enum SmStatus sm_construct(const char *spec, struct SmGraph **out);

/**
 * Applies a transform such as `"kelmans:u=0,v=3"` and returns a new handle.
 *
 * # Safety
 * `g` must be a live handle, `spec` a valid string and `out` a valid pointer.
 */
enum SmStatus sm_transform(const struct SmGraph *g, const char *spec, struct SmGraph **out);

/**
 * Exhaustive minimizer report for one (n, e) as a single JSON object.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum SmStatus sm_minimize_json(size_t n, size_t e, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SPECTRAMIN_H */
