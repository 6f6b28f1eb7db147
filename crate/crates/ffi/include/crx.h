#ifndef CRX_H
#define CRX_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum CrxStatus {
  CRX_STATUS_OK = 0,
  /**
   * Verification found a k-set without a rainbow cycle or tree.
   */
  CRX_STATUS_COUNTEREXAMPLE = 1,
  CRX_STATUS_NULL_POINTER = 2,
  CRX_STATUS_INVALID_ARGUMENT = 3,
  CRX_STATUS_INVALID_GRAPH = 4,
  CRX_STATUS_INVALID_COLOURING = 5,
  CRX_STATUS_NOT_IN_FAMILY = 6,
  CRX_STATUS_BUDGET_EXCEEDED = 7,
  CRX_STATUS_UNSUPPORTED = 8,
  CRX_STATUS_FAILED = 9,
  CRX_STATUS_PANIC = 10,
} CrxStatus;

/**
 * Opaque edge colouring handle.
 */
typedef struct CrxColouring CrxColouring;

/**
 * Opaque graph handle.
 */
typedef struct CrxGraph CrxGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failure on this thread, or null. Release with
 * `crx_string_free`.
 */
char *crx_last_error_message(void);

/**
 * # Safety
 * `s` must come from `crx_last_error_message` and not be freed twice.
 */
void crx_string_free(char *s);

/**
 * Builds a graph from `edge_count` pairs stored flat in `edges`
 * (`u0, v0, u1, v1, ...`). Edge ids follow the sorted edge list.
 *
 * # Safety
 * `edges` must point to `2 * edge_count` readable values (or be null when
 * `edge_count` is 0); `out` must be writable.
 */
enum CrxStatus crx_graph_new(size_t n,
                             const size_t *edges,
                             size_t edge_count,
                             struct CrxGraph **out);

/**
 * # Safety
 * `out` must be writable.
 */
enum CrxStatus crx_graph_cycle(size_t n, struct CrxGraph **out);

/**
 * # Safety
 * `out` must be writable.
 */
enum CrxStatus crx_graph_complete(size_t n, struct CrxGraph **out);

/**
 * # Safety
 * `out` must be writable.
 */
enum CrxStatus crx_graph_complete_bipartite(size_t m, size_t n, struct CrxGraph **out);

/**
 * Rim `0..n`, centre `n`.
 *
 * # Safety
 * `out` must be writable.
 */
enum CrxStatus crx_graph_wheel(size_t n, struct CrxGraph **out);

/**
 * # Safety
 * `out` must be writable.
 */
enum CrxStatus crx_graph_hypercube(size_t n, struct CrxGraph **out);

/**
 * # Safety
 * `out` must be writable.
 */
enum CrxStatus crx_graph_petersen(struct CrxGraph **out);

/**
 * # Safety
 * `g` must be null or a live handle; it is invalid afterwards.
 */
void crx_graph_free(struct CrxGraph *g);

/**
 * Vertex count, or 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a live handle.
 */
size_t crx_graph_vertex_count(const struct CrxGraph *g);

/**
 * Edge count, or 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a live handle.
 */
size_t crx_graph_edge_count(const struct CrxGraph *g);

/**
 * Endpoints of edge `id`, smaller first.
 *
 * # Safety
 * `g` must be a live handle; `u` and `v` must be writable.
 */
enum CrxStatus crx_graph_edge(const struct CrxGraph *g, size_t id, size_t *u, size_t *v);

/**
 * Colouring of `g` with one colour in `0..r` per edge id; every colour
 * must be used.
 *
 * # Safety
 * `g` must be a live handle, `colours` must hold one value per edge and
 * `out` must be writable.
 */
enum CrxStatus crx_colouring_new(const struct CrxGraph *g,
                                 const size_t *colours,
                                 size_t len,
                                 size_t r,
                                 struct CrxColouring **out);

/**
 * Certified wheel colouring of `W_n` for `k`.
 *
 * # Safety
 * `out` must be writable.
 */
enum CrxStatus crx_colour_wheel(size_t n, size_t k, struct CrxColouring **out);

/**
 * Certified 3-colouring of `K_n` for `k <= 2`.
 *
 * # Safety
 * `out` must be writable.
 */
enum CrxStatus crx_colour_complete_2rainbow(size_t n, struct CrxColouring **out);

/**
 * # Safety
 * `out` must be writable.
 */
enum CrxStatus crx_colour_bipartite(size_t m, size_t n, size_t k, struct CrxColouring **out);

/**
 * # Safety
 * `out` must be writable.
 */
enum CrxStatus crx_colour_cube(size_t n, size_t k, struct CrxColouring **out);

/**
 * # Safety
 * `c` must be null or a live handle; it is invalid afterwards.
 */
void crx_colouring_free(struct CrxColouring *c);

/**
 * Number of colours `r`, or 0 for a null handle.
 *
 * # Safety
 * `c` must be null or a live handle.
 */
size_t crx_colouring_colour_count(const struct CrxColouring *c);

/**
 * Number of edges of the coloured graph, or 0 for a null handle.
 *
 * # Safety
 * `c` must be null or a live handle.
 */
size_t crx_colouring_edge_count(const struct CrxColouring *c);

/**
 * # Safety
 * `c` must be a live handle and `out` writable.
 */
enum CrxStatus crx_colouring_edge_colour(const struct CrxColouring *c, size_t id, size_t *out);

/**
 * Checks every k-set for a rainbow cycle (`trees == false`) or rainbow
 * tree (`trees == true`), spending at most `nodes_per_set` search nodes on
 * each. Returns `CRX_STATUS_COUNTEREXAMPLE` and writes the first failing
 * set (colex order) into `bad_set`, which must hold `k` values, if not
 * null.
 *
 * # Safety
 * `c` must be a live handle; `bad_set` must be null or hold `k` values.
 */
enum CrxStatus crx_verify(const struct CrxColouring *c,
                          size_t k,
                          bool trees,
                          uint64_t nodes_per_set,
                          size_t *bad_set);

/**
 * Exact `crx_k(g)` (or `rx_k(g)` when `trees`) within `budget` nodes.
 * Writes the bounds; they are equal when the value is exact. When the
 * budget runs out the status is `CRX_STATUS_BUDGET_EXCEEDED` and the
 * bounds hold the interval reached.
 *
 * # Safety
 * `g` must be a live handle; `lower` and `upper` must be writable.
 */
enum CrxStatus crx_solve_exact(const struct CrxGraph *g,
                               size_t k,
                               bool trees,
                               uint64_t budget,
                               size_t *lower,
                               size_t *upper);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CRX_H */
