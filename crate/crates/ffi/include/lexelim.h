#ifndef LEXELIM_H
#define LEXELIM_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every fallible entry point.
 */
typedef enum lexelim_status {
  LEXELIM_OK = 0,
  /**
   * The robust algorithms answered with a non-membership certificate.
   */
  LEXELIM_CERTIFICATE = 1,
  LEXELIM_ERR_NULL_POINTER = 2,
  LEXELIM_ERR_INVALID_ARGUMENT = 3,
  LEXELIM_ERR_INVALID_EDGE = 4,
  LEXELIM_ERR_INVALID_VERTEX = 5,
  LEXELIM_ERR_TOO_LARGE = 6,
  LEXELIM_ERR_PARSE = 7,
  LEXELIM_ERR_BUFFER_TOO_SMALL = 8,
  LEXELIM_ERR_PANIC = 9,
} lexelim_status;

/**
 * Graph classes addressable through the ABI.
 */
typedef enum lexelim_class {
  LEXELIM_CLASS_C1 = 1,
  LEXELIM_CLASS_C2 = 2,
  LEXELIM_CLASS_C3 = 3,
  LEXELIM_CLASS_C4 = 4,
  LEXELIM_CLASS_C5 = 5,
  LEXELIM_CLASS_C6 = 6,
  LEXELIM_CLASS_C7 = 7,
  LEXELIM_CLASS_C8 = 8,
  LEXELIM_CLASS_CHORDAL = 9,
  LEXELIM_CLASS_UNIVERSALLY_SIGNABLE = 10,
  LEXELIM_CLASS_EVEN_HOLE_FREE = 11,
  LEXELIM_CLASS_WHEEL_FREE = 12,
  LEXELIM_CLASS_ODD_SIGNABLE = 13,
  LEXELIM_CLASS_EVEN_SIGNABLE = 14,
} lexelim_class;

/**
 * Clique algorithms addressable through the ABI.
 */
typedef enum lexelim_clique_algo {
  LEXELIM_CLIQUE_BRUTE = 0,
  LEXELIM_CLIQUE_CHORDAL = 1,
  LEXELIM_CLIQUE_EHF = 2,
  LEXELIM_CLIQUE_C2 = 3,
  LEXELIM_CLIQUE_C3 = 4,
  LEXELIM_CLIQUE_C4 = 5,
  LEXELIM_CLIQUE_C6 = 6,
} lexelim_clique_algo;

/**
 * Opaque graph handle.
 */
typedef struct lexelim_graph lexelim_graph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Builds a graph on `n` vertices from `edge_count` pairs laid out as
 * `u0 v0 u1 v1 ...`. On success stores a handle in `out`.
 *
 * # Safety
 * `endpoints` must point to `2 * edge_count` readable u32 values (or be
 * null when `edge_count` is 0) and `out` must be a valid location.
 */
enum lexelim_status lexelim_graph_new(uint32_t n,
                                      const uint32_t *endpoints,
                                      uintptr_t edge_count,
                                      struct lexelim_graph **out);

/**
 * Parses either text dialect (plain or DIMACS); explicit weights in the
 * file are ignored here, use the weights argument of the clique call.
 *
 * # Safety
 * `text` must be a valid NUL-terminated string and `out` a valid location.
 */
enum lexelim_status lexelim_graph_parse(const char *text, struct lexelim_graph **out);

/**
 * Releases a handle returned by the constructors. Null is a no-op.
 *
 * # Safety
 * `g` must be a pointer previously returned by a constructor and not yet
 * freed.
 */
void lexelim_graph_free(struct lexelim_graph *g);

/**
 * # Safety
 * `g` must be a live handle.
 */
uint32_t lexelim_graph_vertex_count(const struct lexelim_graph *g);

/**
 * # Safety
 * `g` must be a live handle.
 */
uint64_t lexelim_graph_edge_count(const struct lexelim_graph *g);

/**
 * # Safety
 * `g` must be a live handle; `u` and `v` must be valid vertex ids.
 */
bool lexelim_graph_has_edge(const struct lexelim_graph *g, uint32_t u, uint32_t v);

/**
 * Writes the LexBFS ordering from `start` into `order_out`.
 *
 * # Safety
 * `g` must be a live handle and `order_out` must have room for `n` values.
 */
enum lexelim_status lexelim_lexbfs(const struct lexelim_graph *g,
                                   uint32_t start,
                                   uint32_t *order_out);

/**
 * Tests the three-vertex characterization of LexBFS orderings.
 *
 * # Safety
 * `order` must point to `len` values; `result_out` must be valid.
 */
enum lexelim_status lexelim_is_lexbfs_ordering(const struct lexelim_graph *g,
                                               const uint32_t *order,
                                               uintptr_t len,
                                               bool *result_out);

/**
 * Computes the LexBFS ordering from vertex 0 and verifies it against the
 * class family. `order_out` always receives the ordering. On
 * `LEXELIM_CERTIFICATE`, `cert_position_out` receives the 1-based failing
 * position and `cert_witness_out`/`cert_witness_len` receive the violating
 * set (capacity `n` suffices).
 *
 * # Safety
 * `g` must be a live handle; output buffers must have capacity `n`.
 */
enum lexelim_status lexelim_elimination_ordering(const struct lexelim_graph *g,
                                                 enum lexelim_class class_,
                                                 uint32_t *order_out,
                                                 uint32_t *cert_position_out,
                                                 uint32_t *cert_witness_out,
                                                 uintptr_t *cert_witness_len);

/**
 * Maximum weighted clique. `weights` may be null for unit weights. The
 * members buffer needs capacity `n`; `members_len` receives the size and
 * `weight_out` the total weight. Certificate outcomes return
 * `LEXELIM_CERTIFICATE` without filling the clique outputs.
 *
 * # Safety
 * `g` must be a live handle; `weights` must be null or point to `n`
 * values; output buffers must have capacity `n`.
 */
enum lexelim_status lexelim_max_clique(const struct lexelim_graph *g,
                                       const uint64_t *weights,
                                       enum lexelim_clique_algo algo,
                                       bool verify,
                                       uint32_t *members_out,
                                       uintptr_t *members_len,
                                       uint64_t *weight_out);

/**
 * Brute-force class membership with the given subset-enumeration cap.
 *
 * # Safety
 * `g` must be a live handle; `member_out` must be valid.
 */
enum lexelim_status lexelim_in_class(const struct lexelim_graph *g,
                                     enum lexelim_class class_,
                                     uintptr_t cap,
                                     bool *member_out);

/**
 * Greedy coloring along a caller-supplied ordering. Colors are 1-based;
 * `count_out` receives the number of colors used.
 *
 * # Safety
 * `order` must point to `len` values; `colors_out` needs capacity `n`.
 */
enum lexelim_status lexelim_greedy_color(const struct lexelim_graph *g,
                                         const uint32_t *order,
                                         uintptr_t len,
                                         uint32_t *colors_out,
                                         uintptr_t *count_out);

/**
 * Coloring for universally signable graphs: at most max(3, omega) colors.
 * Off-class structure yields `LEXELIM_CERTIFICATE`.
 *
 * # Safety
 * `g` must be a live handle; `colors_out` needs capacity `n`.
 */
enum lexelim_status lexelim_color_universally_signable(const struct lexelim_graph *g,
                                                       uint32_t *colors_out,
                                                       uintptr_t *count_out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LEXELIM_H */
