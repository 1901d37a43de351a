#ifndef PG_H
#define PG_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum PgStatus {
  PG_STATUS_OK = 0,
  PG_STATUS_NULL_POINTER = 1,
  PG_STATUS_INVALID_UTF8 = 2,
  PG_STATUS_SYNTAX = 3,
  PG_STATUS_INVALID_PARAMETER = 4,
  PG_STATUS_CAP_EXCEEDED = 5,
  PG_STATUS_UNKNOWN_PATTERN = 6,
  PG_STATUS_UNKNOWN_THEOREM = 7,
  PG_STATUS_OUT_OF_RANGE = 8,
  PG_STATUS_INTERNAL = 9,
} PgStatus;

/**
 * A power graph.
 */
typedef struct PgGraph PgGraph;

/**
 * A finite group.
 */
typedef struct PgGroup PgGroup;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or null. The pointer is
 * valid until the next failing call on the same thread.
 */
const char *pg_last_error(void);

/**
 * Builds the group named by `spec`, e.g. `"S4"` or `"C3 x SD(7,3,2)"`.
 *
 * # Safety
 * `spec` must be a valid C string and `out` a valid pointer.
 */
enum PgStatus pg_group_build(const char *spec, struct PgGroup **out);

/**
 * Order of the group, or 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a live handle from [`pg_group_build`].
 */
size_t pg_group_order(const struct PgGroup *g);

/**
 * # Safety
 * `g` must be null or a handle from [`pg_group_build`] not yet freed.
 */
void pg_group_free(struct PgGroup *g);

/**
 * Power graph of `g`; `proper` removes the identity.
 *
 * # Safety
 * `g` must be a live group handle and `out` a valid pointer.
 */
enum PgStatus pg_graph_build(const struct PgGroup *g, bool proper, struct PgGraph **out);

/**
 * Vertex count, or 0 for a null handle.
 *
 * # Safety
 * `graph` must be null or a live graph handle.
 */
size_t pg_graph_vertex_count(const struct PgGraph *graph);

/**
 * Adjacency of `u` and `v`. Out-of-range vertices are not adjacent.
 *
 * # Safety
 * `graph` must be null or a live graph handle.
 */
bool pg_graph_has_edge(const struct PgGraph *graph, size_t u, size_t v);

/**
 * # Safety
 * `graph` must be null or a handle from [`pg_graph_build`] not yet freed.
 */
void pg_graph_free(struct PgGraph *graph);

/**
 * Searches `graph` for the named induced pattern. On success `*found` is
 * set; when true, `vertices[..*len]` holds the image of each pattern
 * vertex. `capacity` must be at least 5.
 *
 * # Safety
 * `graph` must be a live handle, `name` a valid C string, `vertices` valid
 * for `capacity` writes, and `len`, `found` valid pointers.
 */
enum PgStatus pg_graph_find_pattern(const struct PgGraph *graph,
                                    const char *name,
                                    size_t *vertices,
                                    size_t capacity,
                                    size_t *len,
                                    bool *found);

/**
 * Full analysis report of `spec` as JSON.
 *
 * # Safety
 * `spec` must be a valid C string and `out` a valid pointer.
 */
enum PgStatus pg_analyze_json(const char *spec, bool proper, char **out);

/**
 * Verification report of one theorem id, or an array for `"all"`, over the
 * default corpus, as JSON.
 *
 * # Safety
 * `theorem` must be a valid C string and `out` a valid pointer.
 */
enum PgStatus pg_verify_json(const char *theorem, char **out);

/**
 * # Safety
 * `s` must be null or a string returned by this library not yet freed.
 */
void pg_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PG_H */
