#ifndef COZERO_H
#define COZERO_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/*
 Result codes.
 */
typedef enum CzStatus {
  CZ_STATUS_OK = 0,
  /*
   A pointer was null or a string was not UTF-8.
   */
  CZ_STATUS_INVALID_ARGUMENT = 1,
  /*
   Ring notation or graph/certificate JSON could not be parsed or built.
   */
  CZ_STATUS_PARSE_ERROR = 2,
  /*
   A certificate does not match the graph or its claimed genus.
   */
  CZ_STATUS_CERTIFICATE_REJECTED = 3,
  /*
   A panic was caught at the boundary.
   */
  CZ_STATUS_PANIC = 4,
} CzStatus;

/*
 Which graph to build from a ring.
 */
typedef enum CzGraphKind {
  /*
   Cozero-divisor graph on nonzero non-units.
   */
  CZ_GRAPH_KIND_COZERO = 0,
  /*
   Reduced cozero-divisor graph on nontrivial principal ideals.
   */
  CZ_GRAPH_KIND_REDUCED = 1,
} CzGraphKind;

/*
 Budget presets.
 */
typedef enum CzBudget {
  CZ_BUDGET_QUICK = 0,
  CZ_BUDGET_STANDARD = 1,
  CZ_BUDGET_SLOW = 2,
} CzBudget;

/*
 Opaque graph handle.
 */
typedef struct CzGraph CzGraph;

/*
 Opaque ring handle.
 */
typedef struct CzRing CzRing;

/*
 Genus bounds of a graph. `upper` is -1 when no embedding was found.
 */
typedef struct CzGenus {
  uint32_t lower;
  int64_t upper;
  bool exact;
} CzGenus;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Message of the last failed call on this thread, or null. The pointer is
 valid until the next call into this library on the same thread.
 */
const char *cz_last_error_message(void);

/*
 Frees a string returned by this library. Null is ignored.

 # Safety
 `s` must come from this library and not have been freed.
 */
void cz_string_free(char *s);

/*
 Parses ring notation such as `Z4xF8` and builds the ring.

 # Safety
 `notation` must be a NUL-terminated string; `out` must be writable.
 */
enum CzStatus cz_ring_parse(const char *notation, struct CzRing **out);

/*
 Frees a ring. Null is ignored.

 # Safety
 `ring` must come from [`cz_ring_parse`] and not have been freed.
 */
void cz_ring_free(struct CzRing *ring);

/*
 Number of elements and number of units of a ring.

 # Safety
 `ring` must be a live handle; the out pointers must be writable.
 */
enum CzStatus cz_ring_order(const struct CzRing *ring, size_t *order, size_t *units);

/*
 Display name of a ring. Free with [`cz_string_free`].

 # Safety
 `ring` must be a live handle; `out` must be writable.
 */
enum CzStatus cz_ring_name(const struct CzRing *ring, char **out);

/*
 Builds the graph of the given kind from a ring.

 # Safety
 `ring` must be a live handle; `out` must be writable.
 */
enum CzStatus cz_graph_build(const struct CzRing *ring,
                             enum CzGraphKind graph_kind,
                             struct CzGraph **out);

/*
 Reads a graph from JSON `{"labels": [...], "edges": [[u, v], ...]}`.

 # Safety
 `json` must be a NUL-terminated string; `out` must be writable.
 */
enum CzStatus cz_graph_from_json(const char *json, struct CzGraph **out);

/*
 Frees a graph. Null is ignored.

 # Safety
 `graph` must come from this library and not have been freed.
 */
void cz_graph_free(struct CzGraph *graph);

/*
 Vertex and edge counts of a graph.

 # Safety
 `graph` must be a live handle; the out pointers must be writable.
 */
enum CzStatus cz_graph_size(const struct CzGraph *graph, size_t *vertices, size_t *edges);

/*
 Serialises a graph as JSON. Free with [`cz_string_free`].

 # Safety
 `graph` must be a live handle; `out` must be writable.
 */
enum CzStatus cz_graph_to_json(const struct CzGraph *graph, char **out);

/*
 Genus bounds of a graph under a budget preset.

 # Safety
 `graph` must be a live handle; `out` must be writable.
 */
enum CzStatus cz_graph_genus(const struct CzGraph *graph,
                             enum CzBudget preset,
                             uint64_t seed,
                             struct CzGenus *out);

/*
 Checks an embedding certificate (JSON) against a graph. Returns
 [`CzStatus::Ok`] only when the rotation is valid and gives the claimed
 genus.

 # Safety
 `graph` must be a live handle; `certificate_json` a NUL-terminated string.
 */
enum CzStatus cz_certificate_verify(const struct CzGraph *graph, const char *certificate_json);

/*
 Classifies the graph of a ring and returns the record as JSON. Free
 with [`cz_string_free`].

 # Safety
 `ring` must be a live handle; `out` must be writable.
 */
enum CzStatus cz_classify(const struct CzRing *ring,
                          enum CzGraphKind graph_kind,
                          enum CzBudget preset,
                          uint64_t seed,
                          char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* COZERO_H */
