/* Facially non-repetitive list filtering of plane graphs: C interface.
 *
 * Every call returns a status; on failure nonrep_last_error() describes it
 * (thread-local, valid until the next call on the same thread). Strings
 * returned through char** are owned by the caller and released with
 * nonrep_string_free(). Options and reports are JSON documents. */
#ifndef NONREP_NONREP_H
#define NONREP_NONREP_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define NONREP_API __declspec(dllexport)
#else
#define NONREP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum nonrep_status {
  NONREP_OK = 0,
  NONREP_INVALID_ARGUMENT,
  NONREP_INVALID_SIZE,
  NONREP_PARSE,
  NONREP_NOT_PLANAR,
  NONREP_DISCONNECTED,
  NONREP_MULTI_EDGE_OR_LOOP,
  NONREP_NOT_TWO_CONNECTED,
  NONREP_POLES_NOT_ON_EXTERNAL_FACE,
  NONREP_INSUFFICIENT_COLORS,
  NONREP_RESAMPLE_BUDGET_EXCEEDED,
  NONREP_GUARANTEED_MODE_INFEASIBLE,
  NONREP_NOT_FACIAL,
  NONREP_NON_PLANAR_CLASS,
  NONREP_INTERNAL
} nonrep_status;

typedef struct nonrep_graph nonrep_graph;
typedef struct nonrep_lists nonrep_lists;

NONREP_API const char* nonrep_version(void);
NONREP_API const char* nonrep_status_name(nonrep_status s);
NONREP_API const char* nonrep_last_error(void);
NONREP_API void nonrep_string_free(char* s);

/* Graphs. JSON: {"n", "rotation": [[clockwise neighbours]...], "external_face"?} */
NONREP_API nonrep_status nonrep_graph_from_json(const char* json, nonrep_graph** out);
/* kind: cycle, maximal-planar, stacked, bowtie-chain, random-connected,
 * random-biconnected, tree. */
NONREP_API nonrep_status nonrep_graph_generate(const char* kind, uint64_t n, uint64_t seed, nonrep_graph** out);
NONREP_API void nonrep_graph_free(nonrep_graph* g);
NONREP_API nonrep_status nonrep_graph_counts(const nonrep_graph* g, uint64_t* vertices, uint64_t* edges,
                                             uint64_t* faces);
NONREP_API nonrep_status nonrep_graph_to_json(const nonrep_graph* g, char** out);
NONREP_API nonrep_status nonrep_graph_to_dot(const nonrep_graph* g, char** out);

/* Lists. JSON: {"lists": {"vertex id": [colors]}} */
NONREP_API nonrep_status nonrep_lists_from_json(const char* json, uint64_t n, nonrep_lists** out);
/* size colors per vertex drawn from [0, universe); universe == size gives identical lists. */
NONREP_API nonrep_status nonrep_lists_random(uint64_t n, uint64_t size, uint64_t universe, uint64_t seed,
                                             nonrep_lists** out);
NONREP_API void nonrep_lists_free(nonrep_lists* l);
NONREP_API nonrep_status nonrep_lists_to_json(const nonrep_lists* l, char** out);

/* Reports. Options are JSON objects (NULL or "" means {}). Common keys:
 * "m", "seed", "s", "t", "schedule" ("empirical"|"guaranteed"),
 * "budget" ({key: value}). */
NONREP_API nonrep_status nonrep_faces(const nonrep_graph* g, char** out);
NONREP_API nonrep_status nonrep_orient(const nonrep_graph* g, const char* options, char** out);
NONREP_API nonrep_status nonrep_special(const nonrep_graph* g, const char* options, char** out);
NONREP_API nonrep_status nonrep_color_faces(const nonrep_graph* g, const char* options, char** out);
NONREP_API nonrep_status nonrep_filter_proper(const nonrep_graph* g, const nonrep_lists* l, const char* options,
                                              char** out);
NONREP_API nonrep_status nonrep_filter_square(const nonrep_graph* g, const nonrep_lists* l, const char* options,
                                              char** out);
/* options: "path" (vertex ids), "m" or "sizes". */
NONREP_API nonrep_status nonrep_filter_path(const nonrep_lists* l, const char* options, char** out);
/* options: "walk" (vertex ids) or "face" with graph g (may be NULL with "walk"). */
NONREP_API nonrep_status nonrep_filter_walk(const nonrep_graph* g, const nonrep_lists* l, const char* options,
                                            char** out);
/* options: "face". */
NONREP_API nonrep_status nonrep_filter_face(const nonrep_graph* g, const nonrep_lists* l, const char* options,
                                            char** out);
/* Full pipeline: {"lists", "coloring", "certificate", "stages", ...}. */
NONREP_API nonrep_status nonrep_run(const nonrep_graph* g, const nonrep_lists* l, const char* options,
                                    char** out);
/* artifact: lists or coloring document. options: "level" (coloring|lists|square).
 * *certified receives 1 or 0. */
NONREP_API nonrep_status nonrep_verify(const nonrep_graph* g, const char* artifact, const char* options,
                                       int* certified, char** out);
/* options: "m" (array of values), "f8" (bool), "cap". */
NONREP_API nonrep_status nonrep_schedule(const char* options, char** out);
/* options: "task" (path|pipeline), "n", "m", "seed", "trials". Timings go to "timings". */
NONREP_API nonrep_status nonrep_bench(const char* options, char** out);

#ifdef __cplusplus
}
#endif

#endif
