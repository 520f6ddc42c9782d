#ifndef TRICUB_TRICUB_H
#define TRICUB_TRICUB_H

/* C interface of the tricub shared library.
 *
 * Graphs are opaque handles released with tricub_graph_free. Every function
 * that can fail returns a tricub_status; on failure a message is available
 * from tricub_last_error() on the calling thread until the next call.
 * Strings returned through char** out-parameters are owned by the caller
 * and released with tricub_string_free. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(TRICUB_BUILDING_LIBRARY)
#define TRICUB_API __declspec(dllexport)
#else
#define TRICUB_API __declspec(dllimport)
#endif
#else
#define TRICUB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct tricub_graph tricub_graph;

typedef enum tricub_status {
  TRICUB_OK = 0,
  TRICUB_INVALID_ARGUMENT = 1,
  TRICUB_PARSE = 2,
  TRICUB_NOT_CUBIC = 3,
  TRICUB_DISCONNECTED = 4,
  TRICUB_HAS_BRIDGE = 5,
  TRICUB_CAP_EXCEEDED = 6,
  TRICUB_VERIFICATION = 7,
  TRICUB_UNKNOWN_NAME = 8,
  TRICUB_IO = 9,
  TRICUB_INTERNAL = 10
} tricub_status;

typedef enum tricub_format { TRICUB_FORMAT_EDGE_LIST = 0, TRICUB_FORMAT_SPARSE6 = 1 } tricub_format;

/* Report exit codes (also the CLI exit codes). */
enum {
  TRICUB_EXIT_PASS = 0,
  TRICUB_EXIT_THEOREM_VIOLATION = 1,
  TRICUB_EXIT_CONJECTURE_VIOLATION = 2,
  TRICUB_EXIT_INCONCLUSIVE = 3,
  TRICUB_EXIT_INPUT_ERROR = 4
};

TRICUB_API const char* tricub_version(void);
TRICUB_API const char* tricub_status_name(tricub_status status);
TRICUB_API const char* tricub_last_error(void);
TRICUB_API void tricub_string_free(char* s);

/* Construction. `text` may be an edge list or sparse6. */
TRICUB_API tricub_status tricub_graph_parse(const char* text, tricub_graph** out);
TRICUB_API tricub_status tricub_graph_read_file(const char* path, tricub_graph** out);
TRICUB_API tricub_status tricub_graph_generate(const char* name, tricub_graph** out);
/* Tree family: caterpillar degree tree on n vertices, gadget "W" or "Wprime". */
TRICUB_API tricub_status tricub_graph_family(const char* gadget, int n, tricub_graph** out);
TRICUB_API tricub_status tricub_graph_random(int n, int simple, uint64_t seed, tricub_graph** out);
/* Expands the vertices u[0..count) to triangles. When sidecar_json is not
 * NULL it receives the recorded triangle and vertex maps as JSON. */
TRICUB_API tricub_status tricub_graph_expand(const tricub_graph* g, const int* u, size_t count, tricub_graph** out,
                                             char** sidecar_json);
TRICUB_API void tricub_graph_free(tricub_graph* g);

/* Inspection. */
TRICUB_API int tricub_graph_vertex_count(const tricub_graph* g);
TRICUB_API int tricub_graph_edge_count(const tricub_graph* g);
TRICUB_API tricub_status tricub_graph_edge(const tricub_graph* g, int edge, int* u, int* v);
TRICUB_API tricub_status tricub_graph_serialize(const tricub_graph* g, tricub_format format, char** out);
TRICUB_API tricub_status tricub_graph_hash(const tricub_graph* g, char** out);

/* Analysis. options_json may be NULL or an object with any of
 * "checks" (array of names), "budget", "timeout", "threads", "node_budget".
 * On success report_json receives the report and exit_code its exit code. */
TRICUB_API tricub_status tricub_analyze(const tricub_graph* g, const char* options_json, char** report_json,
                                        int* exit_code);
TRICUB_API tricub_status tricub_report_to_text(const char* report_json, char** out);

/* Replays a certificate. `target` is used for H-colorings and may be NULL.
 * valid receives 1 or 0; message (optional) receives the reason. */
TRICUB_API tricub_status tricub_verify_certificate(const tricub_graph* g, const char* certificate_json,
                                                   const tricub_graph* target, int* valid, char** message);

/* The P10 5-CDC fixtures as JSON (one entry per vertex z). */
TRICUB_API tricub_status tricub_p10_fixtures(char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* TRICUB_TRICUB_H */
