/* C interface to the orientdia shared library.
 *
 * Handles are opaque and owned by the caller; release them with the matching
 * *_free function. Strings returned through char** are heap-allocated and
 * released with od_string_free. On failure a function returns a non-zero
 * od_status and od_last_error() describes the problem (per thread). */
#ifndef ORIENTDIA_ORIENTDIA_H
#define ORIENTDIA_ORIENTDIA_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define OD_API __declspec(dllexport)
#else
#define OD_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct od_graph od_graph;
typedef struct od_digraph od_digraph;

typedef enum od_status {
  OD_OK = 0,
  OD_ERR_INPUT = 1,       /* malformed input or violated precondition */
  OD_ERR_INFEASIBLE = 2,  /* no strong orientation exists (bridge) */
  OD_ERR_CONTRACT = 3,    /* internal guarantee failed */
  OD_ERR_RESOURCE = 4,    /* search budget exceeded */
  OD_ERR_INTERNAL = 5
} od_status;

typedef enum od_strategy {
  OD_STRATEGY_ROBBINS = 0,
  OD_STRATEGY_THEOREM1 = 1,
  OD_STRATEGY_BLOCKGRAPH = 2
} od_strategy;

typedef enum od_exact_method { OD_EXACT_BRUTE = 0, OD_EXACT_DECOMPOSED = 1 } od_exact_method;

typedef enum od_family {
  OD_FAMILY_GNP = 0,
  OD_FAMILY_BLOCK = 1,
  OD_FAMILY_RANDOM = 2,
  OD_FAMILY_RANDOM_BLOCK = 3
} od_family;

typedef struct od_exact_options {
  size_t edge_budget;
  size_t block_budget_log2;
  unsigned threads;
} od_exact_options;

OD_API const char* od_last_error(void);
OD_API const char* od_status_name(od_status status);
OD_API void od_string_free(char* s);

/* endpoints holds 2*m vertex ids: edge i joins endpoints[2i] and endpoints[2i+1]. */
OD_API od_status od_graph_create(size_t n, size_t m, const uint32_t* endpoints, od_graph** out);
OD_API od_status od_graph_parse(const char* text, od_graph** out);
OD_API od_status od_graph_load(const char* path, od_graph** out);
OD_API void od_graph_free(od_graph* g);
OD_API size_t od_graph_vertex_count(const od_graph* g);
OD_API size_t od_graph_edge_count(const od_graph* g);
OD_API od_status od_graph_to_edge_list(const od_graph* g, char** out);

OD_API od_status od_digraph_parse(const char* text, od_digraph** out);
OD_API od_status od_digraph_load(const char* path, od_digraph** out);
OD_API void od_digraph_free(od_digraph* d);
OD_API size_t od_digraph_vertex_count(const od_digraph* d);
OD_API size_t od_digraph_arc_count(const od_digraph* d);
/* Writes arc i as (tails[i], heads[i]); both buffers hold od_digraph_arc_count entries. */
OD_API od_status od_digraph_arcs(const od_digraph* d, uint32_t* tails, uint32_t* heads);
OD_API od_status od_digraph_to_arc_list(const od_digraph* d, char** out);
OD_API od_status od_digraph_to_dot(const od_digraph* d, char** out);
/* Diameter of d; *infinite is set when d is not strongly connected. */
OD_API od_status od_digraph_diameter(const od_digraph* d, uint32_t* diameter, int* infinite);

OD_API od_status od_decompose_json(const od_graph* g, char** json);
OD_API od_status od_structural_json(const od_graph* g, char** json);
OD_API od_status od_bounds_json(size_t n, size_t p, size_t s, char** json);
/* Bounds for the graph's own n, p and s. */
OD_API od_status od_graph_bounds_json(const od_graph* g, char** json);

OD_API od_status od_strategy_parse(const char* name, od_strategy* out);
/* Either output may be NULL when not wanted. */
OD_API od_status od_orient(const od_graph* g, od_strategy strategy, od_digraph** orientation,
                           char** report_json);

/* Tournament on n >= 3 vertices; special < 0 means none. */
OD_API od_status od_complete_orientation(size_t n, int64_t special, uint64_t seed, od_digraph** out);
OD_API od_status od_lemma1_orientation(const od_graph* g, uint32_t x, uint32_t z, od_digraph** out);

OD_API void od_exact_options_default(od_exact_options* options);
OD_API od_status od_exact_method_parse(const char* name, od_exact_method* out);
/* options may be NULL for defaults; either output may be NULL. */
OD_API od_status od_exact(const od_graph* g, od_exact_method method, const od_exact_options* options,
                          od_digraph** witness, char** certificate_json);

OD_API od_status od_family_parse(const char* name, od_family* out);
/* *canonical is set to NULL for families without a canonical orientation. */
OD_API od_status od_generate(od_family family, size_t n, size_t p, uint64_t seed, od_graph** graph,
                             od_digraph** canonical);

/* bound_name: theorem1, corollary, blockgraph, strong or none. *ok is set
 * when the orientation is strong and within the bound. */
OD_API od_status od_verify(const od_graph* g, const od_digraph* d, const char* bound_name, int* ok,
                           char** report_json);

#ifdef __cplusplus
}
#endif

#endif
