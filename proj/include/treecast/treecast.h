/* C interface to the treecast library. Every function returning tc_status
 * leaves a message for tc_last_error() on failure. Strings handed out through
 * char** must be released with tc_string_free. */
#ifndef TREECAST_H
#define TREECAST_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define TC_API __declspec(dllexport)
#else
#define TC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tc_status {
  TC_OK = 0,
  TC_ERR_PARSE = 1,
  TC_ERR_INVALID_ARGUMENT = 2,
  TC_ERR_PRECONDITION = 3,
  TC_ERR_LIMIT = 4,
  TC_ERR_NOT_FOUND = 5,
  TC_ERR_IO = 6,
  TC_ERR_INTERNAL = 7
} tc_status;

typedef struct tc_tree tc_tree;
typedef struct tc_broadcast tc_broadcast;
typedef struct tc_solution tc_solution;
typedef struct tc_tree_list tc_tree_list;

TC_API const char* tc_version(void);
TC_API const char* tc_status_name(tc_status s);
/* Message of the last failure on the calling thread; empty if none. */
TC_API const char* tc_last_error(void);
TC_API void tc_string_free(char* s);

/* Trees. Text is an edge list ("n" then "u v" lines) or graph6. */
TC_API tc_status tc_tree_parse(const char* text, tc_tree** out);
TC_API tc_status tc_tree_from_edges(size_t n, const uint32_t* endpoints, size_t edge_count,
                                    tc_tree** out);
TC_API void tc_tree_free(tc_tree* t);
TC_API size_t tc_tree_order(const tc_tree* t);
TC_API tc_status tc_tree_to_text(const tc_tree* t, char** out);
TC_API tc_status tc_tree_to_graph6(const tc_tree* t, char** out);
TC_API tc_status tc_tree_canonical_code(const tc_tree* t, char** out);
TC_API tc_status tc_tree_profile_json(const tc_tree* t, char** out);
/* f may be NULL for a plain drawing. */
TC_API tc_status tc_tree_dot(const tc_tree* t, const tc_broadcast* f, char** out);

/* Every free tree on n vertices, one per isomorphism class. */
TC_API tc_status tc_free_trees(size_t n, tc_tree_list** out);
TC_API size_t tc_tree_list_size(const tc_tree_list* list);
/* Borrowed; valid until the list is freed. */
TC_API const tc_tree* tc_tree_list_get(const tc_tree_list* list, size_t i);
TC_API void tc_tree_list_free(tc_tree_list* list);

/* Broadcasts. Text is "v value" lines; omitted vertices broadcast 0. */
TC_API tc_status tc_broadcast_parse(const tc_tree* t, const char* text, tc_broadcast** out);
TC_API tc_status tc_broadcast_from_values(const tc_tree* t, const uint32_t* values, size_t n,
                                          tc_broadcast** out);
TC_API void tc_broadcast_free(tc_broadcast* f);
TC_API size_t tc_broadcast_order(const tc_broadcast* f);
/* Borrowed; tc_broadcast_order(f) entries. */
TC_API const uint32_t* tc_broadcast_values(const tc_broadcast* f);
TC_API uint64_t tc_broadcast_weight(const tc_broadcast* f);
TC_API tc_status tc_broadcast_to_text(const tc_broadcast* f, char** out);

typedef struct tc_check_report {
  uint64_t weight;
  int dominating;
  int bn_independent;
  int h_independent;
  /* Only meaningful when bn_independent is set. */
  int maximal;
  size_t uncovered_edges;
  size_t max_edge_coverers;
} tc_check_report;

/* text may be NULL. */
TC_API tc_status tc_broadcast_check(const tc_tree* t, const tc_broadcast* f, tc_check_report* out,
                                    char** text);

/* Solvers. */
typedef enum tc_solver_mode { TC_MODE_NAIVE = 0, TC_MODE_PRUNED = 1 } tc_solver_mode;
typedef enum tc_value_bound {
  TC_BOUND_NONE = 0,
  TC_BOUND_N_MINUS_1 = 1,
  TC_BOUND_THEOREM = 2
} tc_value_bound;

typedef struct tc_solver_options {
  tc_solver_mode mode;
  tc_value_bound value_bound;
  /* 0 means unlimited. */
  uint64_t node_limit;
  int override_limits;
  int all_optima;
} tc_solver_options;

TC_API void tc_solver_options_init(tc_solver_options* opts);

/* On TC_ERR_LIMIT from a node limit, *out still receives the incumbent and
 * tc_solution_is_partial reports it. */
TC_API tc_status tc_solve_alpha_bn(const tc_tree* t, const tc_solver_options* opts,
                                   tc_solution** out);
TC_API tc_status tc_solve_alpha_h(const tc_tree* t, int override_limit, tc_solution** out);
TC_API size_t tc_independence_number(const tc_tree* t);
TC_API void tc_solution_free(tc_solution* s);
TC_API uint64_t tc_solution_value(const tc_solution* s);
TC_API int tc_solution_is_partial(const tc_solution* s);
TC_API uint64_t tc_solution_nodes(const tc_solution* s);
TC_API uint64_t tc_solution_nanoseconds(const tc_solution* s);
/* Borrowed; valid until the solution is freed. */
TC_API const tc_broadcast* tc_solution_witness(const tc_solution* s);
TC_API size_t tc_solution_optima_count(const tc_solution* s);
TC_API const tc_broadcast* tc_solution_optimum(const tc_solution* s, size_t i);

/* Structural laws over a batch of trees; *violated counts violated rows. */
TC_API tc_status tc_laws_report(const tc_tree* const* trees, size_t count, int csv, char** out,
                                size_t* violated);

/* Constructions. */
TC_API tc_status tc_construct_spider(const char* legs, tc_tree** out);
TC_API tc_status tc_construct_caterpillar(const char* spec, tc_tree** out);
TC_API tc_status tc_spider_witness(const tc_tree* t, tc_broadcast** out);
TC_API tc_status tc_caterpillar_witness(const tc_tree* t, tc_broadcast** out);
/* Newline-separated. */
TC_API tc_status tc_fixture_names(char** out);
/* *expected is -1 when the fixture has no pinned value; may be NULL. */
TC_API tc_status tc_fixture(const char* name, tc_tree** out, int64_t* expected);

/* Enumeration campaigns. */
typedef enum tc_campaign {
  TC_CAMPAIGN_BOUND = 0,
  TC_CAMPAIGN_Q1 = 1,
  TC_CAMPAIGN_EQUALITY = 2,
  TC_CAMPAIGN_ALPHAH = 3
} tc_campaign;

TC_API tc_status tc_campaign_parse(const char* name, tc_campaign* out);

typedef struct tc_campaign_options {
  tc_campaign kind;
  size_t n_min;
  size_t n_max;
  /* 0 picks the hardware concurrency. */
  unsigned workers;
  /* NULL writes nothing. */
  const char* out_dir;
  tc_solver_options solver;
} tc_campaign_options;

TC_API void tc_campaign_options_init(tc_campaign_options* opts);

typedef struct tc_campaign_summary {
  size_t trees;
  size_t flagged;
} tc_campaign_summary;

/* census and flagged may be NULL. */
TC_API tc_status tc_campaign_run(const tc_campaign_options* opts, tc_campaign_summary* summary,
                                 char** census, char** flagged);

#ifdef __cplusplus
}
#endif

#endif
