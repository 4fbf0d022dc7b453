/* treedepth: exact treedepth solver.
 *
 * C interface to the solver library. Graphs and solve results are opaque
 * handles; every function that can fail returns a td_status, and functions
 * taking an error buffer write a human-readable message into it on failure.
 *
 * Vertices are numbered 1..n. A parent value of 0 marks a root of the
 * elimination forest.
 */

#ifndef TREEDEPTH_H
#define TREEDEPTH_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct td_graph td_graph;
typedef struct td_result td_result;

typedef enum td_status {
    TD_OK = 0,
    TD_ERR_PARSE = 1,      /* malformed instance text */
    TD_ERR_ARGUMENT = 2,   /* invalid parameter */
    TD_ERR_BUDGET = 3,     /* input exceeds a hard budget (e.g. oracle size) */
    TD_ERR_NOMEM = 4
} td_status;

typedef enum td_solve_status {
    TD_SOLVED = 0,
    TD_TIMED_OUT = 1,
    TD_NODE_LIMIT = 2
} td_solve_status;

/* Feature toggles and limits. Initialise with td_config_init (all features
 * on, no limits), then adjust fields. */
typedef struct td_config {
    int use_lower_bounds;
    int use_orbit_symmetry;
    int use_domination;
    int use_only_child;
    int use_degree_order;
    double time_limit_seconds;   /* <= 0: no limit */
    long long node_limit;        /* <= 0: no limit */
} td_config;

void td_config_init(td_config *config);

const char *td_version(void);

/* ---- graphs ---------------------------------------------------------- */

/* Parse from text. format is "edgelist", "dimacs", or "auto". */
td_status td_graph_parse(const char *text, const char *format, td_graph **out,
                         char *error, size_t error_len);

td_status td_graph_generate_path(int n, td_graph **out);
td_status td_graph_generate_cycle(int n, td_graph **out);
td_status td_graph_generate_clique(int n, td_graph **out);
td_status td_graph_generate_complete_bipartite(int n, td_graph **out);
td_status td_graph_generate_binary_tree(int n, td_graph **out);
td_status td_graph_generate_square_grid(int side, td_graph **out);
td_status td_graph_generate_gnp(int n, double p, unsigned long long seed, td_graph **out);

void td_graph_free(td_graph *graph);

int td_graph_vertex_count(const td_graph *graph);
long long td_graph_edge_count(const td_graph *graph);
int td_graph_adjacent(const td_graph *graph, int u, int v);
int td_graph_max_degree(const td_graph *graph);

/* Write all edges as u,v pairs (u < v, ascending) into edges, which must
 * hold 2 * td_graph_edge_count(graph) ints. */
void td_graph_edges(const td_graph *graph, int *edges);

/* ---- solving --------------------------------------------------------- */

td_status td_solve(const td_graph *graph, const td_config *config, td_result **out);

void td_result_free(td_result *result);

td_solve_status td_result_status(const td_result *result);

/* Valid when solved. */
int td_result_treedepth(const td_result *result);

/* Valid always: the treedepth is at least this. */
int td_result_lower_bound(const td_result *result);

/* Parent of v in the optimal elimination forest (0 = root), in the input
 * graph's numbering. Valid when solved. */
int td_result_parent(const td_result *result, int v);

typedef enum td_counter {
    TD_COUNTER_NODES = 0,
    TD_COUNTER_PRUNES_SIMPLE_BOUND = 1,
    TD_COUNTER_PRUNES_PATH_BOUND = 2,
    TD_COUNTER_SKIPS_ORBIT = 3,
    TD_COUNTER_SKIPS_DOMINATION = 4,
    TD_COUNTER_SKIPS_ONLY_CHILD = 5,
    TD_COUNTER_PEAK_LIVE_COMPONENTS = 6
} td_counter;

long long td_result_counter(const td_result *result, td_counter counter);
double td_result_wall_ms(const td_result *result);

/* ---- verification ---------------------------------------------------- */

/* Check a parent array (parent[0] unused, entries for v = 1..n) against the
 * graph. On return *valid is 0 or 1 and *depth is the forest depth; when
 * invalid, a diagnostic is written to error. */
td_status td_check_forest(const td_graph *graph, const int *parent, int *valid,
                          int *depth, char *error, size_t error_len);

/* Exact treedepth by exhaustive search, for graphs of at most 14 vertices;
 * larger inputs fail with TD_ERR_BUDGET. Independent of the solver. */
td_status td_brute_force_treedepth(const td_graph *graph, int *out);

/* ---- introspection (used by the CLI debug subcommand) ----------------- */

/* Vertex orbits of the automorphism group: orbit[v] is the least vertex in
 * v's orbit. orbit[0] receives 1 if the labels are exact, 0 if the search
 * hit its budget and fell back to singletons. orbit must hold n + 1 ints. */
td_status td_vertex_orbits(const td_graph *graph, int *orbit);

/* Surviving root candidates for the whole graph under the configured rules.
 * candidates must hold n ints; the count is written to *count.
 * is_root_level enables the orbit rule. */
td_status td_root_candidates(const td_graph *graph, const td_config *config,
                             int is_root_level, int *candidates, int *count);

/* The component-size lower bound for a component of the given size, using
 * the graph's maximum degree; fails with TD_ERR_ARGUMENT on edgeless
 * graphs. */
td_status td_simple_lower_bound(const td_graph *graph, int component_size, int *bound);

/* Whether the greedy path bound would prune the whole (connected) graph at
 * the given target depth; *pruned is 0 or 1. */
td_status td_path_bound_prunes(const td_graph *graph, int target_depth, int *pruned);

#ifdef __cplusplus
}
#endif

#endif /* TREEDEPTH_H */
