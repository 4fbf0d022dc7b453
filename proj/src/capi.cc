#include "treedepth.h"

#include "bounds.hh"
#include "errors.hh"
#include "generate.hh"
#include "graph.hh"
#include "graph_io.hh"
#include "solver.hh"
#include "symmetry.hh"
#include "verify.hh"

#include <cstring>
#include <new>
#include <string>

struct td_graph
{
    treedepth::Graph graph;
};

struct td_result
{
    treedepth::SolveResult result;
};

namespace
{
    auto write_error(char * error, size_t error_len, const std::string & message) -> void
    {
        if (error == nullptr || error_len == 0)
            return;
        std::size_t n = std::min(error_len - 1, message.size());
        std::memcpy(error, message.data(), n);
        error[n] = '\0';
    }

    template <typename F>
    auto guarded(F && f, char * error = nullptr, size_t error_len = 0) -> td_status
    {
        try {
            f();
            return TD_OK;
        }
        catch (const treedepth::ParseError & e) {
            write_error(error, error_len, e.what());
            return TD_ERR_PARSE;
        }
        catch (const treedepth::BudgetError & e) {
            write_error(error, error_len, e.what());
            return TD_ERR_BUDGET;
        }
        catch (const treedepth::ArgumentError & e) {
            write_error(error, error_len, e.what());
            return TD_ERR_ARGUMENT;
        }
        catch (const std::bad_alloc &) {
            return TD_ERR_NOMEM;
        }
    }

    auto to_config(const td_config * config) -> treedepth::SolverConfig
    {
        treedepth::SolverConfig result;
        if (config == nullptr)
            return result;
        result.use_lower_bounds = config->use_lower_bounds != 0;
        result.use_orbit_symmetry = config->use_orbit_symmetry != 0;
        result.use_domination = config->use_domination != 0;
        result.use_only_child = config->use_only_child != 0;
        result.use_degree_order = config->use_degree_order != 0;
        if (config->time_limit_seconds > 0)
            result.time_limit_seconds = config->time_limit_seconds;
        if (config->node_limit > 0)
            result.node_limit = config->node_limit;
        return result;
    }

    auto make_graph(treedepth::Graph graph, td_graph ** out) -> void
    {
        *out = new td_graph{ std::move(graph) };
    }
}

extern "C" {

void td_config_init(td_config * config)
{
    config->use_lower_bounds = 1;
    config->use_orbit_symmetry = 1;
    config->use_domination = 1;
    config->use_only_child = 1;
    config->use_degree_order = 1;
    config->time_limit_seconds = 0;
    config->node_limit = 0;
}

const char * td_version(void)
{
    return "1.0.0";
}

td_status td_graph_parse(const char * text, const char * format, td_graph ** out,
        char * error, size_t error_len)
{
    return guarded([&] {
        std::string_view name = format == nullptr ? "auto" : format;
        treedepth::GraphFormat f;
        if (name == "edgelist")
            f = treedepth::GraphFormat::edgelist;
        else if (name == "dimacs")
            f = treedepth::GraphFormat::dimacs_gr;
        else if (name == "auto")
            f = treedepth::sniff_format(text);
        else
            throw treedepth::ArgumentError{ "unknown format '" + std::string(name) + "'" };
        make_graph(treedepth::parse_graph(text, f), out);
    }, error, error_len);
}

td_status td_graph_generate_path(int n, td_graph ** out)
{
    return guarded([&] { make_graph(treedepth::generate_path(n), out); });
}

td_status td_graph_generate_cycle(int n, td_graph ** out)
{
    return guarded([&] { make_graph(treedepth::generate_cycle(n), out); });
}

td_status td_graph_generate_clique(int n, td_graph ** out)
{
    return guarded([&] { make_graph(treedepth::generate_clique(n), out); });
}

td_status td_graph_generate_complete_bipartite(int n, td_graph ** out)
{
    return guarded([&] { make_graph(treedepth::generate_complete_bipartite(n), out); });
}

td_status td_graph_generate_binary_tree(int n, td_graph ** out)
{
    return guarded([&] { make_graph(treedepth::generate_binary_tree(n), out); });
}

td_status td_graph_generate_square_grid(int side, td_graph ** out)
{
    return guarded([&] { make_graph(treedepth::generate_square_grid(side), out); });
}

td_status td_graph_generate_gnp(int n, double p, unsigned long long seed, td_graph ** out)
{
    return guarded([&] { make_graph(treedepth::generate_gnp(n, p, seed), out); });
}

void td_graph_free(td_graph * graph)
{
    delete graph;
}

int td_graph_vertex_count(const td_graph * graph)
{
    return graph->graph.vertex_count();
}

long long td_graph_edge_count(const td_graph * graph)
{
    return graph->graph.edge_count();
}

int td_graph_adjacent(const td_graph * graph, int u, int v)
{
    return graph->graph.adjacent(u, v) ? 1 : 0;
}

int td_graph_max_degree(const td_graph * graph)
{
    return treedepth::max_degree(graph->graph);
}

void td_graph_edges(const td_graph * graph, int * edges)
{
    std::size_t i = 0;
    for (auto & [u, v] : graph->graph.edges()) {
        edges[i++] = u;
        edges[i++] = v;
    }
}

td_status td_solve(const td_graph * graph, const td_config * config, td_result ** out)
{
    return guarded([&] {
        *out = new td_result{ treedepth::solve(graph->graph, to_config(config)) };
    });
}

void td_result_free(td_result * result)
{
    delete result;
}

td_solve_status td_result_status(const td_result * result)
{
    switch (result->result.status) {
    case treedepth::SolveStatus::solved: return TD_SOLVED;
    case treedepth::SolveStatus::timed_out: return TD_TIMED_OUT;
    default: return TD_NODE_LIMIT;
    }
}

int td_result_treedepth(const td_result * result)
{
    return result->result.treedepth;
}

int td_result_lower_bound(const td_result * result)
{
    return result->result.lower_bound;
}

int td_result_parent(const td_result * result, int v)
{
    return result->result.forest.parent[v];
}

long long td_result_counter(const td_result * result, td_counter counter)
{
    const auto & stats = result->result.stats;
    switch (counter) {
    case TD_COUNTER_NODES: return stats.nodes;
    case TD_COUNTER_PRUNES_SIMPLE_BOUND: return stats.prunes_simple_bound;
    case TD_COUNTER_PRUNES_PATH_BOUND: return stats.prunes_path_bound;
    case TD_COUNTER_SKIPS_ORBIT: return stats.skips_orbit;
    case TD_COUNTER_SKIPS_DOMINATION: return stats.skips_domination;
    case TD_COUNTER_SKIPS_ONLY_CHILD: return stats.skips_only_child;
    case TD_COUNTER_PEAK_LIVE_COMPONENTS: return stats.peak_live_components;
    }
    return -1;
}

double td_result_wall_ms(const td_result * result)
{
    return result->result.stats.wall_ms;
}

td_status td_check_forest(const td_graph * graph, const int * parent, int * valid,
        int * depth, char * error, size_t error_len)
{
    return guarded([&] {
        const int n = graph->graph.vertex_count();
        std::vector<int> parents(parent, parent + n + 1);
        auto report = treedepth::check_forest(graph->graph, parents);
        *valid = report.valid ? 1 : 0;
        *depth = report.depth;
        if (report.violation)
            write_error(error, error_len, *report.violation);
    }, error, error_len);
}

td_status td_brute_force_treedepth(const td_graph * graph, int * out)
{
    return guarded([&] { *out = treedepth::brute_force_treedepth(graph->graph); });
}

td_status td_vertex_orbits(const td_graph * graph, int * orbit)
{
    return guarded([&] {
        auto labels = treedepth::vertex_orbits(graph->graph);
        orbit[0] = labels.exact ? 1 : 0;
        for (int v = 1; v <= graph->graph.vertex_count(); ++v)
            orbit[v] = labels.orbit[v];
    });
}

td_status td_root_candidates(const td_graph * graph, const td_config * config,
        int is_root_level, int * candidates, int * count)
{
    return guarded([&] {
        const auto & g = graph->graph;
        auto solver_config = to_config(config);
        treedepth::RootCandidateConfig rules{
            solver_config.use_orbit_symmetry,
            solver_config.use_domination,
            solver_config.use_only_child,
        };
        treedepth::OrbitLabels orbits = treedepth::OrbitLabels::singletons(g.vertex_count());
        if (is_root_level && rules.use_orbit_symmetry && g.vertex_count() >= 1)
            orbits = treedepth::vertex_orbits(g);
        auto result = treedepth::root_candidates(g, treedepth::VertexSet::full(g.vertex_count()),
                is_root_level != 0, 0, orbits, rules);
        *count = int(result.size());
        for (std::size_t i = 0; i < result.size(); ++i)
            candidates[i] = result[i];
    });
}

td_status td_simple_lower_bound(const td_graph * graph, int component_size, int * bound)
{
    return guarded([&] {
        const int b = treedepth::max_degree(graph->graph);
        if (component_size < 0 || component_size > graph->graph.vertex_count())
            throw treedepth::ArgumentError{ "component size out of range" };
        auto table = treedepth::SimpleBoundTable::build(b, graph->graph.vertex_count());
        *bound = table.value(component_size);
    });
}

td_status td_path_bound_prunes(const td_graph * graph, int target_depth, int * pruned)
{
    return guarded([&] {
        const auto & g = graph->graph;
        auto mask = treedepth::VertexSet::full(g.vertex_count());
        if (! treedepth::is_connected(g, mask) || g.vertex_count() == 0)
            throw treedepth::ArgumentError{ "path bound needs a connected, non-empty graph" };
        *pruned = treedepth::can_prune_by_path_lower_bound(g, mask, target_depth) ? 1 : 0;
    });
}

} // extern "C"
