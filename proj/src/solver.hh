#ifndef TREEDEPTH_SOLVER_HH
#define TREEDEPTH_SOLVER_HH

#include "graph.hh"
#include "symmetry.hh"

#include <optional>
#include <vector>

namespace treedepth
{
    struct SolverConfig
    {
        bool use_lower_bounds = true;
        bool use_orbit_symmetry = true;
        bool use_domination = true;
        bool use_only_child = true;
        bool use_degree_order = true;
        std::optional<double> time_limit_seconds;
        std::optional<long long> node_limit;
        long long orbit_node_budget = default_orbit_node_budget;
    };

    /// A rooted forest over 1..n as a parent array; parent[v] == 0 marks a
    /// root. Index 0 is unused.
    struct EliminationForest
    {
        std::vector<int> parent;

        auto vertex_count() const -> int { return int(parent.size()) - 1; }

        /// Maximum number of vertices along a root-to-leaf path.
        auto depth() const -> int;
    };

    struct SolveStats
    {
        long long nodes = 0;                 // search tree nodes expanded
        long long prunes_simple_bound = 0;   // subproblems cut by the size/degree bound
        long long prunes_path_bound = 0;     // subproblems cut by the greedy path bound
        long long skips_orbit = 0;           // root candidates dropped per rule
        long long skips_domination = 0;
        long long skips_only_child = 0;
        int peak_live_components = 0;        // most component sets alive at once
        bool orbits_exact = true;
        double wall_ms = 0.0;
    };

    enum class SolveStatus
    {
        solved,
        timed_out,
        node_limit_reached
    };

    struct SolveResult
    {
        SolveStatus status = SolveStatus::solved;
        int treedepth = 0;        // meaningful when solved
        int lower_bound = 0;      // treedepth >= lower_bound, always
        EliminationForest forest; // meaningful when solved; original numbering
        SolveStats stats;
    };

    /// Compute the treedepth of g with an optimal elimination forest, by
    /// solving the depth-k decision problem for k = 0, 1, 2, ... until
    /// feasible. Degree reordering, the bound table and vertex orbits are
    /// set up once per call; the forest is reported in g's own numbering.
    auto solve(const Graph & g, const SolverConfig & config = {}) -> SolveResult;

    struct DecisionOutcome
    {
        bool feasible = false;
        SolveStats stats;
        /// Parent entries recorded during the search; on a feasible outcome
        /// the entries of mask form a valid decomposition of g[mask], with
        /// parents outside mask (always 0 here) marking subproblem roots.
        std::vector<int> parent;
    };

    /// The decision problem on an induced subgraph: does g[mask] admit an
    /// elimination forest of depth at most k? No degree reordering is
    /// applied; orbits are used only when mask covers all of g. Exposed
    /// mainly so the search can be tested one decision at a time.
    auto decide_depth(const Graph & g, const VertexSet & mask, int k, const SolverConfig & config = {})
            -> DecisionOutcome;
}

#endif
