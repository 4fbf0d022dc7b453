#include "solver.hh"
#include "bounds.hh"
#include "errors.hh"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace treedepth
{
    auto EliminationForest::depth() const -> int
    {
        const int n = vertex_count();
        std::vector<int> depth(n + 1, 0);
        int best = 0;
        for (int v = 1; v <= n; ++v) {
            if (depth[v] != 0)
                continue;
            // resolve the chain from v down to the first vertex of known depth
            std::vector<int> chain;
            int u = v;
            while (u != 0 && depth[u] == 0) {
                chain.push_back(u);
                u = parent[u];
            }
            int base = u == 0 ? 0 : depth[u];
            for (auto it = chain.rbegin(); it != chain.rend(); ++it)
                depth[*it] = ++base;
            best = std::max(best, depth[v]);
        }
        return best;
    }

    namespace
    {
        using Clock = std::chrono::steady_clock;

        struct LimitReached
        {
            SolveStatus status;
        };

        /* One mutable context threaded through the recursion: the parent
         * array, bound table, orbit labels, configuration, statistics and
         * deadline. Component sets live in a stack arena sized by the
         * guarantee that at most n of them exist at once. */
        struct Engine
        {
            const Graph & g;
            const SolverConfig & cfg;
            int n;
            int w;

            const SimpleBoundTable * simple_bound = nullptr;
            const OrbitLabels * orbits = nullptr;

            std::vector<int> parent;
            SolveStats stats;

            bool has_deadline = false;
            Clock::time_point deadline;

            std::vector<std::uint64_t> arena;        // component sets, stacked
            int arena_sets;
            int live_components = 0;

            std::vector<std::uint64_t> mask_scratch; // one per recursion depth
            std::vector<std::uint64_t> bfs_scratch;  // remaining / frontier / next
            PathBoundScratch path_scratch;

            Engine(const Graph & g_, const SolverConfig & cfg_) :
                g(g_),
                cfg(cfg_),
                n(g_.vertex_count()),
                w(g_.word_count()),
                parent(n + 1, 0),
                arena(std::size_t(n + 4) * w, 0),
                arena_sets(n + 4),
                mask_scratch(std::size_t(n + 2) * w, 0),
                bfs_scratch(std::size_t(3) * w, 0),
                path_scratch(g_)
            {
            }

            auto arena_set(int index) -> std::uint64_t *
            {
                return arena.data() + std::size_t(index) * w;
            }

            auto check_limits() -> void
            {
                if ((stats.nodes & 4095) == 0 && has_deadline && Clock::now() >= deadline)
                    throw LimitReached{ SolveStatus::timed_out };
                if (cfg.node_limit && stats.nodes > *cfg.node_limit)
                    throw LimitReached{ SolveStatus::node_limit_reached };
            }

            auto split_components(const std::uint64_t * mask, int arena_base) -> int
            {
                std::uint64_t * remaining = bfs_scratch.data();
                std::uint64_t * frontier = bfs_scratch.data() + w;
                std::uint64_t * next = bfs_scratch.data() + 2 * w;
                bits::copy(remaining, mask, w);
                int count = 0;
                while (int seed = bits::first(remaining, w)) {
                    if (arena_base + count >= arena_sets)
                        throw std::logic_error{ "component arena overflow" };
                    std::uint64_t * component = arena_set(arena_base + count);
                    bits::clear(component, w);
                    bits::clear(frontier, w);
                    bits::set(frontier, seed);
                    while (! bits::empty(frontier, w)) {
                        bits::unite(component, frontier, w);
                        bits::clear(next, w);
                        for (int v = bits::first(frontier, w); v; v = bits::next(frontier, w, v))
                            bits::unite(next, g.neighbourhood_row(v), w);
                        bits::intersect(next, next, remaining, w);
                        bits::subtract(next, next, component, w);
                        bits::copy(frontier, next, w);
                    }
                    bits::subtract(remaining, remaining, component, w);
                    ++count;
                }
                return count;
            }

            /// Elimination forest of depth <= k for g[mask]? parent_vertex
            /// becomes the parent of every vertex chosen first in a
            /// component.
            auto general(const std::uint64_t * mask, int k, int parent_vertex, int depth, int arena_base)
                    -> bool
            {
                if (k == 0 && ! bits::empty(mask, w))
                    return false;

                const int count = split_components(mask, arena_base);
                live_components += count;
                stats.peak_live_components = std::max(stats.peak_live_components, live_components);
                struct Release
                {
                    Engine & engine;
                    int count;
                    ~Release() { engine.live_components -= count; }
                } release{ *this, count };

                if (cfg.use_lower_bounds && simple_bound) {
                    for (int i = 0; i < count; ++i)
                        if (simple_bound->prunes(bits::popcount(arena_set(arena_base + i), w), k)) {
                            ++stats.prunes_simple_bound;
                            return false;
                        }
                }
                if (cfg.use_lower_bounds) {
                    for (int i = 0; i < count; ++i)
                        if (can_prune_by_path_lower_bound(g, arena_set(arena_base + i), k, path_scratch)) {
                            ++stats.prunes_path_bound;
                            return false;
                        }
                }

                const bool root_level = depth == 0 && count == 1 && orbits != nullptr;
                const bool only_child = count == 1 && parent_vertex != 0;
                for (int i = 0; i < count; ++i)
                    if (! connected(arena_set(arena_base + i), k, parent_vertex, root_level, only_child,
                                depth, arena_base + count))
                        return false;
                return true;
            }

            /// Elimination tree of depth <= k for the connected, non-empty
            /// g[component]?
            auto connected(const std::uint64_t * component, int k, int parent_vertex, bool root_level,
                    bool only_child, int depth, int arena_base) -> bool
            {
                ++stats.nodes;
                check_limits();

                const int first = bits::first(component, w);
                if (bits::next(component, w, first) == 0) {
                    parent[first] = parent_vertex;
                    return true;
                }

                for (int v = first; v; v = bits::next(component, w, v)) {
                    if (only_child && cfg.use_only_child && v < parent_vertex) {
                        ++stats.skips_only_child;
                        continue;
                    }
                    if (root_level && cfg.use_orbit_symmetry && orbits->orbit[v] != v) {
                        ++stats.skips_orbit;
                        continue;
                    }
                    if (cfg.use_domination) {
                        bool dominated = false;
                        for (int v2 = first; v2 && v2 < v; v2 = bits::next(component, w, v2))
                            if (dominates(g.neighbourhood_row(v2), g.neighbourhood_row(v), component, v2, w)) {
                                dominated = true;
                                break;
                            }
                        if (dominated) {
                            ++stats.skips_domination;
                            continue;
                        }
                    }

                    parent[v] = parent_vertex;
                    std::uint64_t * rest = mask_scratch.data() + std::size_t(depth) * w;
                    bits::copy(rest, component, w);
                    bits::unset(rest, v);
                    if (general(rest, k - 1, v, depth + 1, arena_base))
                        return true;
                }
                return false;
            }
        };

        auto elapsed_ms(Clock::time_point start) -> double
        {
            return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
        }
    }

    auto solve(const Graph & input, const SolverConfig & config) -> SolveResult
    {
        const auto start = Clock::now();
        const int n = input.vertex_count();

        Graph reordered;
        VertexPermutation permutation = VertexPermutation::identity(n);
        const Graph * g = &input;
        if (config.use_degree_order && n > 0) {
            auto [h, perm] = reorder_by_degree(input);
            reordered = std::move(h);
            permutation = std::move(perm);
            g = &reordered;
        }

        std::optional<SimpleBoundTable> simple_bound;
        const int b = max_degree(*g);
        if (config.use_lower_bounds && b >= 1)
            simple_bound = SimpleBoundTable::build(b, n);

        OrbitLabels orbits;
        bool orbits_available = false;
        if (config.use_orbit_symmetry && n >= 1 && is_connected(*g, VertexSet::full(n))) {
            orbits = vertex_orbits(*g, config.orbit_node_budget);
            orbits_available = true;
        }

        Engine engine(*g, config);
        if (simple_bound)
            engine.simple_bound = &*simple_bound;
        if (orbits_available)
            engine.orbits = &orbits;
        engine.stats.orbits_exact = ! orbits_available || orbits.exact;
        if (config.time_limit_seconds) {
            engine.has_deadline = true;
            engine.deadline = start + std::chrono::duration_cast<Clock::duration>(
                    std::chrono::duration<double>(*config.time_limit_seconds));
        }

        SolveResult result;
        VertexSet everything = VertexSet::full(n);
        int k = 0;
        try {
            while (! engine.general(everything.data(), k, 0, 0, 0))
                ++k;
            result.status = SolveStatus::solved;
            result.treedepth = k;
            result.lower_bound = k;
            result.forest.parent.assign(n + 1, 0);
            for (int v = 1; v <= n; ++v) {
                int p = engine.parent[permutation.forward[v]];
                result.forest.parent[v] = p == 0 ? 0 : permutation.inverse[p];
            }
        }
        catch (const LimitReached & limit) {
            result.status = limit.status;
            result.lower_bound = k;
        }
        result.stats = engine.stats;
        result.stats.wall_ms = elapsed_ms(start);
        return result;
    }

    auto decide_depth(const Graph & g, const VertexSet & mask, int k, const SolverConfig & config)
            -> DecisionOutcome
    {
        const auto start = Clock::now();
        const int n = g.vertex_count();

        std::optional<SimpleBoundTable> simple_bound;
        const int b = max_degree(g);
        if (config.use_lower_bounds && b >= 1)
            simple_bound = SimpleBoundTable::build(b, n);

        OrbitLabels orbits;
        bool orbits_available = false;
        if (config.use_orbit_symmetry && n >= 1 && mask == VertexSet::full(n) && is_connected(g, mask)) {
            orbits = vertex_orbits(g, config.orbit_node_budget);
            orbits_available = true;
        }

        Engine engine(g, config);
        if (simple_bound)
            engine.simple_bound = &*simple_bound;
        if (orbits_available)
            engine.orbits = &orbits;
        engine.stats.orbits_exact = ! orbits_available || orbits.exact;
        if (config.time_limit_seconds) {
            engine.has_deadline = true;
            engine.deadline = start + std::chrono::duration_cast<Clock::duration>(
                    std::chrono::duration<double>(*config.time_limit_seconds));
        }

        DecisionOutcome outcome;
        outcome.feasible = engine.general(mask.data(), k, 0, 0, 0);
        outcome.stats = engine.stats;
        outcome.stats.wall_ms = elapsed_ms(start);
        outcome.parent = std::move(engine.parent);
        return outcome;
    }
}
