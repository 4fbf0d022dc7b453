#include "verify.hh"
#include "errors.hh"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>

namespace treedepth
{
    namespace
    {
        auto describe_edge(int u, int v) -> std::string
        {
            return "{" + std::to_string(u) + "," + std::to_string(v) + "}";
        }
    }

    auto check_forest(const Graph & g, const VertexSet & mask, const std::vector<int> & parent)
            -> ForestCheckReport
    {
        const int n = g.vertex_count();
        if (int(parent.size()) != n + 1)
            return { false, 0, "parent array has wrong length" };

        for (int v = mask.min(); v; v = mask.next(v)) {
            if (parent[v] < 0 || parent[v] > n)
                return { false, 0, "parent[" + std::to_string(v) + "] = " +
                    std::to_string(parent[v]) + " is out of range" };
            if (parent[v] == v)
                return { false, 0, "vertex " + std::to_string(v) + " is its own parent" };
        }

        // depth[v]: vertices on the path from v up to its root; 0 = unresolved,
        // -1 = on the current resolution path (cycle detection)
        std::vector<int> depth(n + 1, 0);
        std::vector<int> chain;
        for (int v = mask.min(); v; v = mask.next(v)) {
            if (depth[v] != 0)
                continue;
            chain.clear();
            int u = v;
            while (u >= 1 && u <= n && mask.contains(u) && depth[u] == 0) {
                depth[u] = -1;
                chain.push_back(u);
                u = parent[u];
            }
            int base = 0;
            if (u >= 1 && u <= n && mask.contains(u)) {
                if (depth[u] == -1)
                    return { false, 0, "parent cycle through vertex " + std::to_string(u) };
                base = depth[u];
            }
            for (auto it = chain.rbegin(); it != chain.rend(); ++it)
                depth[*it] = ++base;
        }

        int max_depth = 0;
        for (int v = mask.min(); v; v = mask.next(v))
            max_depth = std::max(max_depth, depth[v]);

        auto is_ancestor = [&](int a, int d) {
            int u = d;
            while (u >= 1 && u <= n && mask.contains(u)) {
                if (u == a)
                    return true;
                u = parent[u];
            }
            return false;
        };

        for (int u = mask.min(); u; u = mask.next(u)) {
            VertexSet nbrs = g.neighbours_in(u, mask);
            for (int v = nbrs.next(u); v; v = nbrs.next(v))
                if (! is_ancestor(u, v) && ! is_ancestor(v, u))
                    return { false, max_depth, "edge " + describe_edge(u, v) +
                        " joins vertices in unrelated subtrees" };
        }

        return { true, max_depth, std::nullopt };
    }

    auto check_forest(const Graph & g, const std::vector<int> & parent) -> ForestCheckReport
    {
        return check_forest(g, VertexSet::full(g.vertex_count()), parent);
    }

    namespace
    {
        /* The oracle works on a local copy of the induced subgraph with at
         * most brute_force_limit vertices, so subsets fit in a 16-bit mask
         * and results memoise into a flat table. */
        struct BruteForce
        {
            int size;
            std::array<std::uint16_t, brute_force_limit> adjacency{};
            std::vector<std::int8_t> memo;

            explicit BruteForce(const Graph & g, const VertexSet & mask) :
                size(mask.count()),
                memo(std::size_t(1) << size, -1)
            {
                std::vector<int> vertices;
                for (int v = mask.min(); v; v = mask.next(v))
                    vertices.push_back(v);
                for (int i = 0; i < size; ++i)
                    for (int j = i + 1; j < size; ++j)
                        if (g.adjacent(vertices[i], vertices[j])) {
                            adjacency[i] |= std::uint16_t(1) << j;
                            adjacency[j] |= std::uint16_t(1) << i;
                        }
            }

            auto component_of(int seed, std::uint16_t subset) -> std::uint16_t
            {
                std::uint16_t component = 0;
                std::uint16_t frontier = std::uint16_t(1) << seed;
                while (frontier) {
                    component |= frontier;
                    std::uint16_t next = 0;
                    for (std::uint16_t f = frontier; f; f &= f - 1)
                        next |= adjacency[std::countr_zero(f)];
                    frontier = next & subset & ~component;
                }
                return component;
            }

            // treedepth of the (possibly disconnected) subset
            auto depth_of(std::uint16_t subset) -> int
            {
                if (subset == 0)
                    return 0;
                if (memo[subset] >= 0)
                    return memo[subset];
                int result = 0;
                std::uint16_t remaining = subset;
                while (remaining) {
                    std::uint16_t component = component_of(std::countr_zero(remaining), subset);
                    remaining &= ~component;
                    result = std::max(result, connected_depth_of(component));
                }
                memo[subset] = std::int8_t(result);
                return result;
            }

            auto connected_depth_of(std::uint16_t component) -> int
            {
                if (std::has_single_bit(component))
                    return 1;
                int best = size + 1;
                for (std::uint16_t c = component; c; c &= c - 1) {
                    std::uint16_t root = c & (~c + 1);
                    best = std::min(best, 1 + depth_of(component & ~root));
                }
                return best;
            }
        };
    }

    auto brute_force_treedepth(const Graph & g, const VertexSet & mask) -> int
    {
        if (mask.count() > brute_force_limit)
            throw BudgetError{ "brute-force treedepth is limited to " +
                std::to_string(brute_force_limit) + " vertices" };
        BruteForce oracle(g, mask);
        return oracle.depth_of(std::uint16_t((std::uint32_t(1) << oracle.size) - 1));
    }

    auto brute_force_treedepth(const Graph & g) -> int
    {
        return brute_force_treedepth(g, VertexSet::full(g.vertex_count()));
    }
}
