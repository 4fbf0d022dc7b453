#ifndef TREEDEPTH_SYMMETRY_HH
#define TREEDEPTH_SYMMETRY_HH

#include "graph.hh"

#include <cstdint>
#include <vector>

namespace treedepth
{
    /// Vertex orbits of the automorphism group. orbit[v] is the minimum
    /// vertex of v's orbit, so orbit[orbit[v]] == orbit[v] and orbit[v] <= v.
    /// When the search exceeds its node budget the labels fall back to
    /// singletons and exact is false; that disables the optimisation but
    /// never makes it unsound.
    struct OrbitLabels
    {
        std::vector<int> orbit;
        bool exact = true;

        static auto singletons(int n) -> OrbitLabels;
    };

    constexpr long long default_orbit_node_budget = 1'000'000;

    auto vertex_orbits(const Graph & g, long long node_budget = default_orbit_node_budget) -> OrbitLabels;

    /// As vertex_orbits, but also returns one verified automorphism per
    /// successful orbit merge (each maps a representative to a later member;
    /// index 1..n, entry 0 unused).
    auto vertex_orbits_with_witnesses(const Graph & g, std::vector<std::vector<int>> & witnesses,
            long long node_budget = default_orbit_node_budget) -> OrbitLabels;

    /// Word-level core of the domination rule: does candidate's masked
    /// neighbourhood, less {dominator}, lie inside dominator's? Both rows
    /// come from the same graph as mask.
    inline auto dominates(const std::uint64_t * dominator_row, const std::uint64_t * candidate_row,
            const std::uint64_t * mask, int dominator, int word_count) -> bool
    {
        for (int i = 0; i < word_count; ++i) {
            std::uint64_t diff = candidate_row[i] & mask[i] & ~dominator_row[i];
            if ((dominator >> 6) == i)
                diff &= ~(std::uint64_t{1} << (dominator & 63));
            if (diff)
                return false;
        }
        return true;
    }

    struct RootCandidateConfig
    {
        bool use_orbit_symmetry = true;
        bool use_domination = true;
        bool use_only_child = true;
    };

    /// The vertices of mask that survive the root filters, ascending:
    ///   - orbit rule, at the root level only: drop v when an earlier member
    ///     of mask shares its orbit;
    ///   - domination, at every level: drop v when some earlier member of
    ///     mask dominates it;
    ///   - only-child rule, at every level: when this subproblem is the sole
    ///     component left by removing only_child_parent, drop every v below
    ///     that parent (a tree rooted there would make v an only child, and
    ///     swapping them shows some earlier root choice already covered it).
    /// only_child_parent is 0 when the context does not apply.
    auto root_candidates(const Graph & g, const VertexSet & mask, bool is_root_level,
            int only_child_parent, const OrbitLabels & orbits, const RootCandidateConfig & config)
            -> std::vector<int>;
}

#endif
