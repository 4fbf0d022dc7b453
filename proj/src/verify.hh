#ifndef TREEDEPTH_VERIFY_HH
#define TREEDEPTH_VERIFY_HH

#include "graph.hh"

#include <optional>
#include <string>
#include <vector>

namespace treedepth
{
    struct ForestCheckReport
    {
        bool valid = false;
        int depth = 0;
        std::optional<std::string> violation;
    };

    /// Check a parent array (indices 1..n, entry 0 meaning root) against g:
    /// the parent relation must be acyclic and every edge of g must join an
    /// ancestor-descendant pair. Depth counts vertices along a root path.
    auto check_forest(const Graph & g, const std::vector<int> & parent) -> ForestCheckReport;

    /// Same check restricted to g[mask]: any parent value outside mask is
    /// treated as a root of the subproblem's decomposition.
    auto check_forest(const Graph & g, const VertexSet & mask, const std::vector<int> & parent)
            -> ForestCheckReport;

    /// Hard cap on the oracle's input size.
    constexpr int brute_force_limit = 14;

    /// Exact treedepth of g[mask] by exhaustive recursion over root choices,
    /// memoised on the vertex subset. Refuses masks larger than
    /// brute_force_limit with BudgetError. Implemented independently of the
    /// solver so it can serve as an oracle for it.
    auto brute_force_treedepth(const Graph & g, const VertexSet & mask) -> int;

    auto brute_force_treedepth(const Graph & g) -> int;
}

#endif
