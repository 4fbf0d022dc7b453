#ifndef TREEDEPTH_BOUNDS_HH
#define TREEDEPTH_BOUNDS_HH

#include "graph.hh"

#include <cstdint>
#include <vector>

namespace treedepth
{
    /// Ceiling of log2(x) for x >= 1.
    auto ceil_log2(long long x) -> int;

    /// Treedepth lower bounds from component size alone, given an upper
    /// bound b on the maximum degree: bound(0) = 0 and
    /// bound(n) = 1 + bound(ceil((n-1)/b)). Values are precomputed for
    /// n = 0..n_max so lookups are constant time.
    class SimpleBoundTable
    {
    private:
        int degree_bound_;
        std::vector<int> table_;

        SimpleBoundTable(int degree_bound, std::vector<int> table);

    public:
        /// Requires b >= 1; callers must skip this bound entirely when the
        /// maximum degree is 0.
        static auto build(int degree_bound, int n_max) -> SimpleBoundTable;

        auto degree_bound() const -> int { return degree_bound_; }
        auto n_max() const -> int { return int(table_.size()) - 1; }
        auto value(int n) const -> int { return table_[n]; }
        auto prunes(int component_size, int k) const -> bool { return table_[component_size] > k; }
    };

    /// Reusable buffers for the greedy path computation, so the solver's hot
    /// path performs no allocation.
    struct PathBoundScratch
    {
        std::vector<std::uint64_t> on_path;
        std::vector<std::uint64_t> candidates;
        std::vector<int> forward;
        std::vector<int> backward;
        std::vector<int> path;

        explicit PathBoundScratch(const Graph & g);
    };

    /// The greedy path used by the path lower bound: start at min(mask),
    /// grow forwards then backwards from the start, always taking the least
    /// unvisited neighbour. The result (in path order) lives in scratch.path.
    /// Requires g[mask] connected and non-empty.
    auto greedy_path(const Graph & g, const std::uint64_t * mask, PathBoundScratch & scratch)
            -> const std::vector<int> &;

    auto greedy_path(const Graph & g, const VertexSet & mask) -> std::vector<int>;

    /// True when the greedy path proves treedepth(g[mask]) > target_depth,
    /// either via the path bound ceil(log2(|P|+1)) or, for paths of three or
    /// more vertices, via a chord (v,w) of the path giving the cycle bound
    /// 1 + ceil(log2(c)) where c is the number of path vertices from v to w.
    auto can_prune_by_path_lower_bound(const Graph & g, const std::uint64_t * mask, int target_depth,
            PathBoundScratch & scratch) -> bool;

    auto can_prune_by_path_lower_bound(const Graph & g, const VertexSet & mask, int target_depth) -> bool;
}

#endif
