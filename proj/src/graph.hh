#ifndef TREEDEPTH_GRAPH_HH
#define TREEDEPTH_GRAPH_HH

#include "bitset.hh"

#include <cstdint>
#include <utility>
#include <vector>

namespace treedepth
{
    /// Instances above this size are rejected at construction time.
    constexpr int max_vertices = 1024;

    /// An immutable simple graph over vertices 1..n, stored as a bit matrix
    /// of neighbourhood rows. Induced subgraphs are never materialised;
    /// operations take the graph together with a VertexSet.
    class Graph
    {
    private:
        int n_ = 0;
        int word_count_ = 1;
        long long m_ = 0;
        std::vector<std::uint64_t> adjacency_;

        Graph(int n, std::vector<std::uint64_t> adjacency, long long m);

    public:
        /// Accumulates edges, then validates and freezes them into a Graph.
        class Builder
        {
        private:
            int n_;
            int word_count_;
            std::vector<std::uint64_t> adjacency_;

        public:
            explicit Builder(int n);

            /// Rejects self-loops and out-of-range endpoints; duplicate
            /// edges collapse silently.
            auto add_edge(int u, int v) -> Builder &;

            auto build() && -> Graph;
        };

        Graph() = default;

        auto vertex_count() const -> int { return n_; }
        auto edge_count() const -> long long { return m_; }
        auto word_count() const -> int { return word_count_; }

        auto adjacent(int u, int v) const -> bool
        {
            return bits::test(neighbourhood_row(u), v);
        }

        /// Raw word span of v's neighbourhood row.
        auto neighbourhood_row(int v) const -> const std::uint64_t *
        {
            return adjacency_.data() + std::size_t(v) * word_count_;
        }

        auto degree(int v) const -> int
        {
            return bits::popcount(neighbourhood_row(v), word_count_);
        }

        /// v's neighbours within the given set.
        auto neighbours_in(int v, const VertexSet & mask) const -> VertexSet;

        /// All edges as (u, v) pairs with u < v, in ascending order.
        auto edges() const -> std::vector<std::pair<int, int>>;
    };

    /// A relabelling of 1..n; forward maps old numbers to new ones.
    struct VertexPermutation
    {
        std::vector<int> forward;
        std::vector<int> inverse;

        static auto identity(int n) -> VertexPermutation;
    };

    auto max_degree(const Graph & g) -> int;

    /// Maximal connected vertex sets of g[mask], in ascending order of
    /// minimum vertex. An empty mask yields an empty list.
    auto connected_components(const Graph & g, const VertexSet & mask) -> std::vector<VertexSet>;

    auto is_connected(const Graph & g, const VertexSet & mask) -> bool;

    /// Renumber by non-increasing degree, ties broken by ascending original
    /// number. The result is isomorphic to g under the returned permutation.
    auto reorder_by_degree(const Graph & g) -> std::pair<Graph, VertexPermutation>;

    /// Apply a permutation: vertex v of g becomes perm.forward[v].
    auto apply_permutation(const Graph & g, const VertexPermutation & perm) -> Graph;
}

#endif
