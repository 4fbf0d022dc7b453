#include "graph.hh"
#include "errors.hh"

#include <algorithm>
#include <numeric>

namespace treedepth
{
    Graph::Graph(int n, std::vector<std::uint64_t> adjacency, long long m) :
        n_(n),
        word_count_(bits::words_needed(n)),
        m_(m),
        adjacency_(std::move(adjacency))
    {
    }

    Graph::Builder::Builder(int n) :
        n_(n),
        word_count_(bits::words_needed(n))
    {
        if (n < 0)
            throw ArgumentError{ "vertex count must be non-negative" };
        if (n > max_vertices)
            throw ArgumentError{ "graph has " + std::to_string(n) + " vertices, but at most " +
                std::to_string(max_vertices) + " are supported" };
        adjacency_.assign(std::size_t(n + 1) * word_count_, 0);
    }

    auto Graph::Builder::add_edge(int u, int v) -> Builder &
    {
        if (u < 1 || u > n_ || v < 1 || v > n_)
            throw ArgumentError{ "edge endpoint out of range" };
        if (u == v)
            throw ArgumentError{ "self-loop at vertex " + std::to_string(u) };
        bits::set(adjacency_.data() + std::size_t(u) * word_count_, v);
        bits::set(adjacency_.data() + std::size_t(v) * word_count_, u);
        return *this;
    }

    auto Graph::Builder::build() && -> Graph
    {
        long long degree_sum = 0;
        for (int v = 1; v <= n_; ++v)
            degree_sum += bits::popcount(adjacency_.data() + std::size_t(v) * word_count_, word_count_);
        return Graph{ n_, std::move(adjacency_), degree_sum / 2 };
    }

    auto Graph::neighbours_in(int v, const VertexSet & mask) const -> VertexSet
    {
        VertexSet result(n_);
        bits::intersect(result.data(), neighbourhood_row(v), mask.data(), word_count_);
        return result;
    }

    auto Graph::edges() const -> std::vector<std::pair<int, int>>
    {
        std::vector<std::pair<int, int>> result;
        result.reserve(std::size_t(m_));
        for (int u = 1; u <= n_; ++u) {
            const std::uint64_t * row = neighbourhood_row(u);
            for (int v = bits::next(row, word_count_, u); v; v = bits::next(row, word_count_, v))
                result.emplace_back(u, v);
        }
        return result;
    }

    auto VertexPermutation::identity(int n) -> VertexPermutation
    {
        VertexPermutation p;
        p.forward.resize(n + 1);
        std::iota(p.forward.begin(), p.forward.end(), 0);
        p.inverse = p.forward;
        return p;
    }

    auto max_degree(const Graph & g) -> int
    {
        int best = 0;
        for (int v = 1; v <= g.vertex_count(); ++v)
            best = std::max(best, g.degree(v));
        return best;
    }

    auto connected_components(const Graph & g, const VertexSet & mask) -> std::vector<VertexSet>
    {
        const int w = g.word_count();
        std::vector<VertexSet> result;
        VertexSet remaining = mask;
        VertexSet frontier(g.vertex_count());
        while (int seed = remaining.min()) {
            VertexSet component(g.vertex_count());
            frontier.clear();
            frontier.insert(seed);
            while (! frontier.empty()) {
                bits::unite(component.data(), frontier.data(), w);
                VertexSet next(g.vertex_count());
                for (int v = frontier.min(); v; v = frontier.next(v))
                    bits::unite(next.data(), g.neighbourhood_row(v), w);
                bits::intersect(next.data(), next.data(), remaining.data(), w);
                bits::subtract(next.data(), next.data(), component.data(), w);
                frontier = next;
            }
            bits::subtract(remaining.data(), remaining.data(), component.data(), w);
            result.push_back(std::move(component));
        }
        return result;
    }

    auto is_connected(const Graph & g, const VertexSet & mask) -> bool
    {
        return connected_components(g, mask).size() <= 1;
    }

    auto reorder_by_degree(const Graph & g) -> std::pair<Graph, VertexPermutation>
    {
        const int n = g.vertex_count();
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 1);
        std::stable_sort(order.begin(), order.end(),
                [&](int a, int b) { return g.degree(a) > g.degree(b); });

        VertexPermutation perm;
        perm.forward.assign(n + 1, 0);
        perm.inverse.assign(n + 1, 0);
        for (int new_v = 1; new_v <= n; ++new_v) {
            perm.forward[order[new_v - 1]] = new_v;
            perm.inverse[new_v] = order[new_v - 1];
        }
        return { apply_permutation(g, perm), std::move(perm) };
    }

    auto apply_permutation(const Graph & g, const VertexPermutation & perm) -> Graph
    {
        Graph::Builder builder(g.vertex_count());
        for (auto & [u, v] : g.edges())
            builder.add_edge(perm.forward[u], perm.forward[v]);
        return std::move(builder).build();
    }
}
