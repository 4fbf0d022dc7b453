#ifndef TREEDEPTH_TESTS_FIXTURES_HH
#define TREEDEPTH_TESTS_FIXTURES_HH

#include "graph.hh"

#include <initializer_list>
#include <utility>

namespace treedepth::tests
{
    inline auto graph_from_edges(int n, std::initializer_list<std::pair<int, int>> edges) -> Graph
    {
        Graph::Builder builder(n);
        for (auto & [u, v] : edges)
            builder.add_edge(u, v);
        return std::move(builder).build();
    }

    /// Nine vertices: squares 1-2-7-6 and 3-4-9-8, with hub 5 adjacent to
    /// 2, 7, 3 and 8. Treedepth 4; an optimal tree roots at 5.
    inline auto two_squares_with_hub() -> Graph
    {
        return graph_from_edges(9, {
            { 1, 2 }, { 3, 4 }, { 6, 7 }, { 8, 9 },
            { 1, 6 }, { 2, 7 }, { 3, 8 }, { 4, 9 },
            { 2, 5 }, { 3, 5 }, { 5, 7 }, { 5, 8 },
        });
    }

    /// The perfect binary tree on seven vertices, rooted at 7: leaves 1, 2
    /// under 5 and leaves 3, 4 under 6. Treedepth 3, maximum degree 3.
    inline auto perfect_binary_tree_7() -> Graph
    {
        return graph_from_edges(7, {
            { 1, 5 }, { 2, 5 }, { 3, 6 }, { 4, 6 }, { 5, 7 }, { 6, 7 },
        });
    }

    /// K_{2,3} with the hubs numbered last: parts {4, 5} and {1, 2, 3}.
    /// Only the hubs can root an optimal (depth 3) elimination tree, and
    /// removing any vertex leaves a connected graph; this labelling is the
    /// stress case for the only-child rule.
    inline auto k23_hubs_last() -> Graph
    {
        return graph_from_edges(5, {
            { 1, 4 }, { 2, 4 }, { 3, 4 },
            { 1, 5 }, { 2, 5 }, { 3, 5 },
        });
    }

    /// Petersen graph: outer cycle 1..5, spokes to 6..10, inner pentagram.
    inline auto petersen() -> Graph
    {
        return graph_from_edges(10, {
            { 1, 2 }, { 2, 3 }, { 3, 4 }, { 4, 5 }, { 5, 1 },
            { 1, 6 }, { 2, 7 }, { 3, 8 }, { 4, 9 }, { 5, 10 },
            { 6, 8 }, { 8, 10 }, { 10, 7 }, { 7, 9 }, { 9, 6 },
        });
    }
}

#endif
