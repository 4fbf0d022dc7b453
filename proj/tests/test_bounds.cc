#include "fixtures.hh"
#include "bounds.hh"
#include "errors.hh"
#include "generate.hh"
#include "verify.hh"

#include "doctest.h"

#include <random>
#include <set>

using namespace treedepth;
using tests::perfect_binary_tree_7;
using tests::two_squares_with_hub;

TEST_CASE("simple bound table")
{
    SUBCASE("degree bound 4 gives 3 for nine vertices")
    {
        auto table = SimpleBoundTable::build(4, 9);
        CHECK(table.value(9) == 3);
        CHECK(table.value(0) == 0);
        CHECK(table.value(1) == 1);
    }

    SUBCASE("degree bound 1 collapses to the identity")
    {
        auto table = SimpleBoundTable::build(1, 20);
        for (int n = 0; n <= 20; ++n)
            CHECK(table.value(n) == n);
    }

    SUBCASE("the recurrence holds and the table is non-decreasing")
    {
        for (int b = 1; b <= 6; ++b) {
            auto table = SimpleBoundTable::build(b, 64);
            for (int n = 1; n <= 64; ++n) {
                CHECK(table.value(n) == 1 + table.value((n - 1 + b - 1) / b));
                CHECK(table.value(n) >= table.value(n - 1));
            }
        }
    }

    SUBCASE("pruning decisions")
    {
        auto table = SimpleBoundTable::build(4, 9);
        CHECK(table.prunes(9, 2));
        CHECK_FALSE(table.prunes(9, 3));
        CHECK_FALSE(table.prunes(0, 0));
    }

    SUBCASE("a zero degree bound is rejected")
    {
        CHECK_THROWS_AS(SimpleBoundTable::build(0, 5), ArgumentError);
    }
}

TEST_CASE("greedy path")
{
    SUBCASE("hub example covers all nine vertices in the documented order")
    {
        auto g = two_squares_with_hub();
        auto path = greedy_path(g, VertexSet::full(9));
        CHECK(path == std::vector<int>{ 7, 6, 1, 2, 5, 3, 4, 9, 8 });
    }

    SUBCASE("the binary tree stops after three vertices")
    {
        auto path = greedy_path(perfect_binary_tree_7(), VertexSet::full(7));
        CHECK(path == std::vector<int>{ 1, 5, 2 });
    }

    SUBCASE("the path is a genuine induced-subgraph path")
    {
        std::mt19937_64 rng(3);
        for (int trial = 0; trial < 60; ++trial) {
            auto g = generate_gnp(14, 0.15 + 0.1 * (trial % 8), rng());
            auto components = connected_components(g, VertexSet::full(14));
            for (auto & component : components) {
                auto path = greedy_path(g, component);
                CHECK_FALSE(path.empty());
                std::set<int> distinct(path.begin(), path.end());
                CHECK(distinct.size() == path.size());
                for (int v : path)
                    CHECK(component.contains(v));
                for (std::size_t i = 1; i < path.size(); ++i)
                    CHECK(g.adjacent(path[i - 1], path[i]));
            }
        }
    }
}

TEST_CASE("path lower bound")
{
    SUBCASE("hub example prunes target 3 but not target 4")
    {
        auto g = two_squares_with_hub();
        CHECK(can_prune_by_path_lower_bound(g, VertexSet::full(9), 3));
        CHECK_FALSE(can_prune_by_path_lower_bound(g, VertexSet::full(9), 4));
    }

    SUBCASE("binary tree gets only a weak bound")
    {
        auto g = perfect_binary_tree_7();
        CHECK_FALSE(can_prune_by_path_lower_bound(g, VertexSet::full(7), 2));
        CHECK(can_prune_by_path_lower_bound(g, VertexSet::full(7), 1));
    }

    SUBCASE("single vertex")
    {
        auto g = generate_path(1);
        CHECK(can_prune_by_path_lower_bound(g, VertexSet::full(1), 0));
        CHECK_FALSE(can_prune_by_path_lower_bound(g, VertexSet::full(1), 1));
    }

    SUBCASE("chords sharpen the bound on a chorded cycle")
    {
        // C8 plus one long chord: the greedy path walks 1..8, the chord
        // {1,8} closes an 8-cycle, so the bound improves to 1 + log2(8) = 4
        Graph::Builder builder(8);
        for (int v = 1; v < 8; ++v)
            builder.add_edge(v, v + 1);
        builder.add_edge(8, 1);
        auto g = std::move(builder).build();
        CHECK(ceil_log2(8 + 1) == 4);
        CHECK(can_prune_by_path_lower_bound(g, VertexSet::full(8), 3));
        CHECK_FALSE(can_prune_by_path_lower_bound(g, VertexSet::full(8), 4));
    }
}

TEST_CASE("neither bound dominates the other")
{
    auto hub = two_squares_with_hub();
    auto tree = perfect_binary_tree_7();

    // hub example: path bound 4 beats simple bound 3
    auto hub_table = SimpleBoundTable::build(max_degree(hub), 9);
    CHECK(hub_table.value(9) == 3);
    CHECK(can_prune_by_path_lower_bound(hub, VertexSet::full(9), 3));

    // binary tree: simple bound 3 beats path bound 2
    auto tree_table = SimpleBoundTable::build(max_degree(tree), 7);
    CHECK(tree_table.value(7) == 3);
    CHECK_FALSE(can_prune_by_path_lower_bound(tree, VertexSet::full(7), 2));
}

TEST_CASE("bound soundness against the oracle")
{
    std::mt19937_64 rng(17);
    int connected_cases = 0;
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + int(rng() % 7);
        auto g = generate_gnp(n, 0.1 + 0.1 * (trial % 9), rng());
        auto full = VertexSet::full(n);
        int truth = brute_force_treedepth(g);

        int b = max_degree(g);
        if (b >= 1) {
            auto table = SimpleBoundTable::build(b, n);
            for (auto & component : connected_components(g, full))
                CHECK(table.value(component.count()) <= brute_force_treedepth(g, component));
        }
        if (is_connected(g, full) && n >= 1) {
            ++connected_cases;
            // the implied bound is the smallest target the function refuses
            // to prune; it must never exceed the true treedepth
            int implied = 0;
            while (can_prune_by_path_lower_bound(g, full, implied))
                ++implied;
            CHECK(implied <= truth);
        }
    }
    CHECK(connected_cases > 20);
}
