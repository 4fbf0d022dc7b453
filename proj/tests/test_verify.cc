#include "fixtures.hh"
#include "errors.hh"
#include "generate.hh"
#include "verify.hh"

#include "doctest.h"

#include <random>

using namespace treedepth;
using tests::graph_from_edges;
using tests::two_squares_with_hub;

TEST_CASE("forest checking")
{
    auto g = two_squares_with_hub();

    SUBCASE("the optimal tree of the hub example is valid with depth 4")
    {
        // root 5; children 1 and 3; 1 over 7 over {2,6}; 3 over 9 over {8,4}
        std::vector<int> parent{ 0, 5, 7, 5, 9, 0, 7, 1, 9, 3 };
        auto report = check_forest(g, parent);
        CHECK(report.valid);
        CHECK(report.depth == 4);
        CHECK_FALSE(report.violation.has_value());
    }

    SUBCASE("the identity forest fails on any graph with an edge")
    {
        std::vector<int> parent(10, 0);
        auto report = check_forest(g, parent);
        CHECK_FALSE(report.valid);
        CHECK(report.violation.has_value());
    }

    SUBCASE("a star decomposes with its centre as root")
    {
        auto star = graph_from_edges(4, { { 1, 2 }, { 1, 3 }, { 1, 4 } });
        std::vector<int> parent{ 0, 0, 1, 1, 1 };
        auto report = check_forest(star, parent);
        CHECK(report.valid);
        CHECK(report.depth == 2);
    }

    SUBCASE("out-of-range parents are flagged")
    {
        std::vector<int> parent{ 0, 99, 0, 0, 0, 0, 0, 0, 0, 0 };
        auto report = check_forest(g, parent);
        CHECK_FALSE(report.valid);
        CHECK(report.violation.value().find("out of range") != std::string::npos);
    }

    SUBCASE("parent cycles are flagged")
    {
        auto path = generate_path(3);
        std::vector<int> parent{ 0, 2, 1, 2 };
        auto report = check_forest(path, parent);
        CHECK_FALSE(report.valid);
        CHECK(report.violation.value().find("cycle") != std::string::npos);
    }

    SUBCASE("subproblem forests treat parents outside the mask as roots")
    {
        VertexSet mask(9);
        for (int v : { 1, 2, 6, 7 })
            mask.insert(v);
        // 1 over 7 over {2, 6}, with 1 parented to the removed hub
        std::vector<int> parent{ 0, 5, 7, 0, 0, 0, 7, 1, 0, 0 };
        auto report = check_forest(g, mask, parent);
        CHECK(report.valid);
        CHECK(report.depth == 3);
    }

    SUBCASE("the empty graph checks out")
    {
        auto report = check_forest(Graph::Builder(0).build(), std::vector<int>{ 0 });
        CHECK(report.valid);
        CHECK(report.depth == 0);
    }
}

TEST_CASE("brute force oracle")
{
    SUBCASE("paths match the closed form")
    {
        // treedepth of an n-vertex path is the least d with 2^d >= n + 1
        for (int n = 1; n <= 14; ++n) {
            int d = 0;
            while ((1 << d) < n + 1)
                ++d;
            CHECK(brute_force_treedepth(generate_path(n)) == d);
        }
    }

    SUBCASE("base cases")
    {
        CHECK(brute_force_treedepth(Graph::Builder(0).build()) == 0);
        CHECK(brute_force_treedepth(generate_path(1)) == 1);
        auto g = generate_path(5);
        CHECK(brute_force_treedepth(g, VertexSet(5)) == 0);
    }

    SUBCASE("known small values")
    {
        CHECK(brute_force_treedepth(two_squares_with_hub()) == 4);
        CHECK(brute_force_treedepth(tests::perfect_binary_tree_7()) == 3);
        CHECK(brute_force_treedepth(tests::petersen()) == 6);
        CHECK(brute_force_treedepth(generate_clique(8)) == 8);
        CHECK(brute_force_treedepth(generate_cycle(10)) == 5);
        CHECK(brute_force_treedepth(tests::k23_hubs_last()) == 3);
    }

    SUBCASE("the budget is enforced")
    {
        CHECK_THROWS_AS(brute_force_treedepth(generate_path(15)), BudgetError);
    }

    SUBCASE("mutating one parent of an optimal forest never drops below the treedepth")
    {
        std::mt19937_64 rng(13);
        auto g = two_squares_with_hub();
        std::vector<int> parent{ 0, 5, 7, 5, 9, 0, 7, 1, 9, 3 };
        const int treedepth = 4;
        for (int v = 1; v <= 9; ++v)
            for (int p = 0; p <= 9; ++p) {
                if (p == parent[v] || p == v)
                    continue;
                auto mutated = parent;
                mutated[v] = p;
                auto report = check_forest(g, mutated);
                if (report.valid)
                    CHECK(report.depth >= treedepth);
            }
        (void) rng;
    }
}
