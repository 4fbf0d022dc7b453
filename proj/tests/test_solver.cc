#include "fixtures.hh"
#include "generate.hh"
#include "solver.hh"
#include "verify.hh"

#include "doctest.h"

#include <random>

using namespace treedepth;
using tests::graph_from_edges;
using tests::k23_hubs_last;
using tests::two_squares_with_hub;

namespace
{
    auto config_from_bits(unsigned bits) -> SolverConfig
    {
        SolverConfig config;
        config.use_lower_bounds = bits & 1;
        config.use_orbit_symmetry = bits & 2;
        config.use_domination = bits & 4;
        config.use_only_child = bits & 8;
        config.use_degree_order = bits & 16;
        return config;
    }

    auto check_result(const Graph & g, const SolveResult & result, int expected) -> void
    {
        REQUIRE(result.status == SolveStatus::solved);
        CHECK(result.treedepth == expected);
        auto report = check_forest(g, result.forest.parent);
        CHECK(report.valid);
        CHECK(report.depth == result.treedepth);
        CHECK(result.forest.depth() == result.treedepth);
        CHECK(result.stats.peak_live_components <= g.vertex_count());
    }
}

TEST_CASE("solve on the running examples")
{
    SUBCASE("empty graph")
    {
        auto result = solve(Graph::Builder(0).build());
        REQUIRE(result.status == SolveStatus::solved);
        CHECK(result.treedepth == 0);
        CHECK(result.forest.parent.size() == 1);
    }

    SUBCASE("single vertex")
    {
        auto result = solve(generate_path(1));
        check_result(generate_path(1), result, 1);
        CHECK(result.forest.parent[1] == 0);
    }

    SUBCASE("hub example has treedepth 4")
    {
        auto g = two_squares_with_hub();
        check_result(g, solve(g), 4);
    }

    SUBCASE("petersen graph has treedepth 6")
    {
        auto g = tests::petersen();
        check_result(g, solve(g), 6);
    }

    SUBCASE("fifty-cycle has treedepth 7")
    {
        auto g = generate_cycle(50);
        check_result(g, solve(g), 7);
    }

    SUBCASE("thirty-clique has treedepth 30")
    {
        auto g = generate_clique(30);
        check_result(g, solve(g), 30);
    }

    SUBCASE("disconnected graphs take the worst component")
    {
        // a 4-clique next to an isolated edge
        auto g = graph_from_edges(6, {
            { 1, 2 }, { 1, 3 }, { 1, 4 }, { 2, 3 }, { 2, 4 }, { 3, 4 }, { 5, 6 } });
        check_result(g, solve(g), 4);
    }
}

TEST_CASE("decision procedure on induced subgraphs")
{
    auto g = two_squares_with_hub();

    SUBCASE("empty mask is feasible at depth zero")
    {
        auto outcome = decide_depth(g, VertexSet(9), 0);
        CHECK(outcome.feasible);
    }

    SUBCASE("non-empty mask is infeasible at depth zero")
    {
        auto outcome = decide_depth(g, VertexSet::full(9), 0);
        CHECK_FALSE(outcome.feasible);
    }

    SUBCASE("removing the hub leaves two components solvable at depth 3")
    {
        VertexSet mask = VertexSet::full(9);
        mask.remove(5);
        auto outcome = decide_depth(g, mask, 3);
        CHECK(outcome.feasible);
        auto report = check_forest(g, mask, outcome.parent);
        CHECK(report.valid);
        CHECK(report.depth <= 3);
        CHECK_FALSE(decide_depth(g, mask, 2).feasible);
    }

    SUBCASE("the path bound rejects depth 3 before any search node")
    {
        auto outcome = decide_depth(g, VertexSet::full(9), 3);
        CHECK_FALSE(outcome.feasible);
        CHECK(outcome.stats.nodes == 0);
        CHECK(outcome.stats.prunes_path_bound == 1);
        CHECK(outcome.stats.prunes_simple_bound == 0);
    }

    SUBCASE("depths 1 and 2 fall to the simple bound")
    {
        for (int k : { 1, 2 }) {
            auto outcome = decide_depth(g, VertexSet::full(9), k);
            CHECK_FALSE(outcome.feasible);
            CHECK(outcome.stats.nodes == 0);
            CHECK(outcome.stats.prunes_simple_bound == 1);
        }
    }

    SUBCASE("feasibility is monotone in the depth budget")
    {
        std::mt19937_64 rng(37);
        for (int trial = 0; trial < 40; ++trial) {
            int n = 1 + int(rng() % 8);
            auto h = generate_gnp(n, 0.1 + 0.1 * (trial % 9), rng());
            int truth = brute_force_treedepth(h);
            auto full = VertexSet::full(n);
            for (int k = 0; k <= n + 1; ++k)
                CHECK(decide_depth(h, full, k).feasible == (k >= truth));
        }
    }
}

TEST_CASE("oracle equivalence across every feature combination")
{
    std::vector<Graph> corpus;
    corpus.push_back(k23_hubs_last());
    corpus.push_back(two_squares_with_hub().vertex_count() <= 8
            ? two_squares_with_hub() : tests::perfect_binary_tree_7());
    for (int n = 1; n <= 8; n += 2) {
        corpus.push_back(generate_path(n));
        corpus.push_back(generate_clique(n));
    }
    corpus.push_back(generate_cycle(6));
    corpus.push_back(generate_complete_bipartite(7));
    corpus.push_back(generate_binary_tree(8));
    corpus.push_back(generate_square_grid(2));
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 60; ++trial)
        corpus.push_back(generate_gnp(3 + trial % 6, 0.1 + 0.1 * (trial % 9), rng()));

    for (auto & g : corpus) {
        const int truth = brute_force_treedepth(g);
        for (unsigned bits = 0; bits < 32; ++bits) {
            auto result = solve(g, config_from_bits(bits));
            REQUIRE(result.status == SolveStatus::solved);
            CHECK(result.treedepth == truth);
            auto report = check_forest(g, result.forest.parent);
            CHECK(report.valid);
            CHECK(report.depth == truth);
            CHECK(result.stats.peak_live_components <= g.vertex_count());
        }
    }
}

TEST_CASE("relabelled bipartite hubs stress the only-child rule")
{
    // every optimal root of K_{2,3} leaves a connected remainder, so a
    // too-eager only-child filter returns 4 instead of 3 here
    auto g = k23_hubs_last();
    for (unsigned bits = 0; bits < 32; ++bits)
        CHECK(solve(g, config_from_bits(bits)).treedepth == 3);
}

TEST_CASE("resource limits abort with a sound lower bound")
{
    SUBCASE("node limit")
    {
        SolverConfig config;
        config.use_domination = false;
        config.use_orbit_symmetry = false;
        config.node_limit = 50;
        auto result = solve(generate_clique(25), config);
        REQUIRE(result.status == SolveStatus::node_limit_reached);
        CHECK(result.lower_bound >= 1);
        CHECK(result.lower_bound <= 25);
    }

    SUBCASE("time limit")
    {
        SolverConfig config;
        config.use_domination = false;
        config.use_orbit_symmetry = false;
        config.use_lower_bounds = false;
        config.time_limit_seconds = 0.05;
        auto result = solve(generate_clique(40), config);
        REQUIRE(result.status == SolveStatus::timed_out);
        CHECK(result.lower_bound <= 40);
    }
}

TEST_CASE("statistics reflect the enabled features")
{
    auto g = tests::petersen();

    SolverConfig plain;
    plain.use_orbit_symmetry = false;
    plain.use_domination = false;
    plain.use_only_child = false;
    plain.use_lower_bounds = false;
    auto base = solve(g, plain);

    auto all = solve(g);
    CHECK(all.treedepth == base.treedepth);
    CHECK(all.stats.nodes < base.stats.nodes);
    CHECK(base.stats.skips_orbit == 0);
    CHECK(base.stats.skips_domination == 0);
    CHECK(base.stats.skips_only_child == 0);
    CHECK(base.stats.prunes_simple_bound == 0);
    CHECK(base.stats.prunes_path_bound == 0);
    CHECK(all.stats.skips_orbit > 0);
    CHECK(all.stats.orbits_exact);
}
