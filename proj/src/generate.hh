#ifndef TREEDEPTH_GENERATE_HH
#define TREEDEPTH_GENERATE_HH

#include "graph.hh"

#include <cstdint>

namespace treedepth
{
    /* Deterministic instance families. Sizes must be at least 1; invalid
     * parameters raise ArgumentError. */

    auto generate_path(int n) -> Graph;
    auto generate_cycle(int n) -> Graph;
    auto generate_clique(int n) -> Graph;

    /// Balanced complete bipartite graph on n vertices: parts 1..floor(n/2)
    /// and the rest.
    auto generate_complete_bipartite(int n) -> Graph;

    /// Heap-shaped binary tree: vertex v has children 2v and 2v+1 when they
    /// are at most n.
    auto generate_binary_tree(int n) -> Graph;

    /// side*side grid, numbered row-major.
    auto generate_square_grid(int side) -> Graph;

    /// Erdos-Renyi G(n,p). Each of the C(n,2) pairs, visited in row-major
    /// order (1,2), (1,3), ..., is included independently with probability p.
    /// Driven by std::mt19937_64 seeded with `seed`, drawing one 53-bit
    /// uniform per pair, so instances are reproducible byte-for-byte across
    /// platforms for a given (n, p, seed).
    auto generate_gnp(int n, double p, std::uint64_t seed) -> Graph;
}

#endif
