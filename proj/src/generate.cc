#include "generate.hh"
#include "errors.hh"

#include <random>

namespace treedepth
{
    namespace
    {
        auto require_size(int n, const char * what) -> void
        {
            if (n < 1)
                throw ArgumentError{ std::string(what) + " must be at least 1" };
        }
    }

    auto generate_path(int n) -> Graph
    {
        require_size(n, "path length");
        Graph::Builder builder(n);
        for (int v = 1; v < n; ++v)
            builder.add_edge(v, v + 1);
        return std::move(builder).build();
    }

    auto generate_cycle(int n) -> Graph
    {
        require_size(n, "cycle length");
        Graph::Builder builder(n);
        for (int v = 1; v < n; ++v)
            builder.add_edge(v, v + 1);
        if (n > 2)
            builder.add_edge(n, 1);
        else if (n == 2)
            builder.add_edge(1, 2);
        return std::move(builder).build();
    }

    auto generate_clique(int n) -> Graph
    {
        require_size(n, "clique size");
        Graph::Builder builder(n);
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v)
                builder.add_edge(u, v);
        return std::move(builder).build();
    }

    auto generate_complete_bipartite(int n) -> Graph
    {
        require_size(n, "vertex count");
        int left = n / 2;
        Graph::Builder builder(n);
        for (int u = 1; u <= left; ++u)
            for (int v = left + 1; v <= n; ++v)
                builder.add_edge(u, v);
        return std::move(builder).build();
    }

    auto generate_binary_tree(int n) -> Graph
    {
        require_size(n, "vertex count");
        Graph::Builder builder(n);
        for (int v = 2; v <= n; ++v)
            builder.add_edge(v / 2, v);
        return std::move(builder).build();
    }

    auto generate_square_grid(int side) -> Graph
    {
        require_size(side, "grid side");
        if (side > 32)
            throw ArgumentError{ "grid side too large" };
        Graph::Builder builder(side * side);
        auto at = [side](int row, int col) { return row * side + col + 1; };
        for (int row = 0; row < side; ++row)
            for (int col = 0; col < side; ++col) {
                if (col + 1 < side)
                    builder.add_edge(at(row, col), at(row, col + 1));
                if (row + 1 < side)
                    builder.add_edge(at(row, col), at(row + 1, col));
            }
        return std::move(builder).build();
    }

    auto generate_gnp(int n, double p, std::uint64_t seed) -> Graph
    {
        require_size(n, "vertex count");
        if (! (p >= 0.0 && p <= 1.0))
            throw ArgumentError{ "edge probability must lie in [0, 1]" };
        std::mt19937_64 rng(seed);
        Graph::Builder builder(n);
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v) {
                // 53-bit uniform in [0, 1); avoids distribution classes whose
                // output is not pinned down by the standard
                double draw = double(rng() >> 11) * 0x1.0p-53;
                if (draw < p)
                    builder.add_edge(u, v);
            }
        return std::move(builder).build();
    }
}
