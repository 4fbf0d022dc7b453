#include "bounds.hh"
#include "errors.hh"

#include <algorithm>
#include <bit>

namespace treedepth
{
    auto ceil_log2(long long x) -> int
    {
        return std::bit_width(std::uint64_t(x) - 1);
    }

    SimpleBoundTable::SimpleBoundTable(int degree_bound, std::vector<int> table) :
        degree_bound_(degree_bound),
        table_(std::move(table))
    {
    }

    auto SimpleBoundTable::build(int degree_bound, int n_max) -> SimpleBoundTable
    {
        if (degree_bound < 1)
            throw ArgumentError{ "degree bound must be at least 1" };
        std::vector<int> table(n_max + 1, 0);
        for (int n = 1; n <= n_max; ++n)
            table[n] = 1 + table[(n - 1 + degree_bound - 1) / degree_bound];
        return SimpleBoundTable{ degree_bound, std::move(table) };
    }

    PathBoundScratch::PathBoundScratch(const Graph & g) :
        on_path(g.word_count(), 0),
        candidates(g.word_count(), 0)
    {
        forward.reserve(g.vertex_count());
        backward.reserve(g.vertex_count());
        path.reserve(g.vertex_count());
    }

    auto greedy_path(const Graph & g, const std::uint64_t * mask, PathBoundScratch & scratch)
            -> const std::vector<int> &
    {
        const int w = g.word_count();
        const int start = bits::first(mask, w);
        if (start == 0)
            throw ArgumentError{ "greedy path needs a non-empty vertex set" };

        bits::clear(scratch.on_path.data(), w);
        bits::set(scratch.on_path.data(), start);
        scratch.forward.assign(1, start);
        scratch.backward.clear();

        // grow from the start twice: first extending forwards, then
        // returning to the start and prepending
        for (int phase = 0; phase < 2; ++phase) {
            int u = start;
            while (true) {
                bits::intersect(scratch.candidates.data(), g.neighbourhood_row(u), mask, w);
                bits::subtract(scratch.candidates.data(), scratch.candidates.data(), scratch.on_path.data(), w);
                int least = bits::first(scratch.candidates.data(), w);
                if (least == 0)
                    break;
                bits::set(scratch.on_path.data(), least);
                (phase == 0 ? scratch.forward : scratch.backward).push_back(least);
                u = least;
            }
        }

        scratch.path.assign(scratch.backward.rbegin(), scratch.backward.rend());
        scratch.path.insert(scratch.path.end(), scratch.forward.begin(), scratch.forward.end());
        return scratch.path;
    }

    auto greedy_path(const Graph & g, const VertexSet & mask) -> std::vector<int>
    {
        PathBoundScratch scratch(g);
        return greedy_path(g, mask.data(), scratch);
    }

    auto can_prune_by_path_lower_bound(const Graph & g, const std::uint64_t * mask, int target_depth,
            PathBoundScratch & scratch) -> bool
    {
        auto & path = greedy_path(g, mask, scratch);
        const int length = int(path.size());
        if (ceil_log2(length + 1) > target_depth)
            return true;
        if (length < 3)
            return false;
        // a chord between path positions i and j closes a cycle of j - i + 1
        // path vertices
        for (int i = 0; i + 2 < length; ++i)
            for (int j = i + 2; j < length; ++j)
                if (g.adjacent(path[i], path[j]) && 1 + ceil_log2(j - i + 1) > target_depth)
                    return true;
        return false;
    }

    auto can_prune_by_path_lower_bound(const Graph & g, const VertexSet & mask, int target_depth) -> bool
    {
        PathBoundScratch scratch(g);
        return can_prune_by_path_lower_bound(g, mask.data(), target_depth, scratch);
    }
}
