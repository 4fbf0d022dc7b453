#include "symmetry.hh"

#include <algorithm>
#include <map>
#include <numeric>

namespace treedepth
{
    auto OrbitLabels::singletons(int n) -> OrbitLabels
    {
        OrbitLabels labels;
        labels.orbit.resize(n + 1);
        std::iota(labels.orbit.begin(), labels.orbit.end(), 0);
        return labels;
    }

    namespace
    {
        struct BudgetExceeded
        {
        };

        /* Iterative colour refinement. Colours are dense ids starting at 0;
         * two vertices get equal colours only if no automorphism argument
         * from degrees and neighbour colour multisets separates them. */
        struct Refiner
        {
            const Graph & g;
            int n;

            explicit Refiner(const Graph & g_) :
                g(g_),
                n(g_.vertex_count())
            {
            }

            auto initial_colours() const -> std::vector<int>
            {
                std::vector<int> colours(n + 1, 0);
                for (int v = 1; v <= n; ++v)
                    colours[v] = g.degree(v);
                return normalise(colours);
            }

            auto normalise(const std::vector<int> & colours) const -> std::vector<int>
            {
                std::vector<int> sorted;
                for (int v = 1; v <= n; ++v)
                    sorted.push_back(colours[v]);
                std::sort(sorted.begin(), sorted.end());
                sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
                std::vector<int> result(n + 1, 0);
                for (int v = 1; v <= n; ++v)
                    result[v] = int(std::lower_bound(sorted.begin(), sorted.end(), colours[v]) - sorted.begin());
                return result;
            }

            auto refine(std::vector<int> colours) const -> std::vector<int>
            {
                while (true) {
                    std::vector<std::vector<int>> signatures(n + 1);
                    for (int v = 1; v <= n; ++v) {
                        auto & signature = signatures[v];
                        signature.push_back(colours[v]);
                        const std::uint64_t * row = g.neighbourhood_row(v);
                        for (int u = bits::first(row, g.word_count()); u; u = bits::next(row, g.word_count(), u))
                            signature.push_back(colours[u]);
                        std::sort(signature.begin() + 1, signature.end());
                    }
                    std::map<std::vector<int>, int> ranks;
                    for (int v = 1; v <= n; ++v)
                        ranks.emplace(signatures[v], 0);
                    int next_rank = 0;
                    for (auto & [signature, rank] : ranks)
                        rank = next_rank++;
                    std::vector<int> refined(n + 1, 0);
                    for (int v = 1; v <= n; ++v)
                        refined[v] = ranks[signatures[v]];
                    if (refined == colours)
                        return colours;
                    colours = std::move(refined);
                }
            }

            auto individualised(std::vector<int> colours, int v) const -> std::vector<int>
            {
                for (int u = 1; u <= n; ++u)
                    colours[u] *= 2;
                colours[v] += 1;
                return refine(normalise(colours));
            }
        };

        /// Exhaustive search for an automorphism mapping `from` to `to`,
        /// pruned by individualised refinement colours.
        struct AutomorphismSearch
        {
            const Graph & g;
            const Refiner & refiner;
            const std::vector<int> & base_colours;
            long long & budget;

            int n;
            std::vector<int> mapping;           // source -> target, 0 = unmapped
            std::vector<bool> target_used;
            std::vector<int> order;             // source vertices, most constrained first

            AutomorphismSearch(const Graph & g_, const Refiner & refiner_,
                    const std::vector<int> & base_colours_, long long & budget_) :
                g(g_),
                refiner(refiner_),
                base_colours(base_colours_),
                budget(budget_),
                n(g_.vertex_count())
            {
            }

            auto run(int from, int to) -> std::vector<int>
            {
                auto source_colours = refiner.individualised(base_colours, from);
                auto target_colours = refiner.individualised(base_colours, to);

                std::vector<int> source_class_sizes(n + 1, 0), target_class_sizes(n + 1, 0);
                for (int v = 1; v <= n; ++v) {
                    ++source_class_sizes[source_colours[v]];
                    ++target_class_sizes[target_colours[v]];
                }
                if (source_class_sizes != target_class_sizes)
                    return {};

                order.resize(n);
                std::iota(order.begin(), order.end(), 1);
                std::sort(order.begin(), order.end(), [&](int a, int b) {
                    int sa = source_class_sizes[source_colours[a]], sb = source_class_sizes[source_colours[b]];
                    return std::tie(sa, a) < std::tie(sb, b);
                });

                mapping.assign(n + 1, 0);
                target_used.assign(n + 1, false);
                if (extend(0, source_colours, target_colours))
                    return mapping;
                return {};
            }

            auto extend(std::size_t position, const std::vector<int> & source_colours,
                    const std::vector<int> & target_colours) -> bool
            {
                if (position == order.size())
                    return true;
                int u = order[position];
                for (int w = 1; w <= n; ++w) {
                    if (target_used[w] || target_colours[w] != source_colours[u])
                        continue;
                    if (--budget <= 0)
                        throw BudgetExceeded{};
                    bool consistent = true;
                    for (std::size_t i = 0; i < position; ++i) {
                        int u2 = order[i];
                        if (g.adjacent(u, u2) != g.adjacent(w, mapping[u2])) {
                            consistent = false;
                            break;
                        }
                    }
                    if (! consistent)
                        continue;
                    mapping[u] = w;
                    target_used[w] = true;
                    if (extend(position + 1, source_colours, target_colours))
                        return true;
                    mapping[u] = 0;
                    target_used[w] = false;
                }
                return false;
            }
        };

        struct UnionFind
        {
            std::vector<int> parent;

            explicit UnionFind(int n) :
                parent(n + 1)
            {
                std::iota(parent.begin(), parent.end(), 0);
            }

            auto find(int v) -> int
            {
                while (parent[v] != v)
                    v = parent[v] = parent[parent[v]];
                return v;
            }

            auto unite(int a, int b) -> void
            {
                a = find(a);
                b = find(b);
                if (a != b)
                    parent[std::max(a, b)] = std::min(a, b);
            }
        };
    }

    auto vertex_orbits_with_witnesses(const Graph & g, std::vector<std::vector<int>> & witnesses,
            long long node_budget) -> OrbitLabels
    {
        const int n = g.vertex_count();
        witnesses.clear();
        if (n == 0)
            return OrbitLabels::singletons(0);

        Refiner refiner(g);
        auto colours = refiner.refine(refiner.initial_colours());

        // a discrete colouring leaves only the identity automorphism
        std::vector<int> class_size(n + 1, 0);
        bool discrete = true;
        for (int v = 1; v <= n; ++v)
            if (++class_size[colours[v]] > 1)
                discrete = false;
        if (discrete)
            return OrbitLabels::singletons(n);

        UnionFind classes(n);
        long long budget = node_budget;
        try {
            for (int colour = 0; colour < n; ++colour) {
                std::vector<int> members;
                for (int v = 1; v <= n; ++v)
                    if (colours[v] == colour)
                        members.push_back(v);
                if (members.size() < 2)
                    continue;
                std::vector<int> representatives;
                for (int v : members) {
                    bool placed = false;
                    for (int rep : representatives) {
                        if (classes.find(v) == classes.find(rep)) {
                            placed = true;
                            break;
                        }
                        AutomorphismSearch search(g, refiner, colours, budget);
                        auto automorphism = search.run(rep, v);
                        if (! automorphism.empty()) {
                            for (int u = 1; u <= n; ++u)
                                classes.unite(u, automorphism[u]);
                            witnesses.push_back(std::move(automorphism));
                            placed = true;
                            break;
                        }
                    }
                    if (! placed)
                        representatives.push_back(v);
                }
            }
        }
        catch (const BudgetExceeded &) {
            witnesses.clear();
            auto labels = OrbitLabels::singletons(n);
            labels.exact = false;
            return labels;
        }

        OrbitLabels labels;
        labels.orbit.resize(n + 1, 0);
        for (int v = 1; v <= n; ++v)
            labels.orbit[v] = classes.find(v);
        return labels;
    }

    auto vertex_orbits(const Graph & g, long long node_budget) -> OrbitLabels
    {
        std::vector<std::vector<int>> witnesses;
        return vertex_orbits_with_witnesses(g, witnesses, node_budget);
    }

    auto root_candidates(const Graph & g, const VertexSet & mask, bool is_root_level,
            int only_child_parent, const OrbitLabels & orbits, const RootCandidateConfig & config)
            -> std::vector<int>
    {
        std::vector<int> result;
        std::vector<bool> orbit_seen(g.vertex_count() + 1, false);
        for (int v = mask.min(); v; v = mask.next(v)) {
            bool orbit_repeated = false;
            if (is_root_level && config.use_orbit_symmetry) {
                orbit_repeated = orbit_seen[orbits.orbit[v]];
                orbit_seen[orbits.orbit[v]] = true;
            }
            if (config.use_only_child && only_child_parent != 0 && v < only_child_parent)
                continue;
            if (orbit_repeated)
                continue;
            if (config.use_domination) {
                bool dominated = false;
                for (int v2 = mask.min(); v2 && v2 < v; v2 = mask.next(v2))
                    if (dominates(g.neighbourhood_row(v2), g.neighbourhood_row(v), mask.data(), v2,
                                g.word_count())) {
                        dominated = true;
                        break;
                    }
                if (dominated)
                    continue;
            }
            result.push_back(v);
        }
        return result;
    }
}
