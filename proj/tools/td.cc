/* td: command-line front end for the treedepth solver library.
 *
 * Subcommands: solve, gen, verify, bench, debug. Exit codes: 0 success,
 * 1 usage error, 2 unreadable or malformed input, 3 timeout or node limit,
 * 4 failed verification or benchmark disagreement.
 */

#include "treedepth.h"

#include "CLI11.hpp"

#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace
{
    constexpr int exit_ok = 0;
    constexpr int exit_input_error = 2;
    constexpr int exit_timeout = 3;
    constexpr int exit_verification = 4;

    struct GraphDeleter
    {
        void operator()(td_graph * g) const { td_graph_free(g); }
    };
    struct ResultDeleter
    {
        void operator()(td_result * r) const { td_result_free(r); }
    };
    using GraphPtr = std::unique_ptr<td_graph, GraphDeleter>;
    using ResultPtr = std::unique_ptr<td_result, ResultDeleter>;

    auto read_input(const std::string & path, std::string & out) -> bool
    {
        if (path == "-") {
            std::ostringstream buffer;
            buffer << std::cin.rdbuf();
            out = buffer.str();
            return true;
        }
        std::ifstream file(path);
        if (! file)
            return false;
        std::ostringstream buffer;
        buffer << file.rdbuf();
        out = buffer.str();
        return true;
    }

    auto load_graph(const std::string & path, const std::string & format) -> GraphPtr
    {
        std::string text;
        if (! read_input(path, text)) {
            std::cerr << "td: cannot read '" << path << "'\n";
            return nullptr;
        }
        td_graph * graph = nullptr;
        char error[256] = "";
        if (td_graph_parse(text.c_str(), format.c_str(), &graph, error, sizeof error) != TD_OK) {
            std::cerr << "td: " << path << ": " << error << "\n";
            return nullptr;
        }
        return GraphPtr{ graph };
    }

    struct SolveFlags
    {
        bool no_lower_bounds = false;
        bool no_symmetry = false;
        bool no_domination = false;
        bool no_only_child = false;
        bool no_degree_order = false;
        double timeout_seconds = 0;

        auto to_config() const -> td_config
        {
            td_config config;
            td_config_init(&config);
            config.use_lower_bounds = ! no_lower_bounds;
            config.use_orbit_symmetry = ! no_symmetry;
            config.use_domination = ! no_domination;
            config.use_only_child = ! no_only_child;
            config.use_degree_order = ! no_degree_order;
            config.time_limit_seconds = timeout_seconds;
            return config;
        }

        auto add_options(CLI::App & app) -> void
        {
            app.add_flag("--no-lb", no_lower_bounds, "Disable both lower-bound prunes");
            app.add_flag("--no-sym", no_symmetry, "Disable orbit symmetry breaking");
            app.add_flag("--no-dom", no_domination, "Disable the domination rule");
            app.add_flag("--no-only-child", no_only_child, "Disable the only-child rule");
            app.add_flag("--no-order", no_degree_order, "Disable degree reordering");
            app.add_option("--timeout", timeout_seconds, "Time limit in seconds");
        }
    };

    auto print_stats(std::ostream & out, const td_result * result) -> void
    {
        out << "nodes " << td_result_counter(result, TD_COUNTER_NODES)
            << "\nprune_slb " << td_result_counter(result, TD_COUNTER_PRUNES_SIMPLE_BOUND)
            << "\nprune_plb " << td_result_counter(result, TD_COUNTER_PRUNES_PATH_BOUND)
            << "\nskip_orbit " << td_result_counter(result, TD_COUNTER_SKIPS_ORBIT)
            << "\nskip_dom " << td_result_counter(result, TD_COUNTER_SKIPS_DOMINATION)
            << "\nskip_onlychild " << td_result_counter(result, TD_COUNTER_SKIPS_ONLY_CHILD)
            << "\npeak_live_components " << td_result_counter(result, TD_COUNTER_PEAK_LIVE_COMPONENTS)
            << "\nwall_ms " << td_result_wall_ms(result) << "\n";
    }

    auto run_solve(const std::string & path, const std::string & format, const SolveFlags & flags,
            bool print_forest, bool stats) -> int
    {
        auto graph = load_graph(path, format);
        if (! graph)
            return exit_input_error;

        td_config config = flags.to_config();
        td_result * raw = nullptr;
        if (td_solve(graph.get(), &config, &raw) != TD_OK) {
            std::cerr << "td: solve failed\n";
            return exit_input_error;
        }
        ResultPtr result{ raw };

        if (td_result_status(result.get()) != TD_SOLVED) {
            std::cout << "TIMEOUT k>=" << td_result_lower_bound(result.get()) << "\n";
            if (stats)
                print_stats(std::cerr, result.get());
            return exit_timeout;
        }

        std::cout << td_result_treedepth(result.get()) << "\n";
        if (print_forest)
            for (int v = 1; v <= td_graph_vertex_count(graph.get()); ++v)
                std::cout << v << ' ' << td_result_parent(result.get(), v) << "\n";
        if (stats)
            print_stats(std::cerr, result.get());
        return exit_ok;
    }

    auto generate_from_spec(const std::string & family, const std::vector<std::string> & params,
            std::optional<unsigned long long> seed, std::string & error) -> GraphPtr
    {
        auto need_params = [&](std::size_t count) {
            if (params.size() != count) {
                error = family + " takes " + std::to_string(count) + " parameter(s)";
                return false;
            }
            return true;
        };

        td_graph * graph = nullptr;
        td_status status = TD_ERR_ARGUMENT;
        try {
            if (family == "path" && need_params(1))
                status = td_graph_generate_path(std::stoi(params[0]), &graph);
            else if (family == "cycle" && need_params(1))
                status = td_graph_generate_cycle(std::stoi(params[0]), &graph);
            else if (family == "clique" && need_params(1))
                status = td_graph_generate_clique(std::stoi(params[0]), &graph);
            else if (family == "complete_bipartite" && need_params(1))
                status = td_graph_generate_complete_bipartite(std::stoi(params[0]), &graph);
            else if (family == "binary_tree" && need_params(1))
                status = td_graph_generate_binary_tree(std::stoi(params[0]), &graph);
            else if (family == "square_grid" && need_params(1))
                status = td_graph_generate_square_grid(std::stoi(params[0]), &graph);
            else if (family == "gnp") {
                if (! need_params(2))
                    return nullptr;
                if (! seed) {
                    error = "gnp requires --seed";
                    return nullptr;
                }
                status = td_graph_generate_gnp(std::stoi(params[0]), std::stod(params[1]), *seed, &graph);
            }
            else if (error.empty())
                error = "unknown family '" + family + "'";
        }
        catch (const std::exception &) {
            error = "bad parameter for family '" + family + "'";
            return nullptr;
        }

        if (status != TD_OK) {
            if (error.empty())
                error = "invalid parameters for family '" + family + "'";
            return nullptr;
        }
        return GraphPtr{ graph };
    }

    auto run_gen(const std::string & family, const std::vector<std::string> & params,
            std::optional<unsigned long long> seed) -> int
    {
        std::string error;
        auto graph = generate_from_spec(family, params, seed, error);
        if (! graph) {
            std::cerr << "td: " << error << "\n";
            return exit_input_error;
        }
        long long m = td_graph_edge_count(graph.get());
        std::vector<int> edges(std::size_t(2 * m));
        td_graph_edges(graph.get(), edges.data());
        std::ostringstream out;
        for (long long i = 0; i < m; ++i)
            out << edges[std::size_t(2 * i)] << ' ' << edges[std::size_t(2 * i + 1)] << '\n';
        std::cout << out.str();
        return exit_ok;
    }

    auto run_verify(const std::string & graph_path, const std::string & forest_path,
            const std::string & format) -> int
    {
        auto graph = load_graph(graph_path, format);
        if (! graph)
            return exit_input_error;
        const int n = td_graph_vertex_count(graph.get());

        std::string text;
        if (! read_input(forest_path, text)) {
            std::cerr << "td: cannot read '" << forest_path << "'\n";
            return exit_input_error;
        }
        std::istringstream in(text);
        std::vector<long long> numbers;
        long long value = 0;
        while (in >> value)
            numbers.push_back(value);
        if (! in.eof()) {
            std::cerr << "td: " << forest_path << ": not a whitespace-separated list of integers\n";
            return exit_input_error;
        }

        // accept a bare parent array, "v parent" pairs, or full `td solve
        // --print-forest` output (treedepth line followed by pairs)
        std::vector<int> parent(std::size_t(n) + 1, 0);
        if (numbers.size() == std::size_t(n)) {
            for (int v = 1; v <= n; ++v)
                parent[v] = int(numbers[v - 1]);
        }
        else if (numbers.size() == std::size_t(2 * n) || numbers.size() == std::size_t(2 * n + 1)) {
            std::size_t offset = numbers.size() == std::size_t(2 * n) ? 0 : 1;
            std::vector<bool> seen(std::size_t(n) + 1, false);
            for (int i = 0; i < n; ++i) {
                long long v = numbers[offset + std::size_t(2 * i)];
                long long p = numbers[offset + std::size_t(2 * i + 1)];
                if (v < 1 || v > n || seen[std::size_t(v)]) {
                    std::cerr << "td: " << forest_path << ": bad vertex " << v << " in pair list\n";
                    return exit_input_error;
                }
                seen[std::size_t(v)] = true;
                parent[std::size_t(v)] = int(p);
            }
        }
        else {
            std::cerr << "td: " << forest_path << ": expected " << n << " parents or " << n
                      << " 'v parent' pairs\n";
            return exit_input_error;
        }

        int valid = 0, depth = 0;
        char error[256] = "";
        if (td_check_forest(graph.get(), parent.data(), &valid, &depth, error, sizeof error) != TD_OK) {
            std::cerr << "td: " << error << "\n";
            return exit_input_error;
        }
        if (! valid) {
            std::cout << "INVALID " << error << "\n";
            return exit_verification;
        }
        std::cout << "VALID depth " << depth << "\n";
        return exit_ok;
    }

    struct BenchTask
    {
        std::string name;
        std::size_t graph_index;
        std::string config_label;
    };

    auto config_for_label(const std::string & label, double timeout, td_config & config) -> bool
    {
        td_config_init(&config);
        config.time_limit_seconds = timeout;
        if (label == "All")
            return true;
        if (label == "-LB")
            config.use_lower_bounds = 0;
        else if (label == "-Sym")
            config.use_orbit_symmetry = 0;
        else if (label == "-Dom")
            config.use_domination = 0;
        else if (label == "-Ord")
            config.use_degree_order = 0;
        else
            return false;
        return true;
    }

    auto instance_name(const std::string & line) -> std::string
    {
        if (line.rfind("gen ", 0) == 0) {
            std::string name = line.substr(4);
            for (auto & c : name)
                if (c == ' ' || c == '\t')
                    c = '_';
            return name;
        }
        return std::filesystem::path(line).stem().string();
    }

    auto run_bench(const std::string & manifest_path, const std::string & configs_arg,
            double timeout, int jobs, const std::string & format) -> int
    {
        std::string manifest_text;
        if (! read_input(manifest_path, manifest_text)) {
            std::cerr << "td: cannot read '" << manifest_path << "'\n";
            return exit_input_error;
        }

        std::vector<std::string> labels;
        {
            std::istringstream in(configs_arg);
            std::string label;
            while (std::getline(in, label, ','))
                if (! label.empty())
                    labels.push_back(label);
        }
        for (auto & label : labels) {
            td_config probe;
            if (! config_for_label(label, 0, probe)) {
                std::cerr << "td: unknown config label '" << label << "'\n";
                return exit_input_error;
            }
        }

        // all instances load up front; nothing touches the disk once
        // solving starts
        std::vector<GraphPtr> graphs;
        std::vector<std::string> names;
        std::istringstream manifest(manifest_text);
        std::string line;
        while (std::getline(manifest, line)) {
            std::size_t hash = line.find('#');
            if (hash != std::string::npos)
                line = line.substr(0, hash);
            while (! line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r'))
                line.pop_back();
            std::size_t start = line.find_first_not_of(" \t");
            if (start == std::string::npos)
                continue;
            line = line.substr(start);

            GraphPtr graph;
            if (line.rfind("gen ", 0) == 0) {
                std::istringstream spec(line.substr(4));
                std::string family;
                spec >> family;
                std::vector<std::string> params;
                std::string token;
                std::optional<unsigned long long> seed;
                while (spec >> token) {
                    if (token == "--seed") {
                        unsigned long long s = 0;
                        if (! (spec >> s)) {
                            std::cerr << "td: bench: missing seed in '" << line << "'\n";
                            return exit_input_error;
                        }
                        seed = s;
                    }
                    else
                        params.push_back(token);
                }
                std::string error;
                graph = generate_from_spec(family, params, seed, error);
                if (! graph) {
                    std::cerr << "td: bench: " << error << " in '" << line << "'\n";
                    return exit_input_error;
                }
            }
            else {
                graph = load_graph(line, format);
                if (! graph)
                    return exit_input_error;
            }
            names.push_back(instance_name(line));
            graphs.push_back(std::move(graph));
        }

        std::vector<BenchTask> tasks;
        for (std::size_t i = 0; i < graphs.size(); ++i)
            for (auto & label : labels)
                tasks.push_back({ names[i], i, label });

        std::vector<std::string> rows(tasks.size());
        std::vector<int> treedepths(tasks.size(), -1);
        std::atomic<std::size_t> next_task{ 0 };

        auto worker = [&] {
            while (true) {
                std::size_t index = next_task.fetch_add(1);
                if (index >= tasks.size())
                    return;
                const auto & task = tasks[index];
                td_config config;
                config_for_label(task.config_label, timeout, config);
                td_result * raw = nullptr;
                if (td_solve(graphs[task.graph_index].get(), &config, &raw) != TD_OK) {
                    rows[index] = "";
                    continue;
                }
                ResultPtr result{ raw };
                bool solved = td_result_status(result.get()) == TD_SOLVED;
                if (solved)
                    treedepths[index] = td_result_treedepth(result.get());
                std::ostringstream row;
                row << task.name << ',' << td_graph_vertex_count(graphs[task.graph_index].get()) << ','
                    << td_graph_edge_count(graphs[task.graph_index].get()) << ',' << task.config_label << ','
                    << (solved ? std::to_string(td_result_treedepth(result.get())) : std::string("*")) << ','
                    << (solved ? "ok" : "timeout") << ','
                    << td_result_wall_ms(result.get()) << ','
                    << td_result_counter(result.get(), TD_COUNTER_NODES) << ','
                    << td_result_counter(result.get(), TD_COUNTER_PRUNES_SIMPLE_BOUND) << ','
                    << td_result_counter(result.get(), TD_COUNTER_PRUNES_PATH_BOUND) << ','
                    << td_result_counter(result.get(), TD_COUNTER_SKIPS_ORBIT) << ','
                    << td_result_counter(result.get(), TD_COUNTER_SKIPS_DOMINATION) << ','
                    << td_result_counter(result.get(), TD_COUNTER_SKIPS_ONLY_CHILD);
                rows[index] = row.str();
            }
        };

        if (jobs <= 1)
            worker();
        else {
            std::vector<std::thread> pool;
            for (int j = 0; j < jobs; ++j)
                pool.emplace_back(worker);
            for (auto & thread : pool)
                thread.join();
        }

        std::cout << "name,n,m,config,td,status,ms,nodes,prune_slb,prune_plb,skip_orbit,skip_dom,skip_onlychild\n";
        for (auto & row : rows)
            if (! row.empty())
                std::cout << row << "\n";

        // completed configs must agree per instance
        bool disagreement = false;
        for (std::size_t i = 0; i < graphs.size(); ++i) {
            int agreed = -1;
            for (std::size_t t = 0; t < tasks.size(); ++t) {
                if (tasks[t].graph_index != i || treedepths[t] < 0)
                    continue;
                if (agreed < 0)
                    agreed = treedepths[t];
                else if (agreed != treedepths[t]) {
                    disagreement = true;
                    std::cerr << "td: bench: configs disagree on '" << names[i] << "' ("
                              << agreed << " vs " << treedepths[t] << ")\n";
                }
            }
        }
        return disagreement ? exit_verification : exit_ok;
    }

    auto run_debug(const std::string & path, const std::string & format, bool orbits,
            bool candidates, std::optional<int> simple_bound_size, std::optional<int> path_bound_target)
            -> int
    {
        auto graph = load_graph(path, format);
        if (! graph)
            return exit_input_error;
        const int n = td_graph_vertex_count(graph.get());

        if (orbits) {
            std::vector<int> labels(std::size_t(n) + 1, 0);
            if (td_vertex_orbits(graph.get(), labels.data()) != TD_OK) {
                std::cerr << "td: orbit computation failed\n";
                return exit_input_error;
            }
            std::cout << "orbits" << (labels[0] ? "" : " (budget hit; singleton fallback)") << ":\n";
            for (int v = 1; v <= n; ++v)
                std::cout << "  " << v << " -> " << labels[v] << "\n";
        }

        if (candidates) {
            td_config config;
            td_config_init(&config);
            std::vector<int> buffer(std::size_t(n), 0);
            for (int root_level = 1; root_level >= 0; --root_level) {
                int count = 0;
                if (td_root_candidates(graph.get(), &config, root_level, buffer.data(), &count) != TD_OK) {
                    std::cerr << "td: candidate computation failed\n";
                    return exit_input_error;
                }
                std::cout << (root_level ? "root-level candidates:" : "deeper-level candidates:");
                for (int i = 0; i < count; ++i)
                    std::cout << ' ' << buffer[i];
                std::cout << "\n";
            }
        }

        if (simple_bound_size) {
            int bound = 0;
            if (td_simple_lower_bound(graph.get(), *simple_bound_size, &bound) != TD_OK) {
                std::cerr << "td: simple bound unavailable (edgeless graph or bad size)\n";
                return exit_input_error;
            }
            std::cout << "simple_lower_bound(" << *simple_bound_size << ") = " << bound << "\n";
        }

        if (path_bound_target) {
            int pruned = 0;
            if (td_path_bound_prunes(graph.get(), *path_bound_target, &pruned) != TD_OK) {
                std::cerr << "td: path bound needs a connected, non-empty graph\n";
                return exit_input_error;
            }
            std::cout << "path_bound_prunes(target=" << *path_bound_target << ") = "
                      << (pruned ? "true" : "false") << "\n";
        }

        return exit_ok;
    }
}

auto main(int argc, char ** argv) -> int
{
    CLI::App app{ "exact treedepth solver" };
    app.require_subcommand(1);
    app.set_version_flag("--version", td_version());

    std::string format = "auto";

    auto * solve_cmd = app.add_subcommand("solve", "Compute the treedepth of a graph");
    std::string solve_path;
    SolveFlags solve_flags;
    bool print_forest = false, print_stats_flag = false;
    solve_cmd->add_option("file", solve_path, "Graph file ('-' for stdin)")->required();
    solve_cmd->add_option("--format", format, "Input format: edgelist, dimacs or auto");
    solve_flags.add_options(*solve_cmd);
    solve_cmd->add_flag("--print-forest", print_forest, "Print 'v parent' lines after the treedepth");
    solve_cmd->add_flag("--stats", print_stats_flag, "Print search statistics to stderr");

    auto * gen_cmd = app.add_subcommand("gen", "Generate an instance as an edge list");
    std::string gen_family;
    std::vector<std::string> gen_params;
    unsigned long long gen_seed = 0;
    bool gen_seed_set = false;
    gen_cmd->add_option("family", gen_family,
            "path|cycle|clique|complete_bipartite|binary_tree|square_grid|gnp")->required();
    gen_cmd->add_option("params", gen_params, "Family parameters");
    gen_cmd->add_option("--seed", gen_seed, "Seed (required for gnp)")
            ->each([&](const std::string &) { gen_seed_set = true; });

    auto * verify_cmd = app.add_subcommand("verify", "Check an elimination forest against a graph");
    std::string verify_graph, verify_forest;
    verify_cmd->add_option("graph", verify_graph, "Graph file")->required();
    verify_cmd->add_option("forest", verify_forest,
            "Forest file: parent array, 'v parent' pairs, or solve --print-forest output")->required();
    verify_cmd->add_option("--format", format, "Graph input format");

    auto * bench_cmd = app.add_subcommand("bench", "Run an ablation benchmark, emitting CSV");
    std::string bench_manifest, bench_configs = "All";
    double bench_timeout = 0;
    int bench_jobs = 1;
    bench_cmd->add_option("manifest", bench_manifest,
            "File with one instance per line: a path or 'gen <family> <params> [--seed S]'")->required();
    bench_cmd->add_option("--configs", bench_configs, "Comma-separated labels: All,-LB,-Sym,-Dom,-Ord");
    bench_cmd->add_option("--timeout", bench_timeout, "Per-solve time limit in seconds");
    bench_cmd->add_option("--jobs", bench_jobs, "Worker threads");
    bench_cmd->add_option("--format", format, "Graph input format");

    auto * debug_cmd = app.add_subcommand("debug", "Inspect orbits, candidate filters and bounds");
    std::string debug_path;
    bool debug_orbits = false, debug_candidates = false;
    std::optional<int> debug_simple_bound, debug_path_bound;
    debug_cmd->add_option("file", debug_path, "Graph file")->required();
    debug_cmd->add_option("--format", format, "Graph input format");
    debug_cmd->add_flag("--orbits", debug_orbits, "Print vertex orbits");
    debug_cmd->add_flag("--candidates", debug_candidates, "Print filtered root candidates");
    debug_cmd->add_option("--simple-bound", debug_simple_bound, "Evaluate the simple bound at this size");
    debug_cmd->add_option("--path-bound", debug_path_bound, "Evaluate the path bound at this target depth");

    CLI11_PARSE(app, argc, argv);

    if (solve_cmd->parsed())
        return run_solve(solve_path, format, solve_flags, print_forest, print_stats_flag);
    if (gen_cmd->parsed())
        return run_gen(gen_family, gen_params,
                gen_seed_set ? std::optional<unsigned long long>(gen_seed) : std::nullopt);
    if (verify_cmd->parsed())
        return run_verify(verify_graph, verify_forest, format);
    if (bench_cmd->parsed())
        return run_bench(bench_manifest, bench_configs, bench_timeout, bench_jobs, format);
    if (debug_cmd->parsed())
        return run_debug(debug_path, format, debug_orbits, debug_candidates,
                debug_simple_bound, debug_path_bound);
    return 1;
}
