#include "graph_io.hh"
#include "errors.hh"

#include <charconv>
#include <cstdint>
#include <sstream>
#include <unordered_map>
#include <vector>

namespace treedepth
{
    namespace
    {
        struct Line
        {
            int number;
            std::string_view text;
        };

        auto split_lines(std::string_view text) -> std::vector<Line>
        {
            std::vector<Line> result;
            int number = 0;
            std::size_t pos = 0;
            while (pos <= text.size()) {
                std::size_t end = text.find('\n', pos);
                if (end == std::string_view::npos)
                    end = text.size();
                ++number;
                result.push_back({ number, text.substr(pos, end - pos) });
                pos = end + 1;
            }
            return result;
        }

        auto tokenise(std::string_view line) -> std::vector<std::string_view>
        {
            std::vector<std::string_view> tokens;
            std::size_t pos = 0;
            while (pos < line.size()) {
                while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r'))
                    ++pos;
                std::size_t start = pos;
                while (pos < line.size() && ! (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r'))
                    ++pos;
                if (pos > start)
                    tokens.push_back(line.substr(start, pos - start));
            }
            return tokens;
        }

        auto parse_number(std::string_view token, int line) -> long long
        {
            long long value = 0;
            auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
            if (ec != std::errc{} || ptr != token.data() + token.size() || value < 0)
                throw ParseError{ line, "expected a non-negative integer, got '" + std::string(token) + "'" };
            return value;
        }

        auto parse_edgelist(std::string_view text) -> Graph
        {
            std::unordered_map<long long, int> label_to_vertex;

            auto vertex_of = [&](long long label) {
                return label_to_vertex.emplace(label, int(label_to_vertex.size()) + 1).first->second;
            };

            std::vector<std::pair<int, int>> edges;
            for (auto & line : split_lines(text)) {
                std::string_view body = line.text.substr(0, line.text.find('#'));
                auto tokens = tokenise(body);
                if (tokens.empty())
                    continue;
                if (tokens.size() != 2)
                    throw ParseError{ line.number, "expected an edge 'u v', got " +
                        std::to_string(tokens.size()) + " token(s)" };
                long long u = parse_number(tokens[0], line.number);
                long long v = parse_number(tokens[1], line.number);
                if (u == v)
                    throw ParseError{ line.number, "self-loop at vertex " + std::to_string(u) };
                int first = vertex_of(u);
                int second = vertex_of(v);
                edges.emplace_back(first, second);
            }

            Graph::Builder builder(int(label_to_vertex.size()));
            for (auto & [u, v] : edges)
                builder.add_edge(u, v);
            return std::move(builder).build();
        }

        auto parse_dimacs(std::string_view text) -> Graph
        {
            bool saw_header = false;
            long long n = 0, m = 0, edges_seen = 0;
            Graph::Builder builder(0);

            for (auto & line : split_lines(text)) {
                auto tokens = tokenise(line.text);
                if (tokens.empty() || tokens[0] == "c")
                    continue;
                if (! saw_header) {
                    if (tokens.size() != 4 || tokens[0] != "p" || tokens[1] != "tdp")
                        throw ParseError{ line.number, "expected header 'p tdp <n> <m>'" };
                    n = parse_number(tokens[2], line.number);
                    m = parse_number(tokens[3], line.number);
                    if (n > max_vertices)
                        throw ParseError{ line.number, "instance has " + std::to_string(n) +
                            " vertices, but at most " + std::to_string(max_vertices) + " are supported" };
                    builder = Graph::Builder(int(n));
                    saw_header = true;
                    continue;
                }
                if (tokens.size() != 2)
                    throw ParseError{ line.number, "expected an edge 'u v'" };
                long long u = parse_number(tokens[0], line.number);
                long long v = parse_number(tokens[1], line.number);
                if (u < 1 || u > n || v < 1 || v > n)
                    throw ParseError{ line.number, "vertex out of range 1.." + std::to_string(n) };
                if (u == v)
                    throw ParseError{ line.number, "self-loop at vertex " + std::to_string(u) };
                if (++edges_seen > m)
                    throw ParseError{ line.number, "more than the declared " + std::to_string(m) + " edges" };
                builder.add_edge(int(u), int(v));
            }

            if (! saw_header)
                throw ParseError{ 0, "missing 'p tdp <n> <m>' header" };
            if (edges_seen < m)
                throw ParseError{ 0, "declared " + std::to_string(m) + " edges but found only " +
                    std::to_string(edges_seen) };
            return std::move(builder).build();
        }
    }

    auto parse_graph(std::string_view text, GraphFormat format) -> Graph
    {
        switch (format) {
        case GraphFormat::edgelist: return parse_edgelist(text);
        case GraphFormat::dimacs_gr: return parse_dimacs(text);
        }
        throw ArgumentError{ "unknown graph format" };
    }

    auto sniff_format(std::string_view text) -> GraphFormat
    {
        for (auto & line : split_lines(text)) {
            auto tokens = tokenise(line.text);
            if (tokens.empty() || tokens[0] == "c")
                continue;
            return tokens[0] == "p" ? GraphFormat::dimacs_gr : GraphFormat::edgelist;
        }
        return GraphFormat::edgelist;
    }

    auto write_edgelist(const Graph & g) -> std::string
    {
        std::ostringstream out;
        for (auto & [u, v] : g.edges())
            out << u << ' ' << v << '\n';
        return out.str();
    }

    auto write_dimacs(const Graph & g) -> std::string
    {
        std::ostringstream out;
        out << "p tdp " << g.vertex_count() << ' ' << g.edge_count() << '\n';
        for (auto & [u, v] : g.edges())
            out << u << ' ' << v << '\n';
        return out.str();
    }
}
