#ifndef TREEDEPTH_GRAPH_IO_HH
#define TREEDEPTH_GRAPH_IO_HH

#include "graph.hh"

#include <string>
#include <string_view>

namespace treedepth
{
    enum class GraphFormat
    {
        edgelist,   // one "u v" pair per line, '#' comments, labels arbitrary
        dimacs_gr   // "p tdp n m" header then m "u v" lines, 'c' comments
    };

    /// Parse a graph, throwing ParseError with a line number on malformed
    /// input. Edge-list labels are renumbered densely to 1..n in order of
    /// first appearance; duplicate edges collapse; self-loops are rejected.
    auto parse_graph(std::string_view text, GraphFormat format) -> Graph;

    /// Guess the format: a 'p' header line means DIMACS, else edge list.
    auto sniff_format(std::string_view text) -> GraphFormat;

    auto write_edgelist(const Graph & g) -> std::string;
    auto write_dimacs(const Graph & g) -> std::string;
}

#endif
