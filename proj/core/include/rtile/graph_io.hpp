#pragma once

#include <string>
#include <string_view>

#include "rtile/graph.hpp"

namespace rtile {

// Text format: a header line "n m", then m lines "u v" (uncoloured) or
// "u v c" with c in {r, b}. Vertices are 0-indexed. Writers emit edges in
// lexicographic order. Blank lines and lines starting with '#' are ignored.

/// Parses an uncoloured graph; a colour column, if present, is ignored.
Graph parse_graph(std::string_view text);
/// Parses a coloured graph; every edge line must carry a colour.
ColouredGraph parse_coloured_graph(std::string_view text);

std::string format_graph(const Graph& g);
std::string format_coloured_graph(const ColouredGraph& g);

Graph read_graph_file(const std::string& path);
ColouredGraph read_coloured_graph_file(const std::string& path);

}  // namespace rtile
