#pragma once

#include <iosfwd>
#include <string>

#include "turancert/graph.hpp"

namespace turancert {

// Plain-text graph format:
//
//   n m
//   u v          (m lines, 0 <= u < v < n)
//
// Blank lines and lines starting with '#' are ignored.  Parsing reports
// ParseError with a 1-based line number on malformed input, out-of-range or
// repeated vertices, self-loops, duplicate edges, and wrong edge counts.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list_text(const std::string& text);
Graph load_edge_list(const std::string& path);

// Canonical emission: edges ascending by (u, v), single spaces, one trailing
// newline per line.  Byte-identical for equal graphs.
std::string to_edge_list(const Graph& g);
void save_edge_list(const Graph& g, const std::string& path);

}  // namespace turancert
