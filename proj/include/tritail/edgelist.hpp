#pragma once

#include <iosfwd>
#include <string>

#include "tritail/graph.hpp"

namespace tritail {

// Plain-text edge list:
//   n=<vertex count>
//   u v        (one edge per line, 0-based endpoints)
// Blank lines and lines starting with '#' are ignored on input.  Output is
// lexicographically sorted so the representation of a graph is unique.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);
std::string to_edge_list(const Graph& g);

}  // namespace tritail
