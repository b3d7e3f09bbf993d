#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "seidel/graph.hpp"

namespace seidel {

/// Parsed edge-list file plus non-fatal parser warnings (duplicate edges
/// are warned about and collapsed).
struct EdgeListData {
  Graph graph;
  std::vector<std::string> warnings;
};

/// Text format: first line "n m", then m lines "u v", 0-based.
/// Malformed input -> ParseError; bad endpoints propagate InvalidVertex /
/// SelfLoop from graph construction.
EdgeListData read_edge_list(std::istream& in);
EdgeListData read_edge_list_file(const std::string& path);

void write_edge_list(std::ostream& out, const Graph& g);

/// Round-trip float formatting (17 significant digits).
std::string format_double17(double x);

}  // namespace seidel
