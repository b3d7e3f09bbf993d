#include "seidel/io.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <utility>

#include "seidel/errors.hpp"

namespace seidel {

EdgeListData read_edge_list(std::istream& in) {
  long long n = 0, m = 0;
  if (!(in >> n >> m)) throw ParseError("edge list: expected header \"n m\"");
  if (n < 0 || m < 0) throw ParseError("edge list: negative count in header");

  EdgeListData out;
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<size_t>(m));
  std::set<std::pair<int, int>> seen;
  for (long long i = 0; i < m; ++i) {
    int u = 0, v = 0;
    if (!(in >> u >> v)) throw ParseError("edge list: expected " + std::to_string(m) +
                                          " edge lines, got " + std::to_string(i));
    const std::pair<int, int> key{std::min(u, v), std::max(u, v)};
    if (!seen.insert(key).second)
      out.warnings.push_back("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    edges.emplace_back(u, v);
  }
  out.graph = Graph::from_edge_list(static_cast<int>(n), edges);
  return out;
}

EdgeListData read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

std::string format_double17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

}  // namespace seidel
