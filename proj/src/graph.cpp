#include "seidel/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace seidel {

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) {
    throw InvalidVertex("vertex " + std::to_string(v) + " out of range [0, " +
                        std::to_string(n_) + ")");
  }
}

Graph Graph::from_edge_list(int n, std::span<const std::pair<int, int>> edges) {
  if (n < 0) throw InvalidVertex("negative vertex count");
  Graph g;
  g.n_ = n;
  g.adj_.resize(n);
  g.edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n) throw InvalidVertex("endpoint " + std::to_string(u) + " out of range");
    if (v < 0 || v >= n) throw InvalidVertex("endpoint " + std::to_string(v) + " out of range");
    if (u == v) throw SelfLoop("self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    g.edges_.push_back({u, v});
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());
  for (const Edge& e : g.edges_) {
    g.adj_[e.u].push_back(e.v);
    g.adj_[e.v].push_back(e.u);
  }
  for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());
  return g;
}

Graph Graph::from_edge_list(int n, std::initializer_list<std::pair<int, int>> edges) {
  return from_edge_list(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) return false;
  const auto& nbrs = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  const int other = adj_[u].size() <= adj_[v].size() ? v : u;
  return std::binary_search(nbrs.begin(), nbrs.end(), other);
}

const std::vector<int>& Graph::neighbors(int v) const {
  check_vertex(v);
  return adj_[v];
}

int Graph::degree(int v) const {
  check_vertex(v);
  return static_cast<int>(adj_[v].size());
}

int Graph::max_degree() const {
  int d = 0;
  for (const auto& nbrs : adj_) d = std::max(d, static_cast<int>(nbrs.size()));
  return d;
}

int Graph::min_degree() const {
  if (n_ == 0) return 0;
  int d = n_;
  for (const auto& nbrs : adj_) d = std::min(d, static_cast<int>(nbrs.size()));
  return d;
}

Graph complement(const Graph& g) {
  const int n = g.order();
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<size_t>(n) * (n - 1) / 2 - g.size());
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!g.has_edge(u, v)) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edge_list(n, edges);
}

bool is_tree(const Graph& g) {
  const int n = g.order();
  if (n < 1) return false;
  if (g.size() != n - 1) return false;
  std::vector<char> seen(n, 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int w : g.neighbors(u)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        q.push(w);
      }
    }
  }
  return reached == n;
}

std::optional<int> distance(const Graph& g, int u, int v) {
  g.check_vertex(u);
  g.check_vertex(v);
  if (u == v) return 0;
  std::vector<int> dist(g.order(), -1);
  std::queue<int> q;
  q.push(u);
  dist[u] = 0;
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    for (int w : g.neighbors(x)) {
      if (dist[w] < 0) {
        dist[w] = dist[x] + 1;
        if (w == v) return dist[w];
        q.push(w);
      }
    }
  }
  return std::nullopt;
}

int max_leaf_concentration(const Graph& t) {
  if (t.order() < 2) throw TooSmall("leaf concentration needs at least 2 vertices");
  if (!is_tree(t)) throw NotATree("leaf concentration is defined for trees");
  int best = 0;
  for (int v = 0; v < t.order(); ++v) {
    int leaves = 0;
    for (int w : t.neighbors(v)) {
      if (t.degree(w) == 1) ++leaves;
    }
    best = std::max(best, leaves);
  }
  return best;
}

namespace {

Graph path_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edge_list(n, edges);
}

Graph star_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
  return Graph::from_edge_list(n, edges);
}

Graph cycle_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::from_edge_list(n, edges);
}

Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph::from_edge_list(n, edges);
}

Graph type1_tree(int a, int b) {
  if (!(a >= b && b >= 1)) throw InvalidFamilyParams("Type1 requires a >= b >= 1");
  std::vector<std::pair<int, int>> edges;
  edges.emplace_back(0, 1);
  int next = 2;
  for (int i = 0; i < a; ++i) edges.emplace_back(0, next++);
  for (int i = 0; i < b; ++i) edges.emplace_back(1, next++);
  return Graph::from_edge_list(a + b + 2, edges);
}

Graph type2_tree(int a, int b) {
  if (!(a >= b && b >= 0) || (a == 0 && b == 0)) {
    throw InvalidFamilyParams("Type2 requires a >= b >= 0 and (a, b) != (0, 0)");
  }
  std::vector<std::pair<int, int>> edges = {{0, 1}, {1, 2}, {2, 3}};
  int next = 4;
  for (int i = 0; i < a; ++i) edges.emplace_back(0, next++);
  for (int i = 0; i < b; ++i) edges.emplace_back(3, next++);
  return Graph::from_edge_list(a + b + 4, edges);
}

}  // namespace

Graph make_family(const TreeFamily& f) {
  using Tag = TreeFamily::Tag;
  switch (f.tag) {
    case Tag::Path:
      if (f.n < 1) throw InvalidFamilyParams("path requires n >= 1");
      return path_graph(f.n);
    case Tag::Star:
      if (f.n < 1) throw InvalidFamilyParams("star requires n >= 1");
      return star_graph(f.n);
    case Tag::Cycle:
      if (f.n < 3) throw InvalidFamilyParams("cycle requires n >= 3");
      return cycle_graph(f.n);
    case Tag::Complete:
      if (f.n < 1) throw InvalidFamilyParams("complete graph requires n >= 1");
      return complete_graph(f.n);
    case Tag::Type1:
      return type1_tree(f.a, f.b);
    case Tag::Type2:
      return type2_tree(f.a, f.b);
  }
  throw InvalidFamilyParams("unknown family tag");
}

}  // namespace seidel
