#include "seidel/odd.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <utility>
#include <vector>

#include "seidel/errors.hpp"

namespace seidel {

VertexPairSet::VertexPairSet(int a, int b) : u(std::min(a, b)), v(std::max(a, b)) {
  if (a == b) throw std::invalid_argument("VertexPairSet: u == v");
}

int count_cut_edges(const Graph& g, VertexPairSet x, VertexPairSet y) {
  g.check_vertex(x.u);
  g.check_vertex(x.v);
  g.check_vertex(y.u);
  g.check_vertex(y.v);
  if (x.u == y.u || x.u == y.v || x.v == y.u || x.v == y.v)
    throw NotDisjoint("count_cut_edges: X and Y overlap");
  int c = 0;
  for (int a : {x.u, x.v})
    for (int b : {y.u, y.v})
      if (g.has_edge(a, b)) ++c;
  return c;
}

bool is_odd_pair(const Graph& g, VertexPairSet x, VertexPairSet y) {
  return count_cut_edges(g, x, y) % 2 == 1;
}

namespace {

// Cut-count parity with X = {a, b} fixed, scanning all Y disjoint from X.
// stop_at_first: return 1 as soon as one odd Y is seen.
int odd_seconds(const Graph& g, int a, int b, bool stop_at_first) {
  const int n = g.order();
  int count = 0;
  for (int c = 0; c < n; ++c) {
    if (c == a || c == b) continue;
    for (int d = c + 1; d < n; ++d) {
      if (d == a || d == b) continue;
      const int cut = (g.has_edge(a, c) ? 1 : 0) + (g.has_edge(a, d) ? 1 : 0) +
                      (g.has_edge(b, c) ? 1 : 0) + (g.has_edge(b, d) ? 1 : 0);
      if (cut % 2 == 1) {
        ++count;
        if (stop_at_first) return count;
      }
    }
  }
  return count;
}

}  // namespace

long long count_odd_pairs(const Graph& g) {
  const int n = g.order();
  long long total = 0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) total += odd_seconds(g, a, b, false);
  return total;
}

int odd_pairs_with_first(const Graph& g, VertexPairSet x) {
  g.check_vertex(x.u);
  g.check_vertex(x.v);
  return odd_seconds(g, x.u, x.v, false);
}

Graph lambda_graph(const Graph& g) {
  const int n = g.order();
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (odd_seconds(g, a, b, true) > 0) edges.emplace_back(a, b);
  return Graph::from_edge_list(n, edges);
}

int lambda_degree(const Graph& g, int v) {
  g.check_vertex(v);
  int deg = 0;
  for (int u = 0; u < g.order(); ++u)
    if (u != v && odd_seconds(g, std::min(u, v), std::max(u, v), true) > 0) ++deg;
  return deg;
}

namespace {

// Unique u..v path in a tree, endpoints included.
std::vector<int> tree_path(const Graph& t, int u, int v) {
  const int n = t.order();
  std::vector<int> parent(n, -1);
  std::vector<char> seen(n, 0);
  std::queue<int> q;
  q.push(u);
  seen[u] = 1;
  while (!q.empty()) {
    const int w = q.front();
    q.pop();
    if (w == v) break;
    for (int x : t.neighbors(w)) {
      if (!seen[x]) {
        seen[x] = 1;
        parent[x] = w;
        q.push(x);
      }
    }
  }
  std::vector<int> path;
  for (int w = v; w != -1; w = parent[w]) path.push_back(w);
  std::reverse(path.begin(), path.end());
  return path;
}

// True iff every vertex outside `core` is a leaf adjacent to h1 or h2.
bool only_pendant_leaves_outside(const Graph& t, const std::vector<int>& core, int h1, int h2) {
  std::vector<char> in_core(t.order(), 0);
  for (int w : core) in_core[w] = 1;
  for (int w = 0; w < t.order(); ++w) {
    if (in_core[w]) continue;
    if (t.degree(w) != 1) return false;
    const int nb = t.neighbors(w)[0];
    if (nb != h1 && nb != h2) return false;
  }
  return true;
}

}  // namespace

NonedgeCase classify_lambda_nonedge(const Graph& t, int u, int v) {
  t.check_vertex(u);
  t.check_vertex(v);
  if (u == v) throw std::invalid_argument("classify_lambda_nonedge: u == v");
  if (t.order() < 4) throw TooSmall("classify_lambda_nonedge: need n >= 4");
  if (!is_tree(t)) throw NotATree("classify_lambda_nonedge: not a tree");
  if (odd_seconds(t, std::min(u, v), std::max(u, v), true) > 0)
    throw IsLambdaEdge("classify_lambda_nonedge: uv is an edge of Lambda(T)");

  const std::vector<int> path = tree_path(t, u, v);
  const int d = static_cast<int>(path.size()) - 1;
  switch (d) {
    case 2:
      if (t.degree(u) == 1 && t.degree(v) == 1 && t.neighbors(u)[0] == t.neighbors(v)[0])
        return NonedgeCase::Case1_TwinLeaves;
      break;
    case 1:
      if (only_pendant_leaves_outside(t, path, u, v)) return NonedgeCase::Case2_Type1Hubs;
      break;
    case 3:
      if (t.degree(path[1]) == 2 && t.degree(path[2]) == 2 &&
          only_pendant_leaves_outside(t, path, u, v))
        return NonedgeCase::Case3_Type2Hubs;
      break;
    default:
      break;
  }
  throw ClassificationFailure("classify_lambda_nonedge: no case matches");
}

}  // namespace seidel
