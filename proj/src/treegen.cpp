#include "seidel/treegen.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <stdexcept>
#include <unordered_set>
#include <utility>

#include "seidel/errors.hpp"
#include "seidel/rng.hpp"

namespace seidel {

namespace {

// Pointer decode: writes the n-1 edges of the tree with Prufer sequence
// seq into eu/ev. deg is scratch. The smallest-leaf invariant keeps at
// most one pending leaf below ptr, so the whole pass is O(n).
void decode_edges(std::span<const int> seq, std::vector<int>& deg, std::vector<int>& eu,
                  std::vector<int>& ev) {
  const int n = static_cast<int>(seq.size()) + 2;
  deg.assign(n, 1);
  for (int c : seq) ++deg[c];
  int ptr = 0;
  while (deg[ptr] != 1) ++ptr;
  int leaf = ptr;
  int m = 0;
  for (int c : seq) {
    eu[m] = leaf;
    ev[m] = c;
    ++m;
    if (--deg[c] == 1 && c < ptr) {
      leaf = c;
    } else {
      ++ptr;
      while (deg[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  eu[m] = leaf;
  ev[m] = n - 1;
}

std::vector<std::pair<int, int>> edge_pairs(const std::vector<int>& eu, const std::vector<int>& ev,
                                            int m) {
  std::vector<std::pair<int, int>> edges(m);
  for (int i = 0; i < m; ++i) edges[i] = {eu[i], ev[i]};
  return edges;
}

std::string code_below(const std::vector<std::vector<int>>& adj, int v, int parent) {
  std::vector<std::string> kids;
  kids.reserve(adj[v].size());
  for (int w : adj[v])
    if (w != parent) kids.push_back(code_below(adj, w, v));
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (const auto& k : kids) s += k;
  s += ')';
  return s;
}

std::vector<int> centroids_of_adj(const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  if (n == 1) return {0};
  std::vector<int> parent(n, -1), order, size(n, 1);
  order.reserve(n);
  std::vector<int> stack{0};
  std::vector<char> seen(n, 0);
  seen[0] = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (int w : adj[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        parent[w] = v;
        stack.push_back(w);
      }
    }
  }
  for (int i = n - 1; i >= 1; --i) size[parent[order[i]]] += size[order[i]];
  int best = n;
  std::vector<int> cs;
  for (int v = 0; v < n; ++v) {
    int biggest = n - size[v];
    for (int w : adj[v])
      if (parent[w] == v) biggest = std::max(biggest, size[w]);
    if (biggest < best) {
      best = biggest;
      cs.assign(1, v);
    } else if (biggest == best) {
      cs.push_back(v);
    }
  }
  return cs;  // ascending: v scans upward
}

std::string canonical_of_adj(const std::vector<std::vector<int>>& adj) {
  const std::vector<int> cs = centroids_of_adj(adj);
  std::string code = code_below(adj, cs[0], -1);
  if (cs.size() == 2) code = std::min(code, code_below(adj, cs[1], -1));
  return code;
}

std::vector<std::vector<int>> adjacency_of(const Graph& g) {
  std::vector<std::vector<int>> adj(g.order());
  for (int v = 0; v < g.order(); ++v) adj[v] = g.neighbors(v);
  return adj;
}

}  // namespace

Graph prufer_decode(const PruferCode& c) {
  const int n = c.order();
  for (int x : c.seq)
    if (x < 0 || x >= n) throw InvalidPrufer("prufer_decode: entry out of range");
  std::vector<int> deg, eu(n - 1), ev(n - 1);
  decode_edges(c.seq, deg, eu, ev);
  return Graph::from_edge_list(n, edge_pairs(eu, ev, n - 1));
}

PruferCode prufer_encode(const Graph& t) {
  const int n = t.order();
  if (n < 2) throw TooSmall("prufer_encode: need n >= 2");
  if (!is_tree(t)) throw NotATree("prufer_encode: not a tree");

  // Root at n-1; when the smallest leaf is peeled its live neighbor is
  // always its parent, so one BFS gives every output.
  std::vector<int> parent(n, -1);
  std::vector<char> seen(n, 0);
  std::vector<int> stack{n - 1};
  seen[n - 1] = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : t.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        parent[w] = v;
        stack.push_back(w);
      }
    }
  }
  std::vector<int> deg(n);
  for (int v = 0; v < n; ++v) deg[v] = t.degree(v);

  PruferCode out;
  out.seq.reserve(n - 2);
  if (n == 2) return out;
  int ptr = 0;
  while (deg[ptr] != 1) ++ptr;
  int leaf = ptr;
  for (int i = 0; i < n - 2; ++i) {
    const int p = parent[leaf];
    out.seq.push_back(p);
    if (--deg[p] == 1 && p < ptr) {
      leaf = p;
    } else {
      ++ptr;
      while (deg[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  return out;
}

void enumerate_labeled_trees(int n, const TreeVisitor& visit) {
  if (n < 2 || n > 10) throw EnumerationTooLarge("enumerate_labeled_trees: n must be in 2..10");
  std::vector<int> deg, eu(n - 1), ev(n - 1);
  detail::for_each_prufer_code(n, [&](const std::vector<int>& code) {
    decode_edges(code, deg, eu, ev);
    visit(Graph::from_edge_list(n, edge_pairs(eu, ev, n - 1)));
  });
}

Graph sample_uniform_labeled_tree(int n, std::uint64_t seed) {
  if (n < 2) throw TooSmall("sample_uniform_labeled_tree: need n >= 2");
  SplitMix64 rng(seed);
  PruferCode c;
  c.seq.resize(n - 2);
  for (int& x : c.seq) x = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
  return prufer_decode(c);
}

CanonicalTreeForm canonical_form(const Graph& t) {
  if (!is_tree(t)) throw NotATree("canonical_form: not a tree");
  return CanonicalTreeForm{canonical_of_adj(adjacency_of(t))};
}

void enumerate_free_trees(int n, const TreeVisitor& visit) {
  if (n < 1 || n > 12) throw EnumerationTooLarge("enumerate_free_trees: n must be in 1..12");
  if (n <= 9)
    detail::enumerate_free_trees_dedupe(n, visit);
  else
    detail::enumerate_free_trees_levelseq(n, visit);
}

const std::vector<Graph>& free_trees(int n) {
  if (n < 1 || n > 12) throw EnumerationTooLarge("free_trees: n must be in 1..12");
  static std::array<std::vector<Graph>, 13> cache;
  static std::array<std::once_flag, 13> once;
  std::call_once(once[n], [n] {
    enumerate_free_trees(n, [&](const Graph& t) { cache[n].push_back(t); });
  });
  return cache[n];
}

namespace detail {

void for_each_prufer_code(int n, const std::function<void(const std::vector<int>&)>& visit) {
  if (n < 2) throw std::invalid_argument("for_each_prufer_code: need n >= 2");
  std::vector<int> code(n - 2, 0);
  for (;;) {
    visit(code);
    int i = n - 3;
    while (i >= 0 && code[i] == n - 1) code[i--] = 0;
    if (i < 0) break;
    ++code[i];
  }
}

void for_each_rooted_level_sequence(int n,
                                    const std::function<void(const std::vector<int>&)>& visit) {
  if (n < 1) throw std::invalid_argument("for_each_rooted_level_sequence: need n >= 1");
  std::vector<int> l(n);
  for (int i = 0; i < n; ++i) l[i] = i + 1;
  for (;;) {
    visit(l);
    int p = -1;
    for (int i = n - 1; i >= 0; --i) {
      if (l[i] > 2) {
        p = i;
        break;
      }
    }
    if (p < 0) break;
    int q = p - 1;
    while (l[q] != l[p] - 1) --q;
    for (int i = p; i < n; ++i) l[i] = l[i - (p - q)];
  }
}

void enumerate_free_trees_dedupe(int n, const TreeVisitor& visit) {
  if (n == 1) {
    visit(Graph::from_edge_list(1, {}));
    return;
  }
  std::unordered_set<std::string> seen;
  std::vector<int> deg, eu(n - 1), ev(n - 1);
  std::vector<std::vector<int>> adj(n);
  for_each_prufer_code(n, [&](const std::vector<int>& code) {
    decode_edges(code, deg, eu, ev);
    for (auto& a : adj) a.clear();
    for (int i = 0; i < n - 1; ++i) {
      adj[eu[i]].push_back(ev[i]);
      adj[ev[i]].push_back(eu[i]);
    }
    if (seen.insert(canonical_of_adj(adj)).second)
      visit(Graph::from_edge_list(n, edge_pairs(eu, ev, n - 1)));
  });
}

void enumerate_free_trees_levelseq(int n, const TreeVisitor& visit) {
  if (n == 1) {
    visit(Graph::from_edge_list(1, {}));
    return;
  }
  std::vector<std::vector<int>> adj(n);
  std::vector<int> last(n + 2, 0);
  for_each_rooted_level_sequence(n, [&](const std::vector<int>& l) {
    for (auto& a : adj) a.clear();
    last[1] = 0;
    for (int i = 1; i < n; ++i) {
      const int p = last[l[i] - 1];
      adj[p].push_back(i);
      adj[i].push_back(p);
      last[l[i]] = i;
    }
    // Keep one rooting per free tree: the root must be a centroid, and on
    // a bicentroid the rooting whose root code is the smaller one wins
    // (ties mean the two rootings are the same rooted tree).
    const std::vector<int> cs = centroids_of_adj(adj);
    bool keep = cs[0] == 0;
    if (keep && cs.size() == 2) keep = code_below(adj, 0, -1) <= code_below(adj, cs[1], -1);
    if (keep) {
      std::vector<std::pair<int, int>> edges;
      edges.reserve(n - 1);
      for (int v = 0; v < n; ++v)
        for (int w : adj[v])
          if (v < w) edges.emplace_back(v, w);
      visit(Graph::from_edge_list(n, edges));
    }
  });
}

std::vector<int> tree_centroids(const Graph& t) {
  if (!is_tree(t)) throw NotATree("tree_centroids: not a tree");
  return centroids_of_adj(adjacency_of(t));
}

std::string rooted_code(const Graph& t, int root) {
  if (!is_tree(t)) throw NotATree("rooted_code: not a tree");
  t.check_vertex(root);
  return code_below(adjacency_of(t), root, -1);
}

DStatAccumulator::DStatAccumulator(int n)
    : n_(n), deg_(n), leaf_neighbors_(n), eu_(n - 1), ev_(n - 1) {
  if (n < 2) throw TooSmall("DStatAccumulator: need n >= 2");
}

int DStatAccumulator::d_stat(std::span<const int> seq) {
  decode_edges(seq, deg_, eu_, ev_);
  std::fill(deg_.begin(), deg_.end(), 0);
  for (int i = 0; i < n_ - 1; ++i) {
    ++deg_[eu_[i]];
    ++deg_[ev_[i]];
  }
  std::fill(leaf_neighbors_.begin(), leaf_neighbors_.end(), 0);
  for (int i = 0; i < n_ - 1; ++i) {
    if (deg_[eu_[i]] == 1) ++leaf_neighbors_[ev_[i]];
    if (deg_[ev_[i]] == 1) ++leaf_neighbors_[eu_[i]];
  }
  return *std::max_element(leaf_neighbors_.begin(), leaf_neighbors_.end());
}

}  // namespace detail

}  // namespace seidel
