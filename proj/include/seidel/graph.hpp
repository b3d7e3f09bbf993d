#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "seidel/errors.hpp"

namespace seidel {

/// Unordered edge {u, v}, stored with u < v.
struct Edge {
  int u;
  int v;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1. Immutable after construction;
/// adjacency is kept both as a sorted edge list and as per-vertex neighbor
/// lists so queries can pick whichever is cheaper.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from an edge list. Duplicate pairs (in either order)
  /// collapse to one edge. Throws InvalidVertex for out-of-range endpoints
  /// and SelfLoop for u == v.
  static Graph from_edge_list(int n, std::span<const std::pair<int, int>> edges);
  static Graph from_edge_list(int n, std::initializer_list<std::pair<int, int>> edges);

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }

  bool has_edge(int u, int v) const;
  const std::vector<int>& neighbors(int v) const;
  int degree(int v) const;
  const std::vector<Edge>& edges() const { return edges_; }

  int max_degree() const;
  int min_degree() const;

  void check_vertex(int v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;             // sorted, unique, u < v
  std::vector<std::vector<int>> adj_;   // sorted neighbor lists
};

/// Edge {u,v} present in the output iff absent in g; order unchanged.
Graph complement(const Graph& g);

/// True iff g is connected with exactly n-1 edges (n >= 1).
bool is_tree(const Graph& g);

/// BFS distance in edges; nullopt if v is unreachable from u.
std::optional<int> distance(const Graph& g, int u, int v);

/// D(T): the maximum, over vertices, of the number of leaf neighbors.
/// Requires a tree on at least 2 vertices.
int max_leaf_concentration(const Graph& t);

/// Named tree/graph families. Type1(a, b) is the double star: two adjacent
/// hubs carrying a and b leaves (a >= b >= 1, order a+b+2). Type2(a, b) is
/// the double broom: a path of four hubs with a extra leaves on one outer
/// hub and b on the other (a >= b >= 0, (a, b) != (0, 0), order a+b+4).
/// Hubs take the lowest labels (Type1: 0,1; Type2: 0,1,2,3), then the
/// leaves of the first hub in ascending order, then those of the second.
struct TreeFamily {
  enum class Tag { Path, Star, Cycle, Complete, Type1, Type2 };

  Tag tag;
  int n = 0;  // Path/Star/Cycle/Complete
  int a = 0;  // Type1/Type2
  int b = 0;

  static TreeFamily path(int n) { return {Tag::Path, n, 0, 0}; }
  static TreeFamily star(int n) { return {Tag::Star, n, 0, 0}; }
  static TreeFamily cycle(int n) { return {Tag::Cycle, n, 0, 0}; }
  static TreeFamily complete(int n) { return {Tag::Complete, n, 0, 0}; }
  static TreeFamily type1(int a, int b) { return {Tag::Type1, 0, a, b}; }
  static TreeFamily type2(int a, int b) { return {Tag::Type2, 0, a, b}; }
};

/// Materializes a family member. Throws InvalidFamilyParams when the
/// parameters violate the family's constraints.
Graph make_family(const TreeFamily& f);

}  // namespace seidel
