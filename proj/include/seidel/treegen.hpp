#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "seidel/graph.hpp"

namespace seidel {

/// Prufer sequence of a labeled tree on seq.size() + 2 vertices.
struct PruferCode {
  std::vector<int> seq;
  int order() const { return static_cast<int>(seq.size()) + 2; }
  friend bool operator==(const PruferCode&, const PruferCode&) = default;
};

/// The unique labeled tree with this code. Entries out of range ->
/// InvalidPrufer. O(n) pointer decode.
Graph prufer_decode(const PruferCode& c);

/// Inverse of prufer_decode; n >= 2 and is_tree required.
PruferCode prufer_encode(const Graph& t);

using TreeVisitor = std::function<void(const Graph&)>;

/// Every labeled tree on n vertices exactly once, Prufer codes in
/// lexicographic order; n^(n-2) trees total. Guarded to 2 <= n <= 10
/// (EnumerationTooLarge beyond).
void enumerate_labeled_trees(int n, const TreeVisitor& visit);

/// Decodes a code of n-2 iid uniform draws over 0..n-1: exactly uniform
/// over labeled trees, deterministic given the seed.
Graph sample_uniform_labeled_tree(int n, std::uint64_t seed);

/// Centroid-rooted canonical encoding; equal codes iff isomorphic trees.
struct CanonicalTreeForm {
  std::string code;
  friend bool operator==(const CanonicalTreeForm&, const CanonicalTreeForm&) = default;
  friend std::strong_ordering operator<=>(const CanonicalTreeForm& a,
                                          const CanonicalTreeForm& b) {
    return a.code <=> b.code;
  }
};

CanonicalTreeForm canonical_form(const Graph& t);

/// One representative per isomorphism class of trees on n vertices.
/// Guarded to 1 <= n <= 12. Labeled dedupe up to n = 9; level-sequence
/// successor generation with a centroid filter for n = 10..12.
void enumerate_free_trees(int n, const TreeVisitor& visit);

/// Cached materialization of enumerate_free_trees.
const std::vector<Graph>& free_trees(int n);

namespace detail {

/// All Prufer sequences of length n-2 over 0..n-1, lexicographic.
void for_each_prufer_code(int n, const std::function<void(const std::vector<int>&)>& visit);

/// Canonical level sequences (depths, root = 1, preorder) of all rooted
/// trees on n vertices, in the successor order of Beyer-Hedetniemi.
void for_each_rooted_level_sequence(int n,
                                    const std::function<void(const std::vector<int>&)>& visit);

void enumerate_free_trees_dedupe(int n, const TreeVisitor& visit);
void enumerate_free_trees_levelseq(int n, const TreeVisitor& visit);

/// The one or two centroids of a tree, ascending.
std::vector<int> tree_centroids(const Graph& t);

/// AHU code of the tree rooted at `root`: "(" + sorted child codes + ")".
std::string rooted_code(const Graph& t, int root);

/// Reusable flat-buffer decode for hot loops: D(T) of the tree with the
/// given Prufer sequence, no Graph construction.
class DStatAccumulator {
 public:
  explicit DStatAccumulator(int n);
  int d_stat(std::span<const int> seq);

 private:
  int n_;
  std::vector<int> deg_;
  std::vector<int> leaf_neighbors_;
  std::vector<int> eu_;
  std::vector<int> ev_;
};

}  // namespace detail

}  // namespace seidel
