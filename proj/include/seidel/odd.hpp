#pragma once

#include "seidel/graph.hpp"

namespace seidel {

/// Unordered 2-subset {u, v} of vertices; normalized to u < v.
struct VertexPairSet {
  int u;
  int v;
  VertexPairSet(int a, int b);
  friend bool operator==(const VertexPairSet&, const VertexPairSet&) = default;
};

/// The three shapes a Lambda-nonedge of a tree can take.
enum class NonedgeCase { Case1_TwinLeaves, Case2_Type1Hubs, Case3_Type2Hubs };

/// Odd pairs are counted over ordered (X, Y): (X, Y) and (Y, X) both count.
/// The unordered convention would halve count_odd_pairs.
inline constexpr bool kOddPairsCountedOrdered = true;

/// |E(X, Y)|: edges with one endpoint in X and the other in Y. X and Y must
/// be disjoint (NotDisjoint otherwise). Always in 0..4.
int count_cut_edges(const Graph& g, VertexPairSet x, VertexPairSet y);

/// True iff |E(X, Y)| is odd (1 or 3).
bool is_odd_pair(const Graph& g, VertexPairSet x, VertexPairSet y);

/// N_op(G): number of ordered pairs (X, Y) of disjoint 2-subsets with odd
/// cut count. Zero for n <= 3.
long long count_odd_pairs(const Graph& g);

/// Number of 2-subsets Y disjoint from X with |E(X, Y)| odd. Summing over
/// all X gives count_odd_pairs.
int odd_pairs_with_first(const Graph& g, VertexPairSet x);

/// Lambda(G): same vertices, edge uv iff some odd pair has first component
/// {u, v}.
Graph lambda_graph(const Graph& g);

/// lambda(v): degree of v in lambda_graph(g).
int lambda_degree(const Graph& g, int v);

/// Classifies a Lambda-nonedge {u, v} of a tree (n >= 4) by the distance
/// d(u, v) in T: d = 2 twin leaves, d = 1 adjacent hubs of a double star
/// (the star itself is the b = 0 instance), d = 3 outer hubs of a double
/// broom. Throws IsLambdaEdge if uv is in Lambda(T); ClassificationFailure
/// if no shape matches (which would falsify the classification).
NonedgeCase classify_lambda_nonedge(const Graph& t, int u, int v);

}  // namespace seidel
