#pragma once

#include <cstdint>
#include <optional>

#include "seidel/graph.hpp"

namespace seidel {

/// Margin for energy-vs-bound comparisons; the eigensolver's 1e-10
/// tolerance leaves two orders of magnitude to spare.
inline constexpr double kBoundTol = 1e-8;

/// 2n - 2, the Seidel energy of K_n.
double haemers_bound(int n);

/// n - 4 + sqrt(n^2 - 2n + 4 + 4*sqrt(3/4 n^2 + nop)). Requires n >= 4
/// (OutOfDomain below).
double aekn_lower_bound(int n, long long nop);

/// 2n - 6 + sqrt(2(n - d_stat)). Requires n >= 2 and 1 <= d_stat <= n-1
/// (OutOfDomain otherwise). Stronger than the Haemers bound iff n - D >= 8.
double tree_lower_bound(int n, int d_stat);

/// The trees the size and chain lemmas exclude: stars, P4, P5, P6.
bool is_excluded_tree(const Graph& t);

/// The chained inequality behind the main bound:
///   N_op >= |E(Lambda)|*(n-3) >= n(n-3)(n-D)/2 >= (n-2)^2 (n-D)/2.
/// All integers; the last right-hand side can be a half-integer, so it is
/// stored doubled. holds checks the three steps exactly.
struct ChainedBound {
  long long nop = 0;
  long long lambda_edges = 0;
  long long rhs1 = 0;
  long long rhs2 = 0;
  long long twice_rhs3 = 0;
  bool holds = false;
};

/// Requires a non-excluded tree with n >= 4 (ExcludedTree otherwise).
ChainedBound chained_nop_bound(const Graph& t);

/// |E(Lambda(T))| >= n(n - D)/2, doubled to stay integral.
struct LambdaSizeCheck {
  long long lambda_edges = 0;
  long long twice_bound = 0;
  bool holds = false;
};

LambdaSizeCheck verify_lemma_lambda_size(const Graph& t);

/// min over Lambda-edges uv of odd_pairs_with_first(G, {u,v}) against
/// n - 3. Vacuously holds (min_count empty) when Lambda has no edges.
struct PerEdgeCheck {
  std::optional<int> min_count;
  int bound = 0;
  bool holds = false;
};

PerEdgeCheck verify_lemma_per_edge(const Graph& g);

/// classify_lambda_nonedge over every Lambda-nonedge of a tree; counts per
/// case. all_classified means no ClassificationFailure fired and every
/// returned case agrees with the tree distance of its pair.
struct ClassificationCheck {
  int nonedges_checked = 0;
  int twin_leaves = 0;
  int type1_hubs = 0;
  int type2_hubs = 0;
  bool all_classified = false;
};

ClassificationCheck verify_classification(const Graph& t);

/// Everything the sweep records about one tree.
struct BoundReport {
  int n = 0;
  int d_stat = 0;
  long long nop = 0;
  long long lambda_edges = 0;
  double energy = 0.0;
  double haemers = 0.0;
  std::optional<double> aekn;  // n >= 4 only
  double tree_bound = 0.0;
  double slack_haemers = 0.0;
  std::optional<double> slack_aekn;
  double slack_tree = 0.0;
  bool passed = false;
};

BoundReport check_tree(const Graph& t, double tol = kBoundTol);

enum class AverageMode { Exact, MonteCarlo };

/// Average of D over uniformly random labeled trees on n vertices, either
/// by full enumeration (exact integer numerator over n^(n-2)) or sampling.
struct AverageDResult {
  int n = 0;
  AverageMode mode = AverageMode::Exact;
  double mean = 0.0;
  long long exact_numerator = 0;  // Exact mode
  long long denominator = 0;      // Exact mode: n^(n-2)
  long long samples = 0;          // MonteCarlo mode
  double std_error = 0.0;         // MonteCarlo mode
  std::uint64_t seed = 0;         // MonteCarlo mode
};

/// Guarded to 2 <= n <= 9 (EnumerationTooLarge beyond).
AverageDResult average_D_exact(int n);

/// Deterministic given the seed; samples are indexed, so any partition of
/// the index range yields the same result. std_error is the unbiased
/// sample standard deviation over sqrt(samples).
AverageDResult average_D_monte_carlo(int n, long long samples, std::uint64_t seed);

}  // namespace seidel
