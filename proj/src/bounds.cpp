#include "seidel/bounds.hpp"

#include <cmath>
#include <stdexcept>

#include "seidel/errors.hpp"
#include "seidel/odd.hpp"
#include "seidel/rng.hpp"
#include "seidel/spectral.hpp"
#include "seidel/treegen.hpp"

namespace seidel {

double haemers_bound(int n) {
  if (n < 1) throw OutOfDomain("haemers_bound: need n >= 1");
  return 2.0 * n - 2.0;
}

double aekn_lower_bound(int n, long long nop) {
  if (n < 4) throw OutOfDomain("aekn_lower_bound: need n >= 4");
  if (nop < 0) throw OutOfDomain("aekn_lower_bound: nop must be nonnegative");
  const double nn = static_cast<double>(n);
  const double inner = std::sqrt(0.75 * nn * nn + static_cast<double>(nop));
  return nn - 4.0 + std::sqrt(nn * nn - 2.0 * nn + 4.0 + 4.0 * inner);
}

double tree_lower_bound(int n, int d_stat) {
  if (n < 2) throw OutOfDomain("tree_lower_bound: need n >= 2");
  if (d_stat < 1 || d_stat > n - 1) throw OutOfDomain("tree_lower_bound: need 1 <= D <= n-1");
  return 2.0 * n - 6.0 + std::sqrt(2.0 * (n - d_stat));
}

bool is_excluded_tree(const Graph& t) {
  if (!is_tree(t)) throw NotATree("is_excluded_tree: not a tree");
  const int n = t.order();
  if (n >= 2 && t.max_degree() == n - 1) return true;  // star
  const bool is_path = t.max_degree() <= 2;
  return is_path && n >= 4 && n <= 6;
}

namespace {

void require_lemma_tree(const Graph& t, const char* who) {
  if (t.order() < 4) throw TooSmall(std::string(who) + ": need n >= 4");
  if (!is_tree(t)) throw NotATree(std::string(who) + ": not a tree");
  if (is_excluded_tree(t)) throw ExcludedTree(std::string(who) + ": tree is excluded");
}

}  // namespace

ChainedBound chained_nop_bound(const Graph& t) {
  require_lemma_tree(t, "chained_nop_bound");
  const long long n = t.order();
  const long long d = max_leaf_concentration(t);
  ChainedBound out;
  out.nop = count_odd_pairs(t);
  out.lambda_edges = lambda_graph(t).size();
  out.rhs1 = out.lambda_edges * (n - 3);
  out.rhs2 = n * (n - 3) * (n - d) / 2;  // n(n-3) is even
  out.twice_rhs3 = (n - 2) * (n - 2) * (n - d);
  out.holds = out.nop >= out.rhs1 && out.rhs1 >= out.rhs2 && 2 * out.rhs2 >= out.twice_rhs3;
  return out;
}

LambdaSizeCheck verify_lemma_lambda_size(const Graph& t) {
  require_lemma_tree(t, "verify_lemma_lambda_size");
  const long long n = t.order();
  const long long d = max_leaf_concentration(t);
  LambdaSizeCheck out;
  out.lambda_edges = lambda_graph(t).size();
  out.twice_bound = n * (n - d);
  out.holds = 2 * out.lambda_edges >= out.twice_bound;
  return out;
}

PerEdgeCheck verify_lemma_per_edge(const Graph& g) {
  PerEdgeCheck out;
  out.bound = g.order() - 3;
  const Graph lam = lambda_graph(g);
  for (const Edge& e : lam.edges()) {
    const int c = odd_pairs_with_first(g, VertexPairSet(e.u, e.v));
    if (!out.min_count || c < *out.min_count) out.min_count = c;
  }
  out.holds = !out.min_count || *out.min_count >= out.bound;
  return out;
}

ClassificationCheck verify_classification(const Graph& t) {
  if (t.order() < 4) throw TooSmall("verify_classification: need n >= 4");
  if (!is_tree(t)) throw NotATree("verify_classification: not a tree");
  const Graph lam = lambda_graph(t);
  ClassificationCheck out;
  out.all_classified = true;
  for (int u = 0; u < t.order(); ++u) {
    for (int v = u + 1; v < t.order(); ++v) {
      if (lam.has_edge(u, v)) continue;
      ++out.nonedges_checked;
      int expected_d = 0;
      try {
        switch (classify_lambda_nonedge(t, u, v)) {
          case NonedgeCase::Case1_TwinLeaves:
            ++out.twin_leaves;
            expected_d = 2;
            break;
          case NonedgeCase::Case2_Type1Hubs:
            ++out.type1_hubs;
            expected_d = 1;
            break;
          case NonedgeCase::Case3_Type2Hubs:
            ++out.type2_hubs;
            expected_d = 3;
            break;
        }
      } catch (const ClassificationFailure&) {
        out.all_classified = false;
        continue;
      }
      if (distance(t, u, v) != expected_d) out.all_classified = false;
    }
  }
  return out;
}

BoundReport check_tree(const Graph& t, double tol) {
  if (t.order() < 2) throw TooSmall("check_tree: need n >= 2");
  if (!is_tree(t)) throw NotATree("check_tree: not a tree");
  BoundReport r;
  r.n = t.order();
  r.d_stat = max_leaf_concentration(t);
  r.nop = count_odd_pairs(t);
  r.lambda_edges = lambda_graph(t).size();
  r.energy = seidel_energy(t);
  r.haemers = haemers_bound(r.n);
  r.tree_bound = tree_lower_bound(r.n, r.d_stat);
  r.slack_haemers = r.energy - r.haemers;
  r.slack_tree = r.energy - r.tree_bound;
  r.passed = r.slack_haemers >= -tol && r.slack_tree >= -tol;
  if (r.n >= 4) {
    r.aekn = aekn_lower_bound(r.n, r.nop);
    r.slack_aekn = r.energy - *r.aekn;
    r.passed = r.passed && *r.slack_aekn >= -tol;
  }
  return r;
}

namespace {

long long ipow(long long base, int exp) {
  long long r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace

AverageDResult average_D_exact(int n) {
  if (n < 2 || n > 9) throw EnumerationTooLarge("average_D_exact: n must be in 2..9");
  AverageDResult out;
  out.n = n;
  out.mode = AverageMode::Exact;
  out.denominator = ipow(n, n - 2);
  detail::DStatAccumulator acc(n);
  long long sum = 0;
  detail::for_each_prufer_code(n,
                               [&](const std::vector<int>& code) { sum += acc.d_stat(code); });
  out.exact_numerator = sum;
  out.mean = static_cast<double>(sum) / static_cast<double>(out.denominator);
  return out;
}

AverageDResult average_D_monte_carlo(int n, long long samples, std::uint64_t seed) {
  if (n < 2) throw TooSmall("average_D_monte_carlo: need n >= 2");
  if (samples < 1) throw std::invalid_argument("average_D_monte_carlo: need samples >= 1");
  AverageDResult out;
  out.n = n;
  out.mode = AverageMode::MonteCarlo;
  out.samples = samples;
  out.seed = seed;

  detail::DStatAccumulator acc(n);
  std::vector<int> code(n - 2);
  long long sum = 0;
  long long sumsq = 0;
  for (long long i = 0; i < samples; ++i) {
    SplitMix64 rng(splitmix64_at(seed, static_cast<std::uint64_t>(i)));
    for (int& x : code) x = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
    const long long d = acc.d_stat(code);
    sum += d;
    sumsq += d * d;
  }
  out.mean = static_cast<double>(sum) / static_cast<double>(samples);
  if (samples >= 2) {
    const double var =
        (static_cast<double>(sumsq) - static_cast<double>(samples) * out.mean * out.mean) /
        static_cast<double>(samples - 1);
    out.std_error = std::sqrt(std::max(var, 0.0) / static_cast<double>(samples));
  }
  return out;
}

}  // namespace seidel
