#pragma once

// Exact real-root isolation for integer polynomials, used as an independent
// oracle against the floating-point eigensolver. Rational Sturm sequences,
// so no rounding enters anywhere before the final conversion to double.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace oracle {

using Rat = boost::multiprecision::cpp_rational;
using Poly = std::vector<Rat>;  // ascending coefficients, trimmed

inline Poly trim(Poly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

inline int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

inline Rat eval(const Poly& p, const Rat& x) {
  Rat acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

inline Poly derivative(const Poly& p) {
  Poly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<int>(i));
  return trim(std::move(d));
}

// Remainder of a / b. b must be nonzero.
inline Poly poly_rem(Poly a, const Poly& b) {
  if (b.empty()) throw std::invalid_argument("poly_rem: division by zero polynomial");
  while (degree(a) >= degree(b)) {
    const Rat factor = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
    a.pop_back();
    a = trim(std::move(a));
    if (a.empty()) break;
  }
  return a;
}

// Exact quotient a / b; throws if the division leaves a remainder.
inline Poly poly_div_exact(Poly a, const Poly& b) {
  if (b.empty()) throw std::invalid_argument("poly_div_exact: zero divisor");
  Poly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rat(0));
  while (degree(a) >= degree(b)) {
    const Rat factor = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    q[shift] = factor;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
    a.pop_back();
    a = trim(std::move(a));
  }
  if (!a.empty()) throw std::logic_error("poly_div_exact: nonzero remainder");
  return trim(std::move(q));
}

inline Poly make_monic(Poly p) {
  if (p.empty()) return p;
  const Rat lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

inline Poly poly_gcd(Poly a, Poly b) {
  a = trim(std::move(a));
  b = trim(std::move(b));
  while (!b.empty()) {
    Poly r = poly_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(std::move(a));
}

struct SturmChain {
  std::vector<Poly> seq;

  explicit SturmChain(const Poly& p) {
    seq.push_back(trim(p));
    Poly d = derivative(seq[0]);
    if (!d.empty()) seq.push_back(std::move(d));
    while (seq.size() >= 2 && !seq.back().empty()) {
      Poly r = poly_rem(seq[seq.size() - 2], seq.back());
      if (r.empty()) break;
      for (auto& c : r) c = -c;
      seq.push_back(std::move(r));
    }
  }

  int variations(const Rat& x) const {
    int count = 0;
    int prev = 0;
    for (const Poly& p : seq) {
      const Rat v = eval(p, x);
      const int s = v == 0 ? 0 : (v > 0 ? 1 : -1);
      if (s != 0) {
        if (prev != 0 && s != prev) ++count;
        prev = s;
      }
    }
    return count;
  }

  // Number of distinct roots in (a, b].
  int count_roots(const Rat& a, const Rat& b) const { return variations(a) - variations(b); }
};

// All real roots of every layer are bounded by the Cauchy bound of the base
// polynomial, so one bound serves the whole gcd tower.
inline Rat cauchy_bound(const Poly& p) {
  Rat m = 0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) m = std::max(m, Rat(abs(p[i] / p.back())));
  return m + 2;
}

struct RootWithMultiplicity {
  double value;
  int multiplicity;
};

// Real roots of the integer polynomial with the given ascending coefficients,
// sorted ascending, each paired with its exact multiplicity. Intervals are
// refined below width `eps` before the midpoint is rounded to double.
inline std::vector<RootWithMultiplicity> isolate_real_roots(
    const std::vector<long long>& int_coeffs, const Rat& eps = Rat(1, 1000000000000LL)) {
  Poly p;
  for (long long c : int_coeffs) p.push_back(Rat(c));
  p = trim(std::move(p));
  if (p.empty()) throw std::invalid_argument("isolate_real_roots: zero polynomial");
  if (degree(p) == 0) return {};

  // gcd tower: layer j has root z exactly when mult_p(z) > j.
  std::vector<Poly> layers{p};
  while (degree(layers.back()) >= 1) {
    Poly next = poly_gcd(layers.back(), derivative(layers.back()));
    if (degree(next) < 1) break;
    layers.push_back(std::move(next));
  }
  const Poly squarefree =
      layers.size() > 1 ? poly_div_exact(layers[0], layers[1]) : layers[0];

  const SturmChain chain(squarefree);
  std::vector<SturmChain> layer_chains;
  layer_chains.reserve(layers.size());
  for (const Poly& layer : layers) layer_chains.emplace_back(layer);

  const Rat bound = cauchy_bound(p);
  std::vector<std::pair<Rat, Rat>> work{{-bound, bound}};
  std::vector<std::pair<Rat, Rat>> isolated;
  while (!work.empty()) {
    auto [lo, hi] = work.back();
    work.pop_back();
    const int k = chain.count_roots(lo, hi);
    if (k == 0) continue;
    if (k == 1) {
      isolated.emplace_back(lo, hi);
      continue;
    }
    const Rat mid = (lo + hi) / 2;
    work.emplace_back(lo, mid);
    work.emplace_back(mid, hi);
  }

  std::vector<RootWithMultiplicity> roots;
  for (auto& [lo, hi] : isolated) {
    while (hi - lo > eps) {
      const Rat mid = (lo + hi) / 2;
      if (chain.count_roots(lo, mid) == 1)
        hi = mid;
      else
        lo = mid;
    }
    int mult = 0;
    for (const SturmChain& lc : layer_chains)
      if (lc.count_roots(lo, hi) >= 1) ++mult;
    // The interval ends half-open at hi; a root sitting exactly on hi is
    // counted by count_roots, and lo itself is never a root of the layer
    // below once the interval has shrunk around a single squarefree root.
    roots.push_back({static_cast<double>((lo + hi) / 2), mult});
  }
  std::sort(roots.begin(), roots.end(),
            [](const auto& a, const auto& b) { return a.value < b.value; });
  return roots;
}

// Roots expanded by multiplicity, ascending. Suitable for elementwise
// comparison against a symmetric eigensolver when all roots are real.
inline std::vector<double> real_roots_expanded(const std::vector<long long>& int_coeffs) {
  std::vector<double> out;
  for (const auto& r : isolate_real_roots(int_coeffs))
    for (int i = 0; i < r.multiplicity; ++i) out.push_back(r.value);
  return out;
}

}  // namespace oracle
