#include "seidel/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "seidel/errors.hpp"

namespace seidel {

SymmetricMatrix::SymmetricMatrix(int dim) : dim_(dim) {
  if (dim < 0) throw std::invalid_argument("SymmetricMatrix: negative dimension");
  a_.assign(static_cast<size_t>(dim) * dim, 0.0);
}

SymmetricMatrix SymmetricMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  const int n = static_cast<int>(rows.size());
  SymmetricMatrix m(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n)
      throw std::invalid_argument("SymmetricMatrix: ragged rows");
    for (int j = 0; j < n; ++j) {
      if (rows[i][j] != rows[j][i])
        throw std::invalid_argument("SymmetricMatrix: not symmetric");
      m.a_[static_cast<size_t>(i) * n + j] = rows[i][j];
    }
  }
  return m;
}

void SymmetricMatrix::set(int i, int j, double value) {
  if (i < 0 || i >= dim_ || j < 0 || j >= dim_)
    throw std::out_of_range("SymmetricMatrix: index out of range");
  a_[static_cast<size_t>(i) * dim_ + j] = value;
  a_[static_cast<size_t>(j) * dim_ + i] = value;
}

double SymmetricMatrix::trace() const {
  double t = 0.0;
  for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double SymmetricMatrix::frobenius_norm() const {
  double s = 0.0;
  for (double x : a_) s += x * x;
  return std::sqrt(s);
}

SymmetricMatrix seidel_matrix(const Graph& g) {
  const int n = g.order();
  SymmetricMatrix s(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) s.set(i, j, g.has_edge(i, j) ? -1.0 : 1.0);
  return s;
}

namespace {

double off_diagonal_norm(const SymmetricMatrix& m) {
  const int n = m.dim();
  double s = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) s += 2.0 * m(i, j) * m(i, j);
  return std::sqrt(s);
}

}  // namespace

Spectrum symmetric_eigenvalues(SymmetricMatrix m, double tol) {
  if (tol <= 0.0) throw std::invalid_argument("symmetric_eigenvalues: tol must be positive");
  const int n = m.dim();
  Spectrum out;
  out.residual_tol = tol;
  if (n == 0) return out;

  const double threshold = tol * m.frobenius_norm();
  constexpr int kMaxSweeps = 100;

  bool converged = off_diagonal_norm(m) <= threshold;
  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = m(p, q);
        if (apq == 0.0) continue;
        const double app = m(p, p);
        const double aqq = m(q, q);
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        m.set(p, p, app - t * apq);
        m.set(q, q, aqq + t * apq);
        m.set(p, q, 0.0);
        for (int i = 0; i < n; ++i) {
          if (i == p || i == q) continue;
          const double aip = m(i, p);
          const double aiq = m(i, q);
          m.set(i, p, c * aip - s * aiq);
          m.set(i, q, s * aip + c * aiq);
        }
      }
    }
    converged = off_diagonal_norm(m) <= threshold;
  }
  if (!converged) throw EigenNoConvergence("Jacobi: no convergence within 100 sweeps");

  out.eigenvalues.reserve(n);
  for (int i = 0; i < n; ++i) out.eigenvalues.push_back(m(i, i));
  std::sort(out.eigenvalues.begin(), out.eigenvalues.end());
  return out;
}

double spectrum_energy(const Spectrum& s) {
  double e = 0.0;
  for (double x : s.eigenvalues) e += std::abs(x);
  return e;
}

double seidel_energy(const Graph& g, double tol) {
  return spectrum_energy(symmetric_eigenvalues(seidel_matrix(g), tol));
}

Graph seidel_switch(const Graph& g, const SwitchSpec& s) {
  const int n = g.order();
  std::vector<char> in_v1(n, 0);
  for (int v : s.v1) {
    g.check_vertex(v);
    in_v1[v] = 1;
  }
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const bool crosses = in_v1[u] != in_v1[v];
      if (g.has_edge(u, v) != crosses) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edge_list(n, edges);
}

std::vector<long long> charpoly_oracle(const SymmetricMatrix& m) {
  const int n = m.dim();
  if (n > 10) throw OracleTooLarge("charpoly_oracle: dim > 10");

  std::vector<long long> a(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double x = m(i, j);
      const double r = std::nearbyint(x);
      if (x != r || std::abs(x) > 1e15)
        throw std::invalid_argument("charpoly_oracle: non-integer entry");
      a[static_cast<size_t>(i) * n + j] = static_cast<long long>(r);
    }
  }

  // Faddeev-LeVerrier: M_1 = I, c_k = -tr(A*M_k)/k, M_{k+1} = A*M_k + c_k*I.
  // p(x) = x^n + c_1 x^{n-1} + ... + c_n; every division is exact over Z.
  std::vector<long long> coeffs(static_cast<size_t>(n) + 1, 0);
  coeffs[n] = 1;
  std::vector<long long> mk(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) mk[static_cast<size_t>(i) * n + i] = 1;
  std::vector<long long> am(static_cast<size_t>(n) * n);
  for (int k = 1; k <= n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        long long s = 0;
        for (int l = 0; l < n; ++l)
          s += a[static_cast<size_t>(i) * n + l] * mk[static_cast<size_t>(l) * n + j];
        am[static_cast<size_t>(i) * n + j] = s;
      }
    }
    long long tr = 0;
    for (int i = 0; i < n; ++i) tr += am[static_cast<size_t>(i) * n + i];
    if (tr % k != 0) throw std::logic_error("charpoly_oracle: inexact division");
    const long long ck = -tr / k;
    coeffs[n - k] = ck;
    mk = am;
    for (int i = 0; i < n; ++i) mk[static_cast<size_t>(i) * n + i] += ck;
  }
  return coeffs;
}

}  // namespace seidel
