#pragma once

#include <cstdint>
#include <vector>

#include "seidel/graph.hpp"

namespace seidel {

/// Dense real symmetric matrix. Symmetry is enforced at construction with
/// no tolerance: set() writes both (i, j) and (j, i).
class SymmetricMatrix {
 public:
  explicit SymmetricMatrix(int dim);

  /// Builds from full rows; throws if the data is not exactly symmetric.
  static SymmetricMatrix from_rows(const std::vector<std::vector<double>>& rows);

  int dim() const { return dim_; }
  double operator()(int i, int j) const { return a_[static_cast<size_t>(i) * dim_ + j]; }
  void set(int i, int j, double value);

  double trace() const;
  double frobenius_norm() const;

 private:
  int dim_ = 0;
  std::vector<double> a_;  // row-major
};

/// All eigenvalues of a symmetric matrix, sorted ascending, together with
/// the convergence tolerance they were computed at.
struct Spectrum {
  std::vector<double> eigenvalues;
  double residual_tol = 0.0;
};

/// One side of a vertex bipartition (V1); V2 is the complement.
struct SwitchSpec {
  std::vector<int> v1;
};

inline constexpr double kDefaultEigenTol = 1e-10;

/// Seidel matrix S(G) = J - I - 2A: zero diagonal, -1 on edges, +1 on
/// non-edges.
SymmetricMatrix seidel_matrix(const Graph& g);

/// Cyclic Jacobi eigensolver. Converges when the off-diagonal Frobenius
/// norm falls below tol * ||M||_F; capped at 100 sweeps, after which
/// EigenNoConvergence is thrown. Each eigenvalue is accurate to within
/// tol * ||M||_F.
Spectrum symmetric_eigenvalues(SymmetricMatrix m, double tol = kDefaultEigenTol);

/// Sum of absolute eigenvalues of a spectrum.
double spectrum_energy(const Spectrum& s);

/// Seidel energy: sum of absolute eigenvalues of S(G).
double seidel_energy(const Graph& g, double tol = kDefaultEigenTol);

/// Toggles adjacency exactly on the pairs crossing the (V1, V2) cut.
/// V1 empty or the whole vertex set returns g unchanged. An involution.
Graph seidel_switch(const Graph& g, const SwitchSpec& s);

/// Exact integer coefficients of det(lambda*I - M), ascending (index k is
/// the coefficient of lambda^k). Requires integer entries and dim <= 10
/// (OracleTooLarge beyond). Faddeev-LeVerrier in integer arithmetic; the
/// per-step divisions are exact. Test oracle for symmetric_eigenvalues.
std::vector<long long> charpoly_oracle(const SymmetricMatrix& m);

}  // namespace seidel
