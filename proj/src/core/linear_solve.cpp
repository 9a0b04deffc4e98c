#include "bloch/core/linear_solve.hpp"

#include <cmath>
#include <utility>

namespace bloch {

LuSolver::LuSolver(std::vector<Complex> a, int n) : n_(n), lu_(std::move(a)), perm_(n) {
  if (lu_.size() != static_cast<std::size_t>(n) * n) {
    throw InvalidArgumentError("LU factorization: entry count does not match dimension");
  }
  double scale = 0.0;
  for (const Complex& z : lu_) scale = std::max(scale, std::abs(z));
  const double pivot_floor = 1e-14 * std::max(scale, 1e-300);

  auto at = [this](int i, int j) -> Complex& { return lu_[static_cast<std::size_t>(i) * n_ + j]; };
  for (int k = 0; k < n_; ++k) {
    int pivot = k;
    double best = std::abs(at(k, k));
    for (int i = k + 1; i < n_; ++i) {
      const double v = std::abs(at(i, k));
      if (v > best) {
        best = v;
        pivot = i;
      }
    }
    if (best < pivot_floor) {
      throw SingularResolventError("LU factorization: singular matrix (pivot " +
                                   std::to_string(best) + ")");
    }
    perm_[k] = pivot;
    if (pivot != k) {
      for (int j = 0; j < n_; ++j) std::swap(at(k, j), at(pivot, j));
    }
    const Complex inv_piv = 1.0 / at(k, k);
    for (int i = k + 1; i < n_; ++i) {
      const Complex f = at(i, k) * inv_piv;
      at(i, k) = f;
      for (int j = k + 1; j < n_; ++j) at(i, j) -= f * at(k, j);
    }
  }
}

void LuSolver::solve(std::vector<Complex>& rhs) const {
  if (rhs.size() != static_cast<std::size_t>(n_)) {
    throw InvalidArgumentError("LU solve: right-hand side size mismatch");
  }
  auto at = [this](int i, int j) -> const Complex& {
    return lu_[static_cast<std::size_t>(i) * n_ + j];
  };
  for (int k = 0; k < n_; ++k) {
    if (perm_[k] != k) std::swap(rhs[k], rhs[perm_[k]]);
    for (int i = k + 1; i < n_; ++i) rhs[i] -= at(i, k) * rhs[k];
  }
  for (int i = n_ - 1; i >= 0; --i) {
    for (int j = i + 1; j < n_; ++j) rhs[i] -= at(i, j) * rhs[j];
    rhs[i] /= at(i, i);
  }
}

ComplexMatrix solve_linear(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "linear solve");
  const int n = a.dim();
  const LuSolver lu(a.to_vector(), n);
  ComplexMatrix x(n);
  std::vector<Complex> col(n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) col[i] = b(i, j);
    lu.solve(col);
    for (int i = 0; i < n; ++i) x(i, j) = col[i];
  }
  return x;
}

}  // namespace bloch
