#include "bloch/harness/random_matrices.hpp"

#include <cmath>

#include "bloch/core/hermitian_eigen.hpp"

namespace bloch {

double min_eigenvalue_gap(const ComplexMatrix& m) {
  const auto eig = eigendecompose_hermitian(m);
  double gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < eig.eigenvalues.size(); ++i) {
    gap = std::min(gap, eig.eigenvalues[i] - eig.eigenvalues[i - 1]);
  }
  return gap;
}

namespace {

bool well_separated(const ComplexMatrix& m) {
  const auto eig = eigendecompose_hermitian(m);
  double radius = 0.0;
  for (double lam : eig.eigenvalues) radius = std::max(radius, std::abs(lam));
  const double threshold = 1e-6 * std::max(1.0, radius);
  for (std::size_t i = 1; i < eig.eigenvalues.size(); ++i) {
    if (eig.eigenvalues[i] - eig.eigenvalues[i - 1] < threshold) return false;
  }
  return true;
}

}  // namespace

ComplexMatrix random_polarizability(int n, std::mt19937_64& rng) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    ComplexMatrix p(n);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        const double v = uniform_in(rng, 0.5, 1.5);
        p(i, j) = v;
        p(j, i) = v;
      }
    }
    if (well_separated(p)) return p;
  }
  throw NoConvergenceError("random polarizability: could not draw a well-separated spectrum");
}

ComplexMatrix random_hermitian_zero_diag(int n, std::mt19937_64& rng) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    ComplexMatrix p(n);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        const Complex z(uniform_in(rng, -1.0, 1.0), uniform_in(rng, -1.0, 1.0));
        p(i, j) = z;
        p(j, i) = std::conj(z);
      }
    }
    if (well_separated(p)) return p;
  }
  throw NoConvergenceError("random Hermitian matrix: could not draw a well-separated spectrum");
}

}  // namespace bloch
