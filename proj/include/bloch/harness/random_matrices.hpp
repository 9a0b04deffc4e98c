#pragma once

#include <cstdint>
#include <random>

#include "bloch/core/complex_matrix.hpp"

namespace bloch {

/// Uniform double in [0, 1) from the top 53 bits of the generator; avoids
/// std::uniform_real_distribution so seeded runs are reproducible across
/// standard libraries.
inline double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform_in(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform_unit(rng);
}

/// Real symmetric zero-diagonal matrix with off-diagonal entries uniform in
/// [0.5, 1.5], redrawn until the eigenvalue gaps exceed
/// 1e-6 * max(1, spectral radius). The benchmark test matrices.
ComplexMatrix random_polarizability(int n, std::mt19937_64& rng);

/// Complex Hermitian zero-diagonal matrix with re/im parts uniform in
/// [-1, 1], redrawn until the eigenvalue gaps exceed the same threshold.
ComplexMatrix random_hermitian_zero_diag(int n, std::mt19937_64& rng);

/// Smallest gap between consecutive sorted eigenvalues.
double min_eigenvalue_gap(const ComplexMatrix& m);

}  // namespace bloch
