#pragma once

#include <vector>

#include "bloch/core/complex_matrix.hpp"
#include "bloch/core/level_system.hpp"

namespace bloch {

/// Offline spectral cache for a polarizability matrix p: eigenvalues and
/// eigenvectors, the deduplicated interpolation nodes, and the Newton basis
/// matrices B_0 = I, B_l = prod_{k<=l} (p - node_k I) over the distinct
/// nodes. All of it is gamma-independent, so it is computed once per system
/// and shared by every time step.
class SpectralData {
 public:
  /// dedup_tol <= 0 selects the default 1e-8 * max(1, spectral radius).
  static SpectralData compute(const ComplexMatrix& p, double dedup_tol = 0.0);

  const ComplexMatrix& matrix() const { return p_; }
  const std::vector<double>& eigenvalues() const { return eigenvalues_; }
  const ComplexMatrix& eigenvectors() const { return eigenvectors_; }
  const std::vector<double>& distinct_nodes() const { return distinct_nodes_; }
  const std::vector<ComplexMatrix>& newton_basis() const { return newton_basis_; }
  double spectral_radius() const;
  double dedup_tol() const { return dedup_tol_; }

 private:
  SpectralData(ComplexMatrix p, std::vector<double> eigenvalues, ComplexMatrix eigenvectors);

  ComplexMatrix p_;
  std::vector<double> eigenvalues_;
  ComplexMatrix eigenvectors_;
  std::vector<double> distinct_nodes_;
  std::vector<ComplexMatrix> newton_basis_;
  double dedup_tol_ = 0.0;
};

/// spectral_precompute for a level system's polarizability matrix.
SpectralData spectral_precompute(const LevelSystem& sys, double dedup_tol = 0.0);

/// U diag(e^{i gamma lambda_k}) U^H = exp(i gamma p).
ComplexMatrix unitary_exponential(double gamma, const SpectralData& spec);

}  // namespace bloch
