#pragma once

#include "bloch/core/complex_matrix.hpp"

namespace bloch {

struct StateDiagnostics {
  double hermiticity_defect;  // max |rho_ij - conj(rho_ji)|
  double trace_error;         // |Tr(rho) - 1|
  double min_eigenvalue;      // of the Hermitized part (rho + rho^H)/2
};

StateDiagnostics diagnostics(const ComplexMatrix& rho);

/// A density matrix. The validating constructor rejects inputs that are not
/// Hermitian, unit-trace, positive semidefinite within 1e-12. Propagation
/// steps only monitor these properties afterwards; nothing re-Hermitizes or
/// clips a state behind the caller's back.
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix rho);

  static DensityMatrix ground_state(int n_levels);     // diag(1, 0, ..., 0)
  static DensityMatrix maximally_mixed(int n_levels);  // I / N

  /// Wraps a propagation result without validation.
  static DensityMatrix unchecked(ComplexMatrix rho);

  int dim() const { return rho_.dim(); }
  const ComplexMatrix& matrix() const { return rho_; }

 private:
  struct UncheckedTag {};
  DensityMatrix(ComplexMatrix rho, UncheckedTag) : rho_(std::move(rho)) {}

  ComplexMatrix rho_;
};

}  // namespace bloch
