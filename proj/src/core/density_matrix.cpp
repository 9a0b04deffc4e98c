#include "bloch/core/density_matrix.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "bloch/core/hermitian_eigen.hpp"

namespace bloch {

StateDiagnostics diagnostics(const ComplexMatrix& rho) {
  const int n = rho.dim();
  ComplexMatrix herm(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      herm(i, j) = 0.5 * (rho(i, j) + std::conj(rho(j, i)));
    }
  }
  const auto eig = eigendecompose_hermitian(herm);
  return StateDiagnostics{rho.hermiticity_defect(), std::abs(rho.trace() - Complex(1.0, 0.0)),
                          eig.eigenvalues.front()};
}

DensityMatrix::DensityMatrix(ComplexMatrix rho) : rho_(std::move(rho)) {
  const StateDiagnostics d = diagnostics(rho_);
  if (d.hermiticity_defect > 1e-12) {
    throw InvalidArgumentError("density matrix: not Hermitian (defect " +
                               std::to_string(d.hermiticity_defect) + ")");
  }
  if (d.trace_error > 1e-12) {
    throw InvalidArgumentError("density matrix: trace differs from 1 by " +
                               std::to_string(d.trace_error));
  }
  if (d.min_eigenvalue < -1e-12) {
    throw InvalidArgumentError("density matrix: not positive semidefinite (min eigenvalue " +
                               std::to_string(d.min_eigenvalue) + ")");
  }
}

DensityMatrix DensityMatrix::ground_state(int n_levels) {
  ComplexMatrix rho(n_levels);
  rho(0, 0) = 1.0;
  return DensityMatrix(rho, UncheckedTag{});
}

DensityMatrix DensityMatrix::maximally_mixed(int n_levels) {
  ComplexMatrix rho(n_levels);
  for (int i = 0; i < n_levels; ++i) rho(i, i) = 1.0 / n_levels;
  return DensityMatrix(rho, UncheckedTag{});
}

DensityMatrix DensityMatrix::unchecked(ComplexMatrix rho) {
  return DensityMatrix(std::move(rho), UncheckedTag{});
}

}  // namespace bloch
