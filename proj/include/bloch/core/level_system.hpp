#pragma once

#include <vector>

#include "bloch/core/complex_matrix.hpp"
#include "bloch/propagators/relaxation_model.hpp"

namespace bloch {

/// An N-level system: level angular frequencies omega_j (the free Hamiltonian
/// is diag(omega_j)), a constant Hermitian zero-diagonal polarizability
/// matrix p so the interaction is V(t) = E(t) * p, and a relaxation model.
class LevelSystem {
 public:
  LevelSystem(std::vector<double> omega, ComplexMatrix polarizability, RelaxationModel relaxation);

  int n_levels() const { return polarizability_.dim(); }
  const std::vector<double>& omega() const { return omega_; }
  double omega_diff(int j, int k) const { return omega_[j] - omega_[k]; }
  const ComplexMatrix& polarizability() const { return polarizability_; }
  const RelaxationModel& relaxation() const { return relaxation_; }

 private:
  std::vector<double> omega_;
  ComplexMatrix polarizability_;
  RelaxationModel relaxation_;
};

}  // namespace bloch
