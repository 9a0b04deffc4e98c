#pragma once

#include <vector>

#include "bloch/core/density_matrix.hpp"
#include "bloch/core/level_system.hpp"

namespace bloch {

/// Exact half-step propagator for the relaxation-nutation sub-flow. The
/// coherence channel decouples entrywise into damped phase factors
/// e^{(-i omega_jk - gamma_jk) dt/2}; the population channel is the linear
/// rate system exp((W - diag(Gamma)) dt/2), computed once at build time.
class RelaxNutPropagator {
 public:
  static RelaxNutPropagator build(const LevelSystem& sys, double dt);

  DensityMatrix half_step(const DensityMatrix& rho) const;

  double dt() const { return dt_; }
  const ComplexMatrix& coh_phase() const { return coh_phase_; }
  double pop_half_step(int j, int k) const {
    return pop_half_step_[static_cast<std::size_t>(j) * coh_phase_.dim() + k];
  }

 private:
  RelaxNutPropagator(ComplexMatrix coh_phase, std::vector<double> pop_half_step, double dt)
      : coh_phase_(std::move(coh_phase)), pop_half_step_(std::move(pop_half_step)), dt_(dt) {}

  ComplexMatrix coh_phase_;            // entry (j,k) scales rho_jk, diagonal unused (1)
  std::vector<double> pop_half_step_;  // real N x N, column sums 1
  double dt_;
};

/// Free-function aliases matching the operation names used in the tests.
inline RelaxNutPropagator build_relax_nut(const LevelSystem& sys, double dt) {
  return RelaxNutPropagator::build(sys, dt);
}
inline DensityMatrix relax_nut_half_step(const RelaxNutPropagator& prop, const DensityMatrix& rho) {
  return prop.half_step(rho);
}

}  // namespace bloch
