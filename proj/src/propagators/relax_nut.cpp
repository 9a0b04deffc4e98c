#include "bloch/propagators/relax_nut.hpp"

#include <cmath>
#include <string>

#include "bloch/core/matrix_exponential.hpp"

namespace bloch {

RelaxNutPropagator RelaxNutPropagator::build(const LevelSystem& sys, double dt) {
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw InvalidArgumentError("relaxation-nutation propagator: dt must be positive");
  }
  const int n = sys.n_levels();
  const RelaxationModel& q = sys.relaxation();

  ComplexMatrix coh(n);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      if (j == k) {
        coh(j, j) = 1.0;
      } else {
        const double damping = std::exp(-q.coh_rate(j, k) * dt * 0.5);
        coh(j, k) = std::polar(damping, -sys.omega_diff(j, k) * dt * 0.5);
      }
    }
  }

  // Rate matrix W - diag(Gamma); its exponential is column-stochastic.
  ComplexMatrix rate(n);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) rate(j, k) = q.pop_rate(j, k);
    rate(j, j) = -q.total_decay(j);
  }
  rate *= Complex(dt * 0.5, 0.0);
  const ComplexMatrix pop = series_exponential(rate);

  std::vector<double> pop_real(static_cast<std::size_t>(n) * n);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      pop_real[static_cast<std::size_t>(j) * n + k] = pop(j, k).real();
    }
  }
  for (int k = 0; k < n; ++k) {
    double col = 0.0;
    for (int j = 0; j < n; ++j) col += pop_real[static_cast<std::size_t>(j) * n + k];
    if (std::abs(col - 1.0) > 1e-12) {
      throw InvalidRatesError("population half-step column " + std::to_string(k) +
                              " sums to " + std::to_string(col) + " instead of 1");
    }
  }
  return RelaxNutPropagator(std::move(coh), std::move(pop_real), dt);
}

DensityMatrix RelaxNutPropagator::half_step(const DensityMatrix& rho) const {
  const int n = coh_phase_.dim();
  if (rho.dim() != n) {
    throw InvalidArgumentError("relaxation-nutation half step: dimension mismatch");
  }
  const ComplexMatrix& in = rho.matrix();
  ComplexMatrix out(n);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      if (j != k) out(j, k) = coh_phase_(j, k) * in(j, k);
    }
  }
  for (int j = 0; j < n; ++j) {
    Complex acc(0.0, 0.0);
    for (int k = 0; k < n; ++k) {
      acc += pop_half_step_[static_cast<std::size_t>(j) * n + k] * in(k, k);
    }
    out(j, j) = acc;
  }
  return DensityMatrix::unchecked(std::move(out));
}

}  // namespace bloch
