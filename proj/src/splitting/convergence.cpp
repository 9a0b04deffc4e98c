#include "bloch/splitting/convergence.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace bloch {

namespace {

DensityMatrix final_state(const SimulationContext& ctx, const DensityMatrix& rho0, double t_end,
                          double dt) {
  const long n_steps = std::lround(t_end / dt);
  if (n_steps < 1 || std::abs(n_steps * dt - t_end) > 1e-9 * t_end) {
    throw InvalidArgumentError("convergence study: t_end must be a multiple of dt = " +
                               std::to_string(dt));
  }
  return propagate_only(ctx, rho0, StepPlan(0.0, dt, n_steps));
}

}  // namespace

double convergence_order(const ContextFactory& factory, const DensityMatrix& rho0, double t_end,
                         const std::vector<double>& dt_list,
                         const ContextFactory* reference_factory) {
  if (dt_list.size() < 3) {
    throw InvalidArgumentError("convergence study: need at least 3 step sizes");
  }
  for (std::size_t i = 1; i < dt_list.size(); ++i) {
    if (!(dt_list[i] < dt_list[i - 1])) {
      throw InvalidArgumentError("convergence study: dt list must be decreasing");
    }
  }

  const double dt_ref = dt_list.back() / 8.0;
  const SimulationContext ref_ctx =
      reference_factory ? (*reference_factory)(dt_ref) : factory(dt_ref);
  const DensityMatrix reference = final_state(ref_ctx, rho0, t_end, dt_ref);

  std::vector<double> errors;
  errors.reserve(dt_list.size());
  for (double dt : dt_list) {
    const DensityMatrix result = final_state(factory(dt), rho0, t_end, dt);
    errors.push_back(max_abs_diff(result.matrix(), reference.matrix()));
  }

  const double max_error = *std::max_element(errors.begin(), errors.end());
  if (max_error < 1e-12) {
    throw InsufficientResolutionError(
        "convergence study: errors at the roundoff floor (max " + std::to_string(max_error) +
        "), the scheme is exact on this problem");
  }

  // Least-squares slope of log(error) against log(dt).
  const std::size_t m = dt_list.size();
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double x = std::log(dt_list[i]);
    const double y = std::log(std::max(errors[i], 1e-300));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double denom = m * sxx - sx * sx;
  return (m * sxy - sx * sy) / denom;
}

}  // namespace bloch
