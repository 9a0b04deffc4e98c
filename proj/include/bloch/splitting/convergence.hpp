#pragma once

#include <functional>
#include <vector>

#include "bloch/splitting/strang.hpp"

namespace bloch {

using ContextFactory = std::function<SimulationContext(double dt)>;

/// Runs the integrator at every dt in dt_list up to t_end, measures the final
/// state against a reference run (reference_factory at min(dt)/8; falls back
/// to the tested factory when none is supplied) and returns the least-squares
/// slope of log error versus log dt. Throws InsufficientResolutionError when
/// the errors sit at the roundoff floor and the fit would be meaningless.
double convergence_order(const ContextFactory& factory, const DensityMatrix& rho0, double t_end,
                         const std::vector<double>& dt_list,
                         const ContextFactory* reference_factory = nullptr);

}  // namespace bloch
