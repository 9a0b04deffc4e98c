#pragma once

#include <vector>

#include "bloch/core/density_matrix.hpp"
#include "bloch/propagators/liouville.hpp"
#include "bloch/propagators/relax_nut.hpp"
#include "bloch/splitting/field_signal.hpp"

namespace bloch {

struct StepPlan {
  double t0 = 0.0;
  double dt = 0.0;
  long n_steps = 0;
  int n_p = 0;  // samples per period, informational

  StepPlan(double t0_, double dt_, long n_steps_, int n_p_ = 0);
};

/// Recorded time series: populations (diagonal), upper-triangle coherences in
/// row-major order, and conservation diagnostics per recorded state.
struct Trajectory {
  int n_levels = 0;
  std::vector<double> times;
  std::vector<std::vector<double>> populations;
  std::vector<std::vector<Complex>> coherences;
  std::vector<StateDiagnostics> diagnostics;

  std::size_t size() const { return times.size(); }
};

struct SimulationContext {
  RelaxNutPropagator relax;
  LiouvilleStrategy liouville;
  FieldSignal field;
};

/// Symmetric composition for one step of size dt starting at t_n:
/// relaxation-nutation half step, full Liouville step with
/// gamma = dt * mean(E over [t_n, t_n + dt]), relaxation-nutation half step.
DensityMatrix strang_step(const SimulationContext& ctx, const DensityMatrix& rho, double t_n,
                          double dt);

/// Runs plan.n_steps Strang steps, recording every record_stride-th state
/// (plus the initial and final ones). Strategy failures are rethrown with the
/// step index attached. record_stride <= 0 disables recording of
/// intermediate states entirely (timing runs).
Trajectory simulate(const SimulationContext& ctx, const DensityMatrix& rho0, const StepPlan& plan,
                    int record_stride = 1);

/// Stepping loop without any recording or diagnostics; returns the final
/// state. This is what the wall-clock benchmarks measure.
DensityMatrix propagate_only(const SimulationContext& ctx, const DensityMatrix& rho0,
                             const StepPlan& plan);

}  // namespace bloch
