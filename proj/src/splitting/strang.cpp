#include "bloch/splitting/strang.hpp"

#include <cmath>
#include <string>

namespace bloch {

namespace {

void record_state(Trajectory& traj, double t, const DensityMatrix& rho) {
  const int n = rho.dim();
  const ComplexMatrix& m = rho.matrix();
  traj.times.push_back(t);
  std::vector<double> pops(n);
  for (int i = 0; i < n; ++i) pops[i] = m(i, i).real();
  traj.populations.push_back(std::move(pops));
  std::vector<Complex> coh;
  coh.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) coh.push_back(m(i, j));
  }
  traj.coherences.push_back(std::move(coh));
  traj.diagnostics.push_back(diagnostics(m));
}

[[noreturn]] void rethrow_with_step(const Error& e, long step, const LiouvilleStrategy& strategy) {
  const std::string msg = "step " + std::to_string(step) + " (" +
                          variant_name(strategy.variant()) + " method): " + e.what();
  if (dynamic_cast<const DegenerateSpectrumError*>(&e)) throw DegenerateSpectrumError(msg);
  if (dynamic_cast<const NodeCollisionError*>(&e)) throw NodeCollisionError(msg);
  if (dynamic_cast<const SingularResolventError*>(&e)) throw SingularResolventError(msg);
  if (dynamic_cast<const VanishingCoefficientError*>(&e)) throw VanishingCoefficientError(msg);
  throw Error(msg);
}

}  // namespace

StepPlan::StepPlan(double t0_, double dt_, long n_steps_, int n_p_)
    : t0(t0_), dt(dt_), n_steps(n_steps_), n_p(n_p_) {
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw InvalidArgumentError("step plan: dt must be positive");
  }
  if (n_steps < 0) {
    throw InvalidArgumentError("step plan: n_steps must be nonnegative");
  }
}

DensityMatrix strang_step(const SimulationContext& ctx, const DensityMatrix& rho, double t_n,
                          double dt) {
  const DensityMatrix half = ctx.relax.half_step(rho);
  const double gamma = dt * ctx.field.average(t_n, dt);
  const DensityMatrix kicked = ctx.liouville.step(half, gamma, dt);
  return ctx.relax.half_step(kicked);
}

Trajectory simulate(const SimulationContext& ctx, const DensityMatrix& rho0, const StepPlan& plan,
                    int record_stride) {
  Trajectory traj;
  traj.n_levels = rho0.dim();
  const bool recording = record_stride > 0;
  if (recording) record_state(traj, plan.t0, rho0);

  DensityMatrix rho = rho0;
  for (long step = 0; step < plan.n_steps; ++step) {
    const double t_n = plan.t0 + static_cast<double>(step) * plan.dt;
    try {
      rho = strang_step(ctx, rho, t_n, plan.dt);
    } catch (const Error& e) {
      rethrow_with_step(e, step, ctx.liouville);
    }
    if (recording && ((step + 1) % record_stride == 0 || step + 1 == plan.n_steps)) {
      record_state(traj, t_n + plan.dt, rho);
    }
  }
  if (!recording) record_state(traj, plan.t0 + plan.dt * static_cast<double>(plan.n_steps), rho);
  return traj;
}

DensityMatrix propagate_only(const SimulationContext& ctx, const DensityMatrix& rho0,
                             const StepPlan& plan) {
  DensityMatrix rho = rho0;
  for (long step = 0; step < plan.n_steps; ++step) {
    const double t_n = plan.t0 + static_cast<double>(step) * plan.dt;
    try {
      rho = strang_step(ctx, rho, t_n, plan.dt);
    } catch (const Error& e) {
      rethrow_with_step(e, step, ctx.liouville);
    }
  }
  return rho;
}

}  // namespace bloch
