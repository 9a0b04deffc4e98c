#include "bloch/harness/experiment.hpp"

#include <chrono>
#include <cmath>
#include <future>
#include <iomanip>
#include <numbers>
#include <sstream>

#include "bloch/harness/csv_io.hpp"
#include "bloch/harness/random_matrices.hpp"

namespace bloch {

namespace {

using Clock = std::chrono::steady_clock;

// The scaling and table benchmarks time the per-step evaluation strategies as
// they appear in the reference experiments: a generic series exponential per
// step on the one side, the Newton polynomial assembled per step by the
// nested Horner form on the other.
LiouvilleStrategy make_timing_strategy(LiouvilleVariant variant, const LevelSystem& sys,
                                       const SpectralData& spec) {
  switch (variant) {
    case LiouvilleVariant::Exponential: return LiouvilleStrategy::exponential_series(spec);
    case LiouvilleVariant::Newton: return LiouvilleStrategy::newton_horner(spec);
    case LiouvilleVariant::Canonical3: return LiouvilleStrategy::canonical3(spec);
    case LiouvilleVariant::CrankNicolson:
      return LiouvilleStrategy::crank_nicolson(sys.polarizability());
  }
  throw InvalidArgumentError("unknown strategy variant");
}

struct TimedRun {
  double seconds;
  DensityMatrix final_state;
};

// Minimum single-run time over repeated runs (after one warmup), which is
// robust against scheduler interference on short runs.
TimedRun time_stepping(const SimulationContext& ctx, const DensityMatrix& rho0,
                       const StepPlan& plan) {
  constexpr double kMeasureBudget = 0.5;
  constexpr int kMaxRuns = 400;

  DensityMatrix final_state = propagate_only(ctx, rho0, plan);  // warmup
  double best = std::numeric_limits<double>::infinity();
  double spent = 0.0;
  int runs = 0;
  do {
    const auto start = Clock::now();
    final_state = propagate_only(ctx, rho0, plan);
    const double s = std::chrono::duration<double>(Clock::now() - start).count();
    best = std::min(best, s);
    spent += s;
    ++runs;
  } while (spent < kMeasureBudget && runs < kMaxRuns);
  return TimedRun{best, std::move(final_state)};
}

double min_recorded_eigenvalue(const Trajectory& traj) {
  double worst = std::numeric_limits<double>::infinity();
  for (const StateDiagnostics& d : traj.diagnostics) worst = std::min(worst, d.min_eigenvalue);
  return worst;
}

// Positivity status from the early part of the trajectory (the flag window).
RunStatus status_from_trajectory(const Trajectory& traj) {
  const double horizon = traj.times.empty() ? 0.0 : traj.times.front() + kPositivityFlagWindow;
  for (std::size_t t = 0; t < traj.size() && traj.times[t] <= horizon + 1e-12; ++t) {
    if (traj.diagnostics[t].min_eigenvalue < kPositivityFlagThreshold) {
      return RunStatus::PositivityViolated;
    }
  }
  return RunStatus::Ok;
}

SimulationContext make_context(const LevelSystem& sys, LiouvilleStrategy strategy, double dt) {
  return SimulationContext{RelaxNutPropagator::build(sys, dt), std::move(strategy),
                           benchmark_field()};
}

}  // namespace

std::string status_name(RunStatus s) {
  switch (s) {
    case RunStatus::Ok: return "ok";
    case RunStatus::PositivityViolated: return "positivity_violated";
    case RunStatus::Error: return "error";
  }
  return "unknown";
}

void ExperimentConfig::validate() const {
  if (n_p < 2) throw InvalidArgumentError("experiment config: n_p must be at least 2");
  if (periods < 1) throw InvalidArgumentError("experiment config: periods must be at least 1");
  if (levels < 2) throw InvalidArgumentError("experiment config: levels must be at least 2");
  if (record_stride < 1) throw InvalidArgumentError("experiment config: stride must be positive");
  if (!omega.empty() && static_cast<int>(omega.size()) != levels) {
    throw InvalidArgumentError("experiment config: omega size does not match levels");
  }
  if (p_matrix && p_matrix->dim() != levels) {
    throw InvalidArgumentError("experiment config: p matrix dimension does not match levels");
  }
}

LevelSystem preset_system(const std::string& name) {
  const double pi = std::numbers::pi;
  const std::vector<double> omega{0.0, pi, 2.0 * pi};
  if (name == "three_level") {
    const ComplexMatrix p = ComplexMatrix::from_rows({{0.0, 1.0, 1.1},
                                                      {1.0, 0.0, 1.0},
                                                      {1.1, 1.0, 0.0}});
    return LevelSystem(omega, p, RelaxationModel::none(3));
  }
  if (name == "degenerate") {
    const ComplexMatrix p = ComplexMatrix::from_rows({{0.0, 1.0, 1.0},
                                                      {1.0, 0.0, 1.0},
                                                      {1.0, 1.0, 0.0}});
    return LevelSystem(omega, p, RelaxationModel::none(3));
  }
  throw InvalidArgumentError("unknown system preset: " + name);
}

FieldSignal benchmark_field() {
  return FieldSignal::sinusoid(1.0, 2.0 * std::numbers::pi, 0.0);
}

LevelSystem system_from_config(const ExperimentConfig& cfg) {
  cfg.validate();
  if (!cfg.p_matrix) return preset_system(cfg.p_preset);

  std::vector<double> omega = cfg.omega;
  if (omega.empty()) {
    omega.resize(cfg.levels);
    for (int j = 0; j < cfg.levels; ++j) omega[j] = std::numbers::pi * j;
  }
  RelaxationModel relax = cfg.relaxation_kind == RelaxationKind::Pauli
                              ? RelaxationModel::pauli(cfg.levels, cfg.pauli_pop_rates,
                                                       cfg.pauli_coh_rates)
                              : RelaxationModel::none(cfg.levels);
  return LevelSystem(std::move(omega), *cfg.p_matrix, std::move(relax));
}

LiouvilleStrategy make_strategy(LiouvilleVariant variant, const LevelSystem& sys,
                                const SpectralData& spec) {
  switch (variant) {
    case LiouvilleVariant::Exponential: return LiouvilleStrategy::exponential(spec);
    case LiouvilleVariant::Newton: return LiouvilleStrategy::newton(spec);
    case LiouvilleVariant::Canonical3: return LiouvilleStrategy::canonical3(spec);
    case LiouvilleVariant::CrankNicolson:
      return LiouvilleStrategy::crank_nicolson(sys.polarizability());
  }
  throw InvalidArgumentError("unknown strategy variant");
}

ThreeLevelResult run_three_level(const ExperimentConfig& cfg) {
  cfg.validate();
  const LevelSystem sys = cfg.p_matrix ? system_from_config(cfg) : preset_system(cfg.p_preset);
  const double dt = 1.0 / cfg.n_p;
  const long n_steps = static_cast<long>(cfg.periods) * cfg.n_p;

  const auto offline_start = Clock::now();
  const SpectralData spec = spectral_precompute(sys);
  const double offline = std::chrono::duration<double>(Clock::now() - offline_start).count();

  const DensityMatrix rho0 = DensityMatrix::ground_state(sys.n_levels());
  const StepPlan plan(0.0, dt, n_steps, cfg.n_p);

  BenchmarkRow row;
  row.method = variant_name(cfg.method);
  row.parameter = cfg.n_p;
  row.offline_seconds = offline;

  ThreeLevelResult result{Trajectory{}, row};
  try {
    const SimulationContext ctx = make_context(sys, make_strategy(cfg.method, sys, spec), dt);
    const TimedRun timed = time_stepping(ctx, rho0, plan);
    result.trajectory = simulate(ctx, rho0, plan, cfg.record_stride);

    result.row.wall_seconds = timed.seconds;
    result.row.per_step_seconds = timed.seconds / static_cast<double>(n_steps);
    result.row.final_trace_error =
        std::abs(timed.final_state.matrix().trace() - Complex(1.0, 0.0));
    result.row.min_eigenvalue_overall = min_recorded_eigenvalue(result.trajectory);
    result.row.status = status_from_min_eigenvalue(result.row.min_eigenvalue_overall);
  } catch (const Error& e) {
    result.row.status = RunStatus::Error;
    result.row.note = e.what();
  }

  if (!cfg.output_path.empty() && result.row.status != RunStatus::Error) {
    emit_csv(result.trajectory, cfg.output_path);
  }
  return result;
}

DegenerateReport run_degenerate(const ExperimentConfig& cfg) {
  cfg.validate();
  const LevelSystem sys = preset_system("degenerate");
  const double dt = 1.0 / cfg.n_p;
  const StepPlan plan(0.0, dt, static_cast<long>(cfg.periods) * cfg.n_p, cfg.n_p);
  const SpectralData spec = spectral_precompute(sys);
  const DensityMatrix rho0 = DensityMatrix::ground_state(3);

  const std::vector<LiouvilleVariant> methods{
      LiouvilleVariant::Exponential, LiouvilleVariant::Newton, LiouvilleVariant::Canonical3};

  auto run_one = [&](LiouvilleVariant variant) -> std::pair<Trajectory, DegenerateReport::Entry> {
    DegenerateReport::Entry entry;
    entry.method = variant_name(variant);
    Trajectory traj;
    try {
      const SimulationContext ctx = make_context(sys, make_strategy(variant, sys, spec), dt);
      traj = simulate(ctx, rho0, plan, cfg.record_stride);
      entry.status = status_from_min_eigenvalue(min_recorded_eigenvalue(traj));
    } catch (const Error& e) {
      entry.status = RunStatus::Error;
      entry.note = e.what();
    }
    return {std::move(traj), std::move(entry)};
  };

  std::vector<std::pair<Trajectory, DegenerateReport::Entry>> outcomes;
  if (cfg.parallel) {
    std::vector<std::future<std::pair<Trajectory, DegenerateReport::Entry>>> futures;
    futures.reserve(methods.size());
    for (LiouvilleVariant v : methods) {
      futures.push_back(std::async(std::launch::async, run_one, v));
    }
    for (auto& f : futures) outcomes.push_back(f.get());
  } else {
    outcomes.reserve(methods.size());
    for (LiouvilleVariant v : methods) outcomes.push_back(run_one(v));
  }

  DegenerateReport report;
  report.exponential_trajectory = outcomes.front().first;
  for (auto& [traj, entry] : outcomes) {
    if (entry.status != RunStatus::Error) {
      double dev = 0.0;
      for (std::size_t t = 0; t < traj.size(); ++t) {
        for (int i = 0; i < traj.n_levels; ++i) {
          dev = std::max(dev, std::abs(traj.populations[t][i] -
                                       report.exponential_trajectory.populations[t][i]));
        }
        for (std::size_t c = 0; c < traj.coherences[t].size(); ++c) {
          dev = std::max(dev, std::abs(traj.coherences[t][c] -
                                       report.exponential_trajectory.coherences[t][c]));
        }
      }
      entry.max_deviation_from_exponential = dev;
    }
    report.entries.push_back(std::move(entry));
  }
  return report;
}

std::vector<BenchmarkRow> run_scaling(const ExperimentConfig& cfg) {
  cfg.validate();
  const double dt = 1.0 / cfg.n_p;
  const long n_steps = static_cast<long>(cfg.periods) * cfg.n_p;
  const int diag_periods = std::min(cfg.periods, 20);

  std::vector<BenchmarkRow> rows;
  for (int n : cfg.scaling_levels) {
    std::mt19937_64 rng(cfg.seed + static_cast<std::uint64_t>(n) * 1000003ULL);
    const ComplexMatrix p = random_polarizability(n, rng);
    std::vector<double> omega(n);
    for (int j = 0; j < n; ++j) omega[j] = std::numbers::pi * j;
    const LevelSystem sys(omega, p, RelaxationModel::none(n));

    const auto offline_start = Clock::now();
    const SpectralData spec = spectral_precompute(sys);
    const double offline = std::chrono::duration<double>(Clock::now() - offline_start).count();

    const DensityMatrix rho0 = DensityMatrix::ground_state(n);
    const StepPlan plan(0.0, dt, n_steps, cfg.n_p);
    const StepPlan diag_plan(0.0, dt, static_cast<long>(diag_periods) * cfg.n_p, cfg.n_p);

    for (LiouvilleVariant variant :
         {LiouvilleVariant::Exponential, LiouvilleVariant::Newton}) {
      const SimulationContext ctx = make_context(sys, make_timing_strategy(variant, sys, spec), dt);
      const TimedRun timed = time_stepping(ctx, rho0, plan);
      const Trajectory diag_traj = simulate(ctx, rho0, diag_plan, 1);

      BenchmarkRow row;
      row.method = variant_name(variant);
      row.parameter = n;
      row.wall_seconds = timed.seconds;
      row.offline_seconds = offline;
      row.per_step_seconds = timed.seconds / static_cast<double>(n_steps);
      row.final_trace_error = std::abs(timed.final_state.matrix().trace() - Complex(1.0, 0.0));
      row.min_eigenvalue_overall = min_recorded_eigenvalue(diag_traj);
      row.status = status_from_min_eigenvalue(row.min_eigenvalue_overall);
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::vector<BenchmarkRow> run_crank_nicolson_table(const ExperimentConfig& cfg) {
  cfg.validate();
  const LevelSystem sys = preset_system("three_level");
  const SpectralData spec = spectral_precompute(sys);
  const DensityMatrix rho0 = DensityMatrix::ground_state(3);
  const int diag_periods = std::min(cfg.periods, 20);

  const std::vector<int> np_values{5, 10, 20, 100};
  const std::vector<LiouvilleVariant> methods{
      LiouvilleVariant::Exponential, LiouvilleVariant::CrankNicolson, LiouvilleVariant::Newton,
      LiouvilleVariant::Canonical3};

  std::vector<BenchmarkRow> rows;
  for (int np : np_values) {
    const double dt = 1.0 / np;
    const StepPlan plan(0.0, dt, static_cast<long>(cfg.periods) * np, np);
    const StepPlan diag_plan(0.0, dt, static_cast<long>(diag_periods) * np, np);
    for (LiouvilleVariant variant : methods) {
      BenchmarkRow row;
      row.method = variant_name(variant);
      row.parameter = np;
      try {
        const SimulationContext ctx =
            make_context(sys, make_timing_strategy(variant, sys, spec), dt);
        const TimedRun timed = time_stepping(ctx, rho0, plan);
        const Trajectory diag_traj = simulate(ctx, rho0, diag_plan, 1);
        row.wall_seconds = timed.seconds;
        row.per_step_seconds = timed.seconds / static_cast<double>(plan.n_steps);
        row.final_trace_error = std::abs(timed.final_state.matrix().trace() - Complex(1.0, 0.0));
        row.min_eigenvalue_overall = min_recorded_eigenvalue(diag_traj);
        row.status = status_from_min_eigenvalue(row.min_eigenvalue_overall);
      } catch (const Error& e) {
        row.status = RunStatus::Error;
        row.note = e.what();
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::string format_benchmark_table(const std::vector<BenchmarkRow>& rows,
                                   const std::string& parameter_label) {
  std::ostringstream out;
  out << std::left << std::setw(16) << "method" << std::right << std::setw(6) << parameter_label
      << std::setw(12) << "wall[s]" << std::setw(14) << "per-step[us]" << std::setw(12)
      << "offline[s]" << std::setw(13) << "trace_err" << std::setw(13) << "min_eig"
      << "  status\n";
  for (const BenchmarkRow& row : rows) {
    out << std::left << std::setw(16) << row.method << std::right << std::setw(6) << row.parameter
        << std::setw(12) << std::fixed << std::setprecision(4) << row.wall_seconds
        << std::setw(14) << std::setprecision(3) << row.per_step_seconds * 1e6 << std::setw(12)
        << std::setprecision(4) << row.offline_seconds << std::setw(13) << std::scientific
        << std::setprecision(2) << row.final_trace_error << std::setw(13)
        << row.min_eigenvalue_overall << "  " << status_name(row.status);
    out.unsetf(std::ios::floatfield);
    if (!row.note.empty()) out << "  (" << row.note << ")";
    out << "\n";
  }
  return out.str();
}

}  // namespace bloch
