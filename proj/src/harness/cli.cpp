#include "bloch/harness/cli.hpp"

#include <CLI11.hpp>
#include <iostream>

#include "bloch/harness/config_file.hpp"
#include "bloch/harness/csv_io.hpp"
#include "bloch/harness/plot_script.hpp"
#include "bloch/propagators/nsfd.hpp"

namespace bloch {

namespace {

struct CliOptions {
  std::string method;
  std::string config_path;
  std::string out_path;
  int n_p = 0;
  int periods = 0;
  int levels = 0;
  int stride = 0;
  std::uint64_t seed = 0;
  bool plot = false;
  bool full = false;
  bool parallel = false;
  bool sweep = false;
  double e_field = 1.0;
};

void add_common_flags(CLI::App* cmd, CliOptions& opt, bool with_method = true) {
  if (with_method) {
    cmd->add_option("--method,-m", opt.method, "propagation method")
        ->check(CLI::IsMember({"exp", "cn", "newton", "canonical"}));
  }
  cmd->add_option("--np", opt.n_p, "time steps per field period");
  cmd->add_option("--periods", opt.periods, "number of field periods");
  cmd->add_option("--config", opt.config_path, "experiment config file");
  cmd->add_option("--out", opt.out_path, "output CSV path");
  cmd->add_option("--stride", opt.stride, "record every k-th step");
  cmd->add_option("--seed", opt.seed, "random seed");
  cmd->add_flag("--plot", opt.plot, "also write a companion plot script");
}

// Priority: explicit flag > config file > subcommand default.
ExperimentConfig build_config(const CliOptions& opt, ExperimentKind kind, int default_periods) {
  ExperimentConfig cfg;
  const bool have_config = !opt.config_path.empty();
  if (have_config) cfg = parse_config_file(opt.config_path);
  cfg.experiment = kind;
  if (!have_config) cfg.periods = default_periods;
  if (opt.full) cfg.periods = 2000;
  if (opt.periods > 0) cfg.periods = opt.periods;
  if (opt.n_p > 0) cfg.n_p = opt.n_p;
  if (opt.levels > 0) cfg.levels = opt.levels;
  if (opt.stride > 0) cfg.record_stride = opt.stride;
  if (opt.seed != 0) cfg.seed = opt.seed;
  if (!opt.out_path.empty()) cfg.output_path = opt.out_path;
  if (!opt.method.empty()) cfg.method = parse_method_name(opt.method);
  cfg.parallel = opt.parallel;
  cfg.validate();
  return cfg;
}

void maybe_emit_plot(const CliOptions& opt, const std::string& csv_path) {
  if (opt.plot && !csv_path.empty()) {
    const std::string script = default_plot_path(csv_path);
    emit_plot_script(csv_path, script);
    std::cout << "plot script written to " << script << "\n";
  }
}

int run_simulate(const CliOptions& opt) {
  ExperimentConfig cfg = build_config(opt, ExperimentKind::ThreeLevel, 20);
  if (cfg.output_path.empty()) cfg.output_path = "trajectory.csv";
  const ThreeLevelResult result = run_three_level(cfg);
  if (result.row.status == RunStatus::Error) {
    std::cerr << "simulation failed: " << result.row.note << "\n";
    return 2;
  }
  std::cout << format_benchmark_table({result.row}, "n_p");
  std::cout << "trajectory written to " << cfg.output_path << "\n";
  maybe_emit_plot(opt, cfg.output_path);
  return 0;
}

int run_degenerate_cmd(const CliOptions& opt) {
  const ExperimentConfig cfg = build_config(opt, ExperimentKind::Degenerate, 20);
  const DegenerateReport report = run_degenerate(cfg);
  std::cout << "degenerate three-level comparison (" << cfg.periods << " periods, n_p = "
            << cfg.n_p << ")\n";
  for (const auto& entry : report.entries) {
    std::cout << "  " << entry.method << ": status = " << status_name(entry.status);
    if (entry.status != RunStatus::Error) {
      std::cout << ", max deviation from exponential = "
                << entry.max_deviation_from_exponential;
    } else {
      std::cout << ", " << entry.note;
    }
    std::cout << "\n";
  }
  if (!cfg.output_path.empty()) {
    emit_csv(report.exponential_trajectory, cfg.output_path);
    std::cout << "exponential reference trajectory written to " << cfg.output_path << "\n";
    maybe_emit_plot(opt, cfg.output_path);
  }
  return 0;
}

int run_scaling_cmd(const CliOptions& opt) {
  const ExperimentConfig cfg = build_config(opt, ExperimentKind::Scaling, 200);
  const std::vector<BenchmarkRow> rows = run_scaling(cfg);
  std::cout << "level-count scaling, " << cfg.periods << " periods, n_p = " << cfg.n_p
            << ", seed = " << cfg.seed << "\n";
  std::cout << format_benchmark_table(rows, "N");
  for (std::size_t i = 0; i + 1 < rows.size(); i += 2) {
    std::cout << "  N = " << rows[i].parameter
              << ": newton/exponential wall-time ratio = "
              << rows[i + 1].wall_seconds / rows[i].wall_seconds << "\n";
  }
  return 0;
}

int run_table1_cmd(const CliOptions& opt) {
  const ExperimentConfig cfg = build_config(opt, ExperimentKind::ThreeLevel, 200);
  const std::vector<BenchmarkRow> rows = run_crank_nicolson_table(cfg);
  std::cout << "three-level method comparison, " << cfg.periods << " periods\n";
  std::cout << format_benchmark_table(rows, "n_p");
  return 0;
}

int run_convergence_cmd(const CliOptions& opt) {
  const ExperimentConfig cfg = build_config(opt, ExperimentKind::Convergence, 1);
  const LevelSystem sys = system_from_config(cfg);
  const SpectralData spec = spectral_precompute(sys);
  const DensityMatrix rho0 = DensityMatrix::ground_state(sys.n_levels());
  const double t_end = static_cast<double>(cfg.periods);

  const ContextFactory factory = [&](double dt) {
    return SimulationContext{RelaxNutPropagator::build(sys, dt),
                             make_strategy(cfg.method, sys, spec), benchmark_field()};
  };
  const ContextFactory reference = [&](double dt) {
    return SimulationContext{RelaxNutPropagator::build(sys, dt),
                             LiouvilleStrategy::exponential(spec), benchmark_field()};
  };
  const std::vector<double> ladder{1.0 / 20, 1.0 / 40, 1.0 / 80, 1.0 / 160};
  const double slope = convergence_order(factory, rho0, t_end, ladder, &reference);
  std::cout << "method = " << variant_name(cfg.method) << ", t_end = " << t_end
            << ", dt ladder {1/20, 1/40, 1/80, 1/160}, reference dt = 1/1280\n";
  std::cout << "fitted order = " << slope << "\n";
  return 0;
}

int run_nsfd_cmd(const CliOptions& opt) {
  const ExperimentConfig cfg = build_config(opt, ExperimentKind::Custom, 1);
  const LevelSystem sys = system_from_config(cfg);
  const SpectralData spec = spectral_precompute(sys);

  auto print_report = [&](double dt) {
    const NsfdReport report = nsfd_report(dt * opt.e_field, dt, opt.e_field, spec);
    std::cout << "dt = " << dt << ", E = " << opt.e_field << ", gamma = " << report.gamma << "\n";
    for (std::size_t j = 0; j < report.alpha.size(); ++j) {
      std::cout << "  alpha_" << j << " = " << report.alpha[j] << "\n";
    }
    std::cout << "  alpha1_tilde = " << report.alpha1_tilde << "\n";
    std::cout << "  phi/dt = " << report.phi_over_dt
              << "  |phi/dt - 1| = " << std::abs(report.phi_over_dt - Complex(1.0, 0.0)) << "\n";
    std::cout << "  Q coefficients:";
    for (const Complex& q : report.q_poly_coeffs) std::cout << " " << q;
    std::cout << "\n";
    if (report.has_canonical) {
      std::cout << "  canonical alpha = " << report.canonical_alpha
                << ", beta = " << report.canonical_beta << ", xi = " << report.canonical_xi
                << "\n";
    }
  };

  const double dt0 = 1.0 / cfg.n_p;
  if (opt.sweep) {
    for (double dt = dt0; dt > dt0 / 64.0; dt *= 0.5) print_report(dt);
  } else {
    print_report(dt0);
  }
  return 0;
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
  CLI::App app{"N-level Bloch propagator: Strang splitting with exact sub-steps"};
  app.require_subcommand(1);

  CliOptions opt;

  CLI::App* simulate = app.add_subcommand("simulate", "run a trajectory and write it as CSV");
  add_common_flags(simulate, opt);
  simulate->add_option("--levels", opt.levels, "number of levels (custom configs)");

  CLI::App* degenerate =
      app.add_subcommand("degenerate", "compare methods on the degenerate-spectrum system");
  add_common_flags(degenerate, opt, false);
  degenerate->add_flag("--parallel", opt.parallel, "run the method trajectories concurrently");

  CLI::App* scaling = app.add_subcommand("scaling", "time exponential vs newton across N");
  add_common_flags(scaling, opt, false);
  scaling->add_flag("--full", opt.full, "full 2000-period timing run");

  CLI::App* table1 = app.add_subcommand("table1", "method/step-size comparison table");
  add_common_flags(table1, opt, false);
  table1->add_flag("--full", opt.full, "full 2000-period timing run");

  CLI::App* convergence = app.add_subcommand("convergence", "fit the splitting order");
  add_common_flags(convergence, opt);

  CLI::App* nsfd = app.add_subcommand("nsfd-report", "step-size renormalization diagnostics");
  add_common_flags(nsfd, opt, false);
  nsfd->add_option("--efield", opt.e_field, "field value the report is evaluated at");
  nsfd->add_flag("--sweep", opt.sweep, "print a dyadic dt sweep");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);  // prints synopsis; nonzero on bad usage
  }

  try {
    if (simulate->parsed()) return run_simulate(opt);
    if (degenerate->parsed()) return run_degenerate_cmd(opt);
    if (scaling->parsed()) return run_scaling_cmd(opt);
    if (table1->parsed()) return run_table1_cmd(opt);
    if (convergence->parsed()) return run_convergence_cmd(opt);
    if (nsfd->parsed()) return run_nsfd_cmd(opt);
  } catch (const Error& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}

}  // namespace bloch
