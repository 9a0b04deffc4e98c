#include "bloch/harness/csv_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace bloch {

namespace {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

int levels_from_column_count(std::size_t columns) {
  // columns = 1 + N + N(N-1) + 3
  for (int n = 2; n <= 64; ++n) {
    if (static_cast<std::size_t>(4 + n * n) == columns) return n;
  }
  throw IoError("trajectory csv: column count " + std::to_string(columns) +
                " does not match any level count");
}

}  // namespace

std::string trajectory_to_csv(const Trajectory& traj) {
  const int n = traj.n_levels;
  std::ostringstream out;
  out << "t";
  for (int i = 0; i < n; ++i) out << ",rho_" << (i + 1) << (i + 1);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      out << ",re_rho_" << (i + 1) << (j + 1) << ",im_rho_" << (i + 1) << (j + 1);
    }
  }
  out << ",hermiticity_defect,trace_error,min_eigenvalue\n";

  for (std::size_t row = 0; row < traj.size(); ++row) {
    out << format_double(traj.times[row]);
    for (double pop : traj.populations[row]) out << ',' << format_double(pop);
    for (const Complex& z : traj.coherences[row]) {
      out << ',' << format_double(z.real()) << ',' << format_double(z.imag());
    }
    const StateDiagnostics& d = traj.diagnostics[row];
    out << ',' << format_double(d.hermiticity_defect) << ',' << format_double(d.trace_error)
        << ',' << format_double(d.min_eigenvalue) << '\n';
  }
  return out.str();
}

void emit_csv(const Trajectory& traj, const std::string& path) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open " + path + " for writing");
  file << trajectory_to_csv(traj);
  if (!file) throw IoError("write failed for " + path);
}

Trajectory parse_trajectory_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw IoError("trajectory csv: empty input");

  std::size_t columns = 1;
  for (char c : line) {
    if (c == ',') ++columns;
  }
  const int n = levels_from_column_count(columns);

  Trajectory traj;
  traj.n_levels = n;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string cell;
    std::vector<double> values;
    values.reserve(columns);
    while (std::getline(row, cell, ',')) {
      values.push_back(std::strtod(cell.c_str(), nullptr));
    }
    if (values.size() != columns) {
      throw IoError("trajectory csv: row with " + std::to_string(values.size()) +
                    " cells, expected " + std::to_string(columns));
    }
    std::size_t at = 0;
    traj.times.push_back(values[at++]);
    std::vector<double> pops(n);
    for (int i = 0; i < n; ++i) pops[i] = values[at++];
    traj.populations.push_back(std::move(pops));
    std::vector<Complex> coh;
    coh.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int i = 0; i < n * (n - 1) / 2; ++i) {
      const double re = values[at++];
      const double im = values[at++];
      coh.emplace_back(re, im);
    }
    traj.coherences.push_back(std::move(coh));
    traj.diagnostics.push_back(StateDiagnostics{values[at], values[at + 1], values[at + 2]});
  }
  return traj;
}

Trajectory read_trajectory_csv(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open " + path + " for reading");
  std::ostringstream buf;
  buf << file.rdbuf();
  return parse_trajectory_csv(buf.str());
}

}  // namespace bloch
