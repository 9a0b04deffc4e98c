#pragma once

#include <string>

#include "bloch/splitting/strang.hpp"

namespace bloch {

/// Header plus one row per recorded time:
/// t, rho_11..rho_NN, re/im of the upper-triangle coherences in row-major
/// order, hermiticity_defect, trace_error, min_eigenvalue. Decimal text with
/// 17 significant digits, newline-terminated; byte-deterministic for
/// identical trajectories.
std::string trajectory_to_csv(const Trajectory& traj);

void emit_csv(const Trajectory& traj, const std::string& path);

/// Inverse of trajectory_to_csv on well-formed input (round-trip checks).
Trajectory parse_trajectory_csv(const std::string& text);

Trajectory read_trajectory_csv(const std::string& path);

}  // namespace bloch
