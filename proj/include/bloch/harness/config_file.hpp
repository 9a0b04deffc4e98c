#pragma once

#include <string>

#include "bloch/harness/experiment.hpp"

namespace bloch {

/// Parses the key = value experiment description (# starts a comment):
///
///   experiment   = three_level | degenerate | scaling | convergence | custom
///   method       = exp | cn | newton | canonical
///   n_p          = 20
///   periods      = 20
///   levels       = 3
///   omega        = 0, 3.14159, 6.28318
///   p_matrix     = three_level | degenerate | "0,1; 1,0" (rows ; separated,
///                  entries real or (re,im))
///   relaxation   = none | pauli
///   pauli_w      = row-major rate matrix, same layout as p_matrix
///   pauli_gamma  = row-major rate matrix, same layout as p_matrix
///   output_path  = traj.csv
///   record_stride = 1
///   seed         = 1234
///   scaling_levels = 2, 3, 4, 5, 10
ExperimentConfig parse_config_text(const std::string& text);
ExperimentConfig parse_config_file(const std::string& path);

LiouvilleVariant parse_method_name(const std::string& name);

}  // namespace bloch
