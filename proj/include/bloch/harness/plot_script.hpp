#pragma once

#include <string>

namespace bloch {

/// Writes a standalone matplotlib script that reads the trajectory CSV at
/// csv_path and plots populations against time.
void emit_plot_script(const std::string& csv_path, const std::string& script_path);

/// script path derived from the CSV path (foo.csv -> foo_plot.py).
std::string default_plot_path(const std::string& csv_path);

}  // namespace bloch
