#include "bloch/harness/plot_script.hpp"

#include <fstream>

#include "bloch/errors.hpp"

namespace bloch {

std::string default_plot_path(const std::string& csv_path) {
  const std::size_t dot = csv_path.rfind('.');
  const std::string stem = dot == std::string::npos ? csv_path : csv_path.substr(0, dot);
  return stem + "_plot.py";
}

void emit_plot_script(const std::string& csv_path, const std::string& script_path) {
  std::ofstream out(script_path, std::ios::binary);
  if (!out) throw IoError("cannot open " + script_path + " for writing");
  out << "#!/usr/bin/env python3\n"
         "\"\"\"Plot level populations from a trajectory CSV.\"\"\"\n"
         "import csv\n"
         "import matplotlib.pyplot as plt\n"
         "\n"
         "CSV_PATH = \"" << csv_path << "\"\n"
         "\n"
         "with open(CSV_PATH, newline=\"\") as handle:\n"
         "    reader = csv.reader(handle)\n"
         "    header = next(reader)\n"
         "    rows = [[float(cell) for cell in row] for row in reader if row]\n"
         "\n"
         "pop_columns = [i for i, name in enumerate(header) if name.startswith(\"rho_\")]\n"
         "times = [row[0] for row in rows]\n"
         "\n"
         "fig, ax = plt.subplots(figsize=(8, 4.5))\n"
         "for col in pop_columns:\n"
         "    ax.plot(times, [row[col] for row in rows], label=header[col])\n"
         "ax.set_xlabel(\"t\")\n"
         "ax.set_ylabel(\"population\")\n"
         "ax.legend()\n"
         "ax.grid(True, alpha=0.3)\n"
         "fig.tight_layout()\n"
         "plt.show()\n";
  if (!out) throw IoError("write failed for " + script_path);
}

}  // namespace bloch
