#include "bloch/core/level_system.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace bloch {

LevelSystem::LevelSystem(std::vector<double> omega, ComplexMatrix polarizability,
                         RelaxationModel relaxation)
    : omega_(std::move(omega)),
      polarizability_(std::move(polarizability)),
      relaxation_(std::move(relaxation)) {
  const int n = polarizability_.dim();
  if (static_cast<int>(omega_.size()) != n) {
    throw InvalidArgumentError("level system: omega size does not match polarizability dimension");
  }
  if (relaxation_.dim() != n) {
    throw InvalidArgumentError("level system: relaxation model dimension mismatch");
  }
  for (double w : omega_) {
    if (!std::isfinite(w)) throw InvalidArgumentError("level system: omega entries must be finite");
  }
  const double scale = std::max(polarizability_.max_abs(), 1.0);
  if (polarizability_.hermiticity_defect() > 1e-12 * scale) {
    throw InvalidArgumentError("level system: polarizability must be Hermitian");
  }
  for (int j = 0; j < n; ++j) {
    if (std::abs(polarizability_(j, j)) > 1e-14 * scale) {
      throw InvalidArgumentError("level system: polarizability diagonal must be zero");
    }
  }
}

}  // namespace bloch
