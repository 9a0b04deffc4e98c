#include "bloch/propagators/relaxation_model.hpp"

#include <cmath>
#include <string>

namespace bloch {

namespace {

void require_dim(int n) {
  if (n < 2) throw InvalidRatesError("relaxation model needs at least 2 levels");
}

void require_rate_matrix(const std::vector<double>& m, int n, const char* name, bool symmetric) {
  if (m.size() != static_cast<std::size_t>(n) * n) {
    throw InvalidRatesError(std::string(name) + ": entry count does not match dimension");
  }
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      const double v = m[static_cast<std::size_t>(j) * n + k];
      if (!std::isfinite(v) || v < 0.0) {
        throw InvalidRatesError(std::string(name) + ": rates must be finite and nonnegative");
      }
      if (j == k && v != 0.0) {
        throw InvalidRatesError(std::string(name) + ": diagonal must be zero");
      }
      if (symmetric) {
        const double vt = m[static_cast<std::size_t>(k) * n + j];
        if (std::abs(v - vt) > 1e-12 * std::max(1.0, std::abs(v))) {
          throw InvalidRatesError(std::string(name) + ": matrix must be symmetric");
        }
      }
    }
  }
}

}  // namespace

RelaxationModel RelaxationModel::none(int n_levels) {
  require_dim(n_levels);
  const std::size_t sz = static_cast<std::size_t>(n_levels) * n_levels;
  return RelaxationModel(RelaxationKind::None, n_levels, std::vector<double>(sz, 0.0),
                         std::vector<double>(sz, 0.0));
}

RelaxationModel RelaxationModel::pauli(int n_levels, std::vector<double> pop_rates,
                                       std::vector<double> coh_rates) {
  require_dim(n_levels);
  require_rate_matrix(pop_rates, n_levels, "population rates", false);
  require_rate_matrix(coh_rates, n_levels, "coherence rates", true);

  RelaxationModel model(RelaxationKind::Pauli, n_levels, std::move(pop_rates),
                        std::move(coh_rates));
  for (int j = 0; j < n_levels; ++j) {
    for (int k = 0; k < n_levels; ++k) {
      if (j == k) continue;
      const double floor = 0.5 * (model.total_decay(j) + model.total_decay(k));
      if (model.coh_rate(j, k) < floor - 1e-12) {
        throw InvalidRatesError(
            "coherence rate (" + std::to_string(j) + "," + std::to_string(k) +
            ") below the positivity floor (Gamma_j + Gamma_k)/2 = " + std::to_string(floor));
      }
    }
  }
  return model;
}

double RelaxationModel::total_decay(int j) const {
  double g = 0.0;
  for (int k = 0; k < dim_; ++k) g += pop_rate(k, j);
  return g;
}

}  // namespace bloch
