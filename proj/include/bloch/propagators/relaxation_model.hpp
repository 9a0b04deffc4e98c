#pragma once

#include <vector>

#include "bloch/errors.hpp"

namespace bloch {

enum class RelaxationKind { None, Pauli };

/// Linear population-transfer and coherence-damping rates.
///
/// pop_rates W is the matrix of transition rates, W(j,k) = rate from level k
/// into level j, zero diagonal. coh_rates is the symmetric matrix of
/// coherence damping rates. A Pauli model must satisfy
/// coh_rates(j,k) >= (Gamma_j + Gamma_k)/2 with Gamma_j the total decay rate
/// out of level j, which is what keeps the density matrix positive
/// semidefinite under the flow.
class RelaxationModel {
 public:
  static RelaxationModel none(int n_levels);
  static RelaxationModel pauli(int n_levels, std::vector<double> pop_rates,
                               std::vector<double> coh_rates);

  RelaxationKind kind() const { return kind_; }
  int dim() const { return dim_; }

  double pop_rate(int j, int k) const { return pop_rates_[static_cast<std::size_t>(j) * dim_ + k]; }
  double coh_rate(int j, int k) const { return coh_rates_[static_cast<std::size_t>(j) * dim_ + k]; }

  /// Total decay rate out of level j: sum_k W(k, j).
  double total_decay(int j) const;

 private:
  RelaxationModel(RelaxationKind kind, int dim, std::vector<double> pop, std::vector<double> coh)
      : kind_(kind), dim_(dim), pop_rates_(std::move(pop)), coh_rates_(std::move(coh)) {}

  RelaxationKind kind_;
  int dim_;
  std::vector<double> pop_rates_;
  std::vector<double> coh_rates_;
};

}  // namespace bloch
