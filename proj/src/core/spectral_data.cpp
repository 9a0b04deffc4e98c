#include "bloch/core/spectral_data.hpp"

#include <cmath>
#include <utility>

#include "bloch/core/hermitian_eigen.hpp"

namespace bloch {

SpectralData::SpectralData(ComplexMatrix p, std::vector<double> eigenvalues,
                           ComplexMatrix eigenvectors)
    : p_(std::move(p)),
      eigenvalues_(std::move(eigenvalues)),
      eigenvectors_(std::move(eigenvectors)) {}

SpectralData SpectralData::compute(const ComplexMatrix& p, double dedup_tol) {
  EigenDecomposition eig = eigendecompose_hermitian(p);
  SpectralData spec(p, std::move(eig.eigenvalues), std::move(eig.eigenvectors));

  if (dedup_tol <= 0.0) {
    dedup_tol = 1e-8 * std::max(1.0, spec.spectral_radius());
  }
  spec.dedup_tol_ = dedup_tol;

  // Cluster the sorted eigenvalues; one representative (the cluster mean)
  // per cluster becomes an interpolation node.
  const std::vector<double>& lam = spec.eigenvalues_;
  std::size_t start = 0;
  for (std::size_t i = 1; i <= lam.size(); ++i) {
    if (i == lam.size() || lam[i] - lam[i - 1] > dedup_tol) {
      double sum = 0.0;
      for (std::size_t k = start; k < i; ++k) sum += lam[k];
      spec.distinct_nodes_.push_back(sum / static_cast<double>(i - start));
      start = i;
    }
  }

  spec.newton_basis_.reserve(spec.distinct_nodes_.size());
  spec.newton_basis_.push_back(ComplexMatrix::identity(p.dim()));
  for (std::size_t l = 1; l < spec.distinct_nodes_.size(); ++l) {
    ComplexMatrix factor = p;
    for (int i = 0; i < p.dim(); ++i) factor(i, i) -= spec.distinct_nodes_[l - 1];
    spec.newton_basis_.push_back(spec.newton_basis_.back() * factor);
  }
  return spec;
}

double SpectralData::spectral_radius() const {
  double r = 0.0;
  for (double lam : eigenvalues_) r = std::max(r, std::abs(lam));
  return r;
}

SpectralData spectral_precompute(const LevelSystem& sys, double dedup_tol) {
  return SpectralData::compute(sys.polarizability(), dedup_tol);
}

ComplexMatrix unitary_exponential(double gamma, const SpectralData& spec) {
  const ComplexMatrix& u = spec.eigenvectors();
  const int n = u.dim();
  ComplexMatrix scaled(n);  // U * diag(e^{i gamma lambda})
  for (int k = 0; k < n; ++k) {
    const Complex phase = std::polar(1.0, gamma * spec.eigenvalues()[k]);
    for (int i = 0; i < n; ++i) scaled(i, k) = u(i, k) * phase;
  }
  return scaled * u.adjoint();
}

}  // namespace bloch
