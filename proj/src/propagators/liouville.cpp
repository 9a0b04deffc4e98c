#include "bloch/propagators/liouville.hpp"

#include <cmath>
#include <utility>

#include "bloch/core/matrix_exponential.hpp"

namespace bloch {

std::string variant_name(LiouvilleVariant v) {
  switch (v) {
    case LiouvilleVariant::Exponential: return "exponential";
    case LiouvilleVariant::CrankNicolson: return "crank-nicolson";
    case LiouvilleVariant::Newton: return "newton";
    case LiouvilleVariant::Canonical3: return "canonical";
  }
  return "unknown";
}

namespace {

constexpr int kStackNodes = 16;

// In-place divided-difference table over pre-validated (pairwise distinct)
// nodes: out[l] = f[node_0, ..., node_l] with f(x) = e^{i gamma x}.
void divided_differences_into(double gamma, const double* nodes, int m, Complex* out) {
  for (int k = 0; k < m; ++k) out[k] = std::polar(1.0, gamma * nodes[k]);
  for (int l = 1; l < m; ++l) {
    for (int k = m - 1; k >= l; --k) {
      out[k] = (out[k] - out[k - 1]) / (nodes[k] - nodes[k - l]);
    }
  }
}

}  // namespace

std::vector<Complex> newton_divided_differences(double gamma, const std::vector<double>& nodes) {
  const std::size_t m = nodes.size();
  if (m == 0) throw InvalidArgumentError("divided differences: empty node list");

  double scale = 1.0;
  for (double x : nodes) scale = std::max(scale, std::abs(x));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (std::abs(nodes[i] - nodes[j]) < 1e-14 * scale) {
        throw NodeCollisionError("divided differences: nodes " + std::to_string(i) + " and " +
                                 std::to_string(j) + " coincide");
      }
    }
  }

  std::vector<Complex> table(m);
  for (std::size_t k = 0; k < m; ++k) table[k] = std::polar(1.0, gamma * nodes[k]);

  std::vector<Complex> out;
  out.reserve(m);
  out.push_back(table[0]);
  // After pass l, table[k] holds f[node_k, ..., node_{k+l}].
  for (std::size_t l = 1; l < m; ++l) {
    for (std::size_t k = 0; k + l < m; ++k) {
      table[k] = (table[k] - table[k + 1]) / (nodes[k] - nodes[k + l]);
    }
    out.push_back(table[0]);
  }
  return out;
}

ComplexMatrix newton_polynomial(double gamma, const SpectralData& spec) {
  const std::vector<double>& nodes = spec.distinct_nodes();
  const std::vector<ComplexMatrix>& basis = spec.newton_basis();
  const int m = static_cast<int>(nodes.size());
  ComplexMatrix result(spec.matrix().dim());
  if (m <= kStackNodes) {
    std::array<Complex, kStackNodes> coeff;
    divided_differences_into(gamma, nodes.data(), m, coeff.data());
    for (int l = 0; l < m; ++l) add_scaled(result, coeff[l], basis[l]);
  } else {
    const std::vector<Complex> coeff = newton_divided_differences(gamma, nodes);
    for (int l = 0; l < m; ++l) add_scaled(result, coeff[l], basis[l]);
  }
  return result;
}

ComplexMatrix newton_polynomial_horner(double gamma, const SpectralData& spec) {
  const std::vector<double>& nodes = spec.distinct_nodes();
  const std::vector<Complex> coeff = newton_divided_differences(gamma, nodes);
  const ComplexMatrix& p = spec.matrix();
  const int n = p.dim();
  const std::size_t m = coeff.size();

  ComplexMatrix result = ComplexMatrix::identity(n);
  result *= coeff[m - 1];
  for (std::size_t j = m - 1; j > 0; --j) {
    ComplexMatrix factor = p;
    for (int i = 0; i < n; ++i) factor(i, i) -= nodes[j - 1];
    result = factor * result;
    for (int i = 0; i < n; ++i) result(i, i) += coeff[j - 1];
  }
  return result;
}

Canonical3Coefficients canonical3_coefficients(double gamma, const std::array<double, 3>& nodes) {
  double scale = 1.0;
  for (double x : nodes) scale = std::max(scale, std::abs(x));
  double min_gap = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      min_gap = std::min(min_gap, std::abs(nodes[i] - nodes[j]));
    }
  }
  if (min_gap < 1e-6 * scale) {
    throw DegenerateSpectrumError("canonical coefficients: eigenvalue gap " +
                                  std::to_string(min_gap) + " below the degeneracy threshold");
  }

  Canonical3Coefficients c{0.0, 0.0, 0.0};
  for (int k = 0; k < 3; ++k) {
    const double li = nodes[(k + 1) % 3];
    const double lj = nodes[(k + 2) % 3];
    const double denom = (nodes[k] - li) * (nodes[k] - lj);
    const Complex fk = std::polar(1.0, gamma * nodes[k]) / denom;
    c.alpha0 += fk * (li * lj);
    c.alpha1 -= fk * (li + lj);
    c.alpha2 += fk;
  }

  for (int k = 0; k < 3; ++k) {
    const Complex reconstructed =
        c.alpha0 + c.alpha1 * nodes[k] + c.alpha2 * (nodes[k] * nodes[k]);
    if (std::abs(reconstructed - std::polar(1.0, gamma * nodes[k])) > 1e-12) {
      throw DegenerateSpectrumError(
          "canonical coefficients: interpolation residual above tolerance at node " +
          std::to_string(nodes[k]));
    }
  }
  return c;
}

ComplexMatrix cayley(double gamma, const ComplexMatrix& p) {
  const int n = p.dim();
  const Complex half(0.0, 0.5 * gamma);
  ComplexMatrix plus = ComplexMatrix::identity(n);
  ComplexMatrix minus = ComplexMatrix::identity(n);
  add_scaled(plus, half, p);
  add_scaled(minus, -half, p);
  // (I - i gamma p / 2)^{-1} (I + i gamma p / 2); the factors commute.
  return solve_linear(minus, plus);
}

LiouvilleStrategy::LiouvilleStrategy(LiouvilleVariant variant, EvalMode mode,
                                     std::optional<SpectralData> spec,
                                     std::optional<ComplexMatrix> p)
    : variant_(variant), mode_(mode), spec_(std::move(spec)), p_(std::move(p)) {
  if (variant_ == LiouvilleVariant::Canonical3) {
    if (spec_->matrix().dim() != 3) {
      throw InvalidArgumentError("canonical strategy requires a 3-level system");
    }
  }
  if (mode_ == EvalMode::Horner) {
    const ComplexMatrix& p = spec_->matrix();
    const std::vector<double>& nodes = spec_->distinct_nodes();
    for (std::size_t k = 0; k + 1 < nodes.size(); ++k) {
      ComplexMatrix factor = p;
      for (int i = 0; i < p.dim(); ++i) factor(i, i) -= nodes[k];
      horner_factors_.push_back(std::move(factor));
    }
  }
  if (variant_ == LiouvilleVariant::CrankNicolson) {
    const ComplexMatrix& pm = *p_;
    const int n = pm.dim();
    const int nn = n * n;
    commutator_op_.assign(static_cast<std::size_t>(nn) * nn, Complex(0.0, 0.0));
    // Row (i,j) of the operator X -> p X - X p over vec(X) with X stored
    // row-major.
    auto op = [&](int row, int col) -> Complex& {
      return commutator_op_[static_cast<std::size_t>(row) * nn + col];
    };
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const int row = i * n + j;
        for (int k = 0; k < n; ++k) {
          op(row, k * n + j) += pm(i, k);
          op(row, i * n + k) -= pm(k, j);
        }
      }
    }
  }
}

LiouvilleStrategy LiouvilleStrategy::exponential(SpectralData spec) {
  ComplexMatrix p = spec.matrix();
  return LiouvilleStrategy(LiouvilleVariant::Exponential, EvalMode::Spectral, std::move(spec),
                           std::move(p));
}

LiouvilleStrategy LiouvilleStrategy::exponential_series(SpectralData spec) {
  ComplexMatrix p = spec.matrix();
  return LiouvilleStrategy(LiouvilleVariant::Exponential, EvalMode::Series, std::move(spec),
                           std::move(p));
}

LiouvilleStrategy LiouvilleStrategy::newton(SpectralData spec) {
  return LiouvilleStrategy(LiouvilleVariant::Newton, EvalMode::CachedBasis, std::move(spec),
                           std::nullopt);
}

LiouvilleStrategy LiouvilleStrategy::newton_horner(SpectralData spec) {
  return LiouvilleStrategy(LiouvilleVariant::Newton, EvalMode::Horner, std::move(spec),
                           std::nullopt);
}

LiouvilleStrategy LiouvilleStrategy::canonical3(SpectralData spec) {
  ComplexMatrix p = spec.matrix();
  return LiouvilleStrategy(LiouvilleVariant::Canonical3, EvalMode::Spectral, std::move(spec),
                           std::move(p));
}

LiouvilleStrategy LiouvilleStrategy::crank_nicolson(const ComplexMatrix& p) {
  return LiouvilleStrategy(LiouvilleVariant::CrankNicolson, EvalMode::Cayley, std::nullopt, p);
}

ComplexMatrix LiouvilleStrategy::conjugation_matrix(double gamma, double dt) const {
  (void)dt;
  if (!std::isfinite(gamma)) {
    throw InvalidArgumentError("conjugation matrix: gamma must be finite");
  }
  const int n = spec_ ? spec_->matrix().dim() : p_->dim();
  if (gamma == 0.0) return ComplexMatrix::identity(n);

  switch (variant_) {
    case LiouvilleVariant::Exponential:
      if (mode_ == EvalMode::Series) {
        ComplexMatrix arg = *p_;
        arg *= Complex(0.0, gamma);
        return series_exponential(arg);
      }
      return unitary_exponential(gamma, *spec_);
    case LiouvilleVariant::Newton:
      if (mode_ == EvalMode::Horner) {
        // Nested evaluation over the cached shift factors.
        const std::vector<double>& nodes = spec_->distinct_nodes();
        const int m = static_cast<int>(nodes.size());
        std::array<Complex, kStackNodes> stack_coeff;
        std::vector<Complex> heap_coeff;
        const Complex* coeff = stack_coeff.data();
        if (m <= kStackNodes) {
          divided_differences_into(gamma, nodes.data(), m, stack_coeff.data());
        } else {
          heap_coeff = newton_divided_differences(gamma, nodes);
          coeff = heap_coeff.data();
        }
        ComplexMatrix result = ComplexMatrix::identity(n);
        result *= coeff[m - 1];
        ComplexMatrix scratch(n);
        for (int j = m - 1; j > 0; --j) {
          multiply_into(scratch, horner_factors_[j - 1], result);
          swap(result, scratch);
          for (int i = 0; i < n; ++i) result(i, i) += coeff[j - 1];
        }
        return result;
      }
      return newton_polynomial(gamma, *spec_);
    case LiouvilleVariant::Canonical3: {
      const std::vector<double>& lam = spec_->eigenvalues();
      const Canonical3Coefficients c =
          canonical3_coefficients(gamma, {lam[0], lam[1], lam[2]});
      const ComplexMatrix& p = *p_;
      ComplexMatrix result = ComplexMatrix::identity(3);
      result *= c.alpha0;
      add_scaled(result, c.alpha1, p);
      add_scaled(result, c.alpha2, p * p);
      return result;
    }
    case LiouvilleVariant::CrankNicolson:
      return cayley(gamma, *p_);
  }
  throw InvalidArgumentError("conjugation matrix: unknown variant");
}

DensityMatrix LiouvilleStrategy::step(const DensityMatrix& rho, double gamma, double dt) const {
  if (gamma == 0.0) return rho;  // zero-field steps are the identity
  if (variant_ == LiouvilleVariant::CrankNicolson) {
    return crank_nicolson_step(rho, gamma);
  }
  const ComplexMatrix m = conjugation_matrix(gamma, dt);
  return DensityMatrix::unchecked(conjugate_by(m, rho.matrix()));
}

DensityMatrix LiouvilleStrategy::crank_nicolson_step(const DensityMatrix& rho,
                                                     double gamma) const {
  const int n = rho.dim();
  if (p_->dim() != n) {
    throw InvalidArgumentError("Liouville step: dimension mismatch");
  }
  const int nn = n * n;
  const Complex half(0.0, 0.5 * gamma);

  // rhs = (Id - i gamma/2 K) vec(rho), system = Id + i gamma/2 K.
  std::vector<Complex> rhs(rho.matrix().data(), rho.matrix().data() + rho.matrix().size());
  for (int row = 0; row < nn; ++row) {
    Complex acc(0.0, 0.0);
    for (int col = 0; col < nn; ++col) {
      acc += commutator_op_[static_cast<std::size_t>(row) * nn + col] * rho.matrix().data()[col];
    }
    rhs[row] -= half * acc;
  }
  std::vector<Complex> system(commutator_op_);
  for (Complex& z : system) z *= half;
  for (int d = 0; d < nn; ++d) system[static_cast<std::size_t>(d) * nn + d] += 1.0;

  LuSolver lu(std::move(system), nn);
  lu.solve(rhs);
  return DensityMatrix::unchecked(ComplexMatrix::from_data(n, std::move(rhs)));
}

}  // namespace bloch
