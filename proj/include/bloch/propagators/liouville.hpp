#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "bloch/core/density_matrix.hpp"
#include "bloch/core/linear_solve.hpp"
#include "bloch/core/spectral_data.hpp"

namespace bloch {

enum class LiouvilleVariant { Exponential, CrankNicolson, Newton, Canonical3 };

std::string variant_name(LiouvilleVariant v);

/// Divided differences of f(x) = e^{i gamma x} at pairwise distinct nodes:
/// (f[n1], f[n1,n2], ..., f[n1..nM]) via the triangular recursion.
std::vector<Complex> newton_divided_differences(double gamma, const std::vector<double>& nodes);

/// Interpolation of x -> e^{i gamma x} at the distinct nodes, evaluated at p
/// as the linear combination sum_l c_l B_l over the precomputed Newton basis.
/// Exact for diagonalizable p because the deduplicated nodes cover the whole
/// spectrum.
ComplexMatrix newton_polynomial(double gamma, const SpectralData& spec);

/// Same polynomial evaluated by the nested (Horner) form; used as an identity
/// oracle for newton_polynomial and as the per-step evaluation the timing
/// benchmarks measure.
ComplexMatrix newton_polynomial_horner(double gamma, const SpectralData& spec);

struct Canonical3Coefficients {
  Complex alpha0;
  Complex alpha1;
  Complex alpha2;
};

/// Power-basis coefficients with alpha0 + alpha1*x + alpha2*x^2 = e^{i gamma x}
/// at the three nodes. Closed-form Lagrange expansion; the interpolation
/// conditions are re-checked on every call. Throws DegenerateSpectrumError
/// when the node separation is below 1e-6 * max(1, max|node|).
Canonical3Coefficients canonical3_coefficients(double gamma, const std::array<double, 3>& nodes);

/// Cayley transform (I + i gamma p / 2)(I - i gamma p / 2)^{-1}; unitary for
/// Hermitian p and equal to exp(i gamma p) + O(gamma^3).
ComplexMatrix cayley(double gamma, const ComplexMatrix& p);

/// One Liouville step strategy. All variants expose the matrix standing in
/// for exp(i gamma p) through conjugation_matrix(). The Exponential, Newton
/// and Canonical3 steps conjugate by that (unitary) matrix. The CrankNicolson
/// step instead solves the implicit midpoint system
///   rho' + (i gamma/2)[p, rho'] = rho - (i gamma/2)[p, rho],
/// the historical scheme, which conserves trace and Hermiticity but not
/// positivity.
class LiouvilleStrategy {
 public:
  static LiouvilleStrategy exponential(SpectralData spec);
  /// Exponential variant evaluating exp(i gamma p) with the generic series
  /// routine on every step; the comparison column of the timing benchmarks.
  static LiouvilleStrategy exponential_series(SpectralData spec);
  static LiouvilleStrategy newton(SpectralData spec);
  /// Newton variant evaluating the polynomial by the nested Horner form per
  /// step instead of the cached basis.
  static LiouvilleStrategy newton_horner(SpectralData spec);
  static LiouvilleStrategy canonical3(SpectralData spec);
  static LiouvilleStrategy crank_nicolson(const ComplexMatrix& p);

  LiouvilleVariant variant() const { return variant_; }

  /// The matrix playing the role of exp(i gamma p) for this strategy.
  ComplexMatrix conjugation_matrix(double gamma, double dt) const;

  /// Advances rho by one Liouville step with gamma = dt * E^{n+1/2}.
  DensityMatrix step(const DensityMatrix& rho, double gamma, double dt) const;

 private:
  enum class EvalMode { Spectral, Series, CachedBasis, Horner, Cayley };

  LiouvilleStrategy(LiouvilleVariant variant, EvalMode mode, std::optional<SpectralData> spec,
                    std::optional<ComplexMatrix> p);

  DensityMatrix crank_nicolson_step(const DensityMatrix& rho, double gamma) const;

  LiouvilleVariant variant_;
  EvalMode mode_;
  std::optional<SpectralData> spec_;
  std::optional<ComplexMatrix> p_;
  std::vector<Complex> commutator_op_;   // CrankNicolson: N^2 x N^2 matrix of X -> [p, X]
  std::vector<ComplexMatrix> horner_factors_;  // Horner mode: p - node_k I, gamma-independent
};

/// Free-function form used throughout the tests.
inline ComplexMatrix conjugation_matrix(const LiouvilleStrategy& strategy, double gamma,
                                        double dt) {
  return strategy.conjugation_matrix(gamma, dt);
}
inline DensityMatrix liouville_step(const LiouvilleStrategy& strategy, const DensityMatrix& rho,
                                    double gamma, double dt) {
  return strategy.step(rho, gamma, dt);
}

}  // namespace bloch
