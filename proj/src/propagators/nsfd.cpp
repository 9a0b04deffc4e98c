#include "bloch/propagators/nsfd.hpp"

#include <cmath>

#include "bloch/propagators/liouville.hpp"

namespace bloch {

namespace {

// Expands the Newton-form polynomial sum_l c_l prod_{k<l}(x - node_k) into
// power-basis coefficients by synthetic multiplication of the linear factors.
std::vector<Complex> newton_to_power(const std::vector<Complex>& coeff,
                                     const std::vector<double>& nodes) {
  std::vector<Complex> power{coeff.back()};
  for (std::size_t j = coeff.size() - 1; j > 0; --j) {
    // power <- power * (x - node_{j-1}) + c_{j-1}
    std::vector<Complex> next(power.size() + 1, Complex(0.0, 0.0));
    for (std::size_t d = 0; d < power.size(); ++d) {
      next[d + 1] += power[d];
      next[d] -= nodes[j - 1] * power[d];
    }
    next[0] += coeff[j - 1];
    power = std::move(next);
  }
  return power;
}

}  // namespace

NsfdReport nsfd_report(double gamma, double dt, double e_field, const SpectralData& spec) {
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw InvalidArgumentError("nsfd report: dt must be positive");
  }
  if (std::abs(gamma - dt * e_field) > 1e-12 * std::max(1.0, std::abs(gamma))) {
    throw InvalidArgumentError("nsfd report: gamma must equal dt * e_field");
  }
  const int n = spec.matrix().dim();

  NsfdReport report;
  report.gamma = gamma;
  report.dt = dt;
  report.e_field = e_field;
  report.alpha.assign(n, Complex(0.0, 0.0));
  report.q_poly_coeffs.assign(n, Complex(0.0, 0.0));

  if (e_field == 0.0) {
    // Zero-field limit: P is the constant 1, and all the ratios carry their
    // dt -> 0 limit values.
    report.alpha[0] = 1.0;
    report.alpha0 = 1.0;
    report.alpha1_tilde = dt;
    report.phi_over_dt = 1.0;
    if (n > 1) report.q_poly_coeffs[1] = 1.0;
    if (n == 3) {
      report.has_canonical = true;
      report.canonical_alpha = 1.0;
      report.canonical_beta = dt;
      report.canonical_xi = 0.5;
    }
    return report;
  }

  const std::vector<Complex> coeff = newton_divided_differences(gamma, spec.distinct_nodes());
  const std::vector<Complex> power = newton_to_power(coeff, spec.distinct_nodes());
  for (std::size_t j = 0; j < power.size() && j < static_cast<std::size_t>(n); ++j) {
    report.alpha[j] = power[j];
  }

  report.alpha0 = report.alpha[0];
  const Complex alpha1 = n > 1 ? report.alpha[1] : Complex(0.0, 0.0);
  report.alpha1_tilde = alpha1 / Complex(0.0, e_field);

  if (std::abs(report.alpha0) < 1e-12) {
    throw VanishingCoefficientError("nsfd report: alpha_0 vanishes at gamma = " +
                                    std::to_string(gamma));
  }
  if (std::abs(report.alpha1_tilde) < 1e-12 * dt) {
    throw VanishingCoefficientError("nsfd report: alpha_1 vanishes at gamma = " +
                                    std::to_string(gamma));
  }

  report.phi_over_dt = report.alpha1_tilde / (report.alpha0 * dt);
  report.q_poly_coeffs[1] = 1.0;
  for (int j = 2; j < n; ++j) report.q_poly_coeffs[j] = report.alpha[j] / alpha1;

  if (n == 3 && spec.distinct_nodes().size() == 3) {
    report.has_canonical = true;
    report.canonical_alpha = report.alpha0;
    report.canonical_beta = Complex(0.0, -1.0) * alpha1 / e_field;
    report.canonical_xi = report.alpha[2] / (alpha1 * alpha1);
  }
  return report;
}

}  // namespace bloch
