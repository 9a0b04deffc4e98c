#pragma once

#include <vector>

#include "bloch/core/spectral_data.hpp"

namespace bloch {

/// Diagnostic decomposition of the interpolation polynomial P_gamma(p) in the
/// power basis: P = sum_j alpha_j(gamma) p^j = alpha0 + i E alpha1_tilde Q(p),
/// with Q(p) = p + sum_{j>=2} (alpha_j/alpha_1) p^j. phi_over_dt is the
/// step-size renormalization alpha1_tilde / (alpha0 dt); it tends to 1 as
/// dt -> 0 at fixed field. It is complex in general (asymmetric spectra give
/// it an O(dt) imaginary part), so the field keeps both components.
///
/// For three-level systems the canonical-form parameters are also reported:
/// alpha = alpha0, beta = -i alpha1 / E, xi = alpha2 / alpha1^2 (coefficients
/// taken on powers of V = E p). Their dt -> 0 limits are 1, dt, 1/2.
struct NsfdReport {
  double gamma;
  double dt;
  double e_field;
  std::vector<Complex> alpha;  // power-basis coefficients, zero-padded to N
  Complex alpha0;
  Complex alpha1_tilde;
  Complex phi_over_dt;
  std::vector<Complex> q_poly_coeffs;  // q_0 = 0, q_1 = 1, q_j = alpha_j / alpha_1

  bool has_canonical = false;
  Complex canonical_alpha;
  Complex canonical_beta;
  Complex canonical_xi;
};

/// Requires gamma = dt * e_field. At zero field the report carries the
/// analytic limits (alpha = (1,0,...), phi_over_dt = 1) instead of dividing
/// by zero; elsewhere a vanishing alpha0 or alpha1_tilde raises
/// VanishingCoefficientError.
NsfdReport nsfd_report(double gamma, double dt, double e_field, const SpectralData& spec);

}  // namespace bloch
