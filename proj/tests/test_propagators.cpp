#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "bloch/core/hermitian_eigen.hpp"
#include "bloch/core/linear_solve.hpp"
#include "bloch/core/matrix_exponential.hpp"
#include "bloch/harness/random_matrices.hpp"
#include "bloch/propagators/liouville.hpp"
#include "bloch/propagators/nsfd.hpp"
#include "bloch/propagators/relax_nut.hpp"

using namespace bloch;

namespace {

const double kPi = std::numbers::pi;

ComplexMatrix pauli_x() { return ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}}); }

ComplexMatrix three_level_p() {
  return ComplexMatrix::from_rows({{0.0, 1.0, 1.1}, {1.0, 0.0, 1.0}, {1.1, 1.0, 0.0}});
}

ComplexMatrix degenerate_p() {
  return ComplexMatrix::from_rows({{0.0, 1.0, 1.0}, {1.0, 0.0, 1.0}, {1.0, 1.0, 0.0}});
}

LevelSystem three_level_system() {
  return LevelSystem({0.0, kPi, 2.0 * kPi}, three_level_p(), RelaxationModel::none(3));
}

DensityMatrix sample_state() {
  // A generic mixed 3-level state with nonzero coherences.
  ComplexMatrix rho = ComplexMatrix::from_rows({{0.6, Complex(0.1, 0.05), Complex(0.02, -0.01)},
                                                {Complex(0.1, -0.05), 0.3, Complex(0.04, 0.03)},
                                                {Complex(0.02, 0.01), Complex(0.04, -0.03), 0.1}});
  return DensityMatrix(rho);
}

std::vector<double> state_spectrum(const ComplexMatrix& rho) {
  return eigendecompose_hermitian(rho).eigenvalues;
}

}  // namespace

TEST_CASE("relaxation model validation") {
  CHECK_NOTHROW(RelaxationModel::none(3));
  CHECK_NOTHROW(RelaxationModel::pauli(2, {0.0, 1.0, 0.0, 0.0}, {0.0, 0.5, 0.5, 0.0}));

  // Coherence rate below the positivity floor (Gamma_2 = 1 requires >= 0.5).
  CHECK_THROWS_AS(RelaxationModel::pauli(2, {0.0, 1.0, 0.0, 0.0}, {0.0, 0.4, 0.4, 0.0}),
                  InvalidRatesError);
  // Negative rate.
  CHECK_THROWS_AS(RelaxationModel::pauli(2, {0.0, -1.0, 0.0, 0.0}, {0.0, 0.5, 0.5, 0.0}),
                  InvalidRatesError);
  // Nonzero diagonal.
  CHECK_THROWS_AS(RelaxationModel::pauli(2, {0.5, 0.0, 0.0, 0.0}, {0.0, 0.0, 0.0, 0.0}),
                  InvalidRatesError);
  // Asymmetric coherence rates.
  CHECK_THROWS_AS(RelaxationModel::pauli(2, {0.0, 0.0, 0.0, 0.0}, {0.0, 0.2, 0.3, 0.0}),
                  InvalidRatesError);
}

TEST_CASE("relaxation-nutation propagator from the benchmark frequencies") {
  const RelaxNutPropagator prop = build_relax_nut(three_level_system(), 0.05);
  // omega_12 = -pi, so the (1,2) coherence picks up e^{+i pi 0.025} per half step.
  const Complex expected = std::polar(1.0, kPi * 0.025);
  CHECK(std::abs(prop.coh_phase()(0, 1) - expected) < 1e-15);
  CHECK(std::abs(prop.coh_phase()(1, 0) - std::conj(expected)) < 1e-15);
  for (int j = 0; j < 3; ++j) {
    for (int k = 0; k < 3; ++k) {
      CHECK(prop.pop_half_step(j, k) == (j == k ? 1.0 : 0.0));
      CHECK(std::abs(prop.coh_phase()(j, k)) <= 1.0 + 1e-15);
    }
  }
  CHECK_THROWS_AS(build_relax_nut(three_level_system(), 0.0), InvalidArgumentError);
}

TEST_CASE("relaxation-nutation propagator with zero frequencies is the identity") {
  const LevelSystem sys({0.0, 0.0, 0.0}, three_level_p(), RelaxationModel::none(3));
  const RelaxNutPropagator prop = build_relax_nut(sys, 0.1);
  const DensityMatrix rho = sample_state();
  CHECK(max_abs_diff(prop.half_step(rho).matrix(), rho.matrix()) == 0.0);
}

TEST_CASE("population half step matches the closed-form 2x2 rate exponential") {
  const RelaxationModel relax =
      RelaxationModel::pauli(2, {0.0, 1.0, 0.0, 0.0}, {0.0, 0.5, 0.5, 0.0});
  const LevelSystem sys({0.0, 0.0}, pauli_x(), relax);
  const RelaxNutPropagator prop = build_relax_nut(sys, 0.1);

  // Rate matrix R = [[0, 1], [0, -1]] satisfies R^2 = -R, so
  // exp(t R) = I + (1 - e^{-t}) R.
  const double decayed = 1.0 - std::exp(-0.05);
  CHECK(prop.pop_half_step(0, 0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(prop.pop_half_step(0, 1) == doctest::Approx(decayed).epsilon(1e-12));
  CHECK(prop.pop_half_step(1, 0) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(prop.pop_half_step(1, 1) == doctest::Approx(std::exp(-0.05)).epsilon(1e-12));

  const double col0 = prop.pop_half_step(0, 0) + prop.pop_half_step(1, 0);
  const double col1 = prop.pop_half_step(0, 1) + prop.pop_half_step(1, 1);
  CHECK(std::abs(col0 - 1.0) <= 1e-12);
  CHECK(std::abs(col1 - 1.0) <= 1e-12);
}

TEST_CASE("relaxation-nutation half step rotates coherences and fixes populations") {
  const LevelSystem sys({kPi, 0.0}, pauli_x(), RelaxationModel::none(2));
  const RelaxNutPropagator prop = build_relax_nut(sys, 0.05);

  ComplexMatrix rho(2);
  rho(0, 0) = 0.5;
  rho(1, 1) = 0.5;
  rho(0, 1) = 0.1;
  rho(1, 0) = 0.1;
  const DensityMatrix out = prop.half_step(DensityMatrix(rho));
  // omega_12 = pi: rho_12 <- 0.1 e^{-i pi 0.025}.
  CHECK(std::abs(out.matrix()(0, 1) - 0.1 * std::polar(1.0, -kPi * 0.025)) < 1e-15);
  CHECK(out.matrix()(0, 0) == Complex(0.5, 0.0));

  // Diagonal states are untouched by nutation.
  const DensityMatrix diag = DensityMatrix::ground_state(2);
  CHECK(max_abs_diff(prop.half_step(diag).matrix(), diag.matrix()) == 0.0);

  // Trace preserved per step, with relaxation active too.
  const RelaxationModel relax =
      RelaxationModel::pauli(2, {0.0, 1.0, 0.0, 0.0}, {0.0, 0.5, 0.5, 0.0});
  const LevelSystem damped({kPi, 0.0}, pauli_x(), relax);
  const RelaxNutPropagator damped_prop = build_relax_nut(damped, 0.05);
  const DensityMatrix evolved = damped_prop.half_step(DensityMatrix(rho));
  CHECK(std::abs(evolved.matrix().trace() - Complex(1.0, 0.0)) <= 1e-13);
}

TEST_CASE("conjugation matrix at gamma = 0 is the identity for every variant") {
  const SpectralData spec = SpectralData::compute(three_level_p());
  const LevelSystem sys = three_level_system();
  const std::vector<LiouvilleStrategy> strategies{
      LiouvilleStrategy::exponential(spec), LiouvilleStrategy::newton(spec),
      LiouvilleStrategy::canonical3(spec), LiouvilleStrategy::crank_nicolson(sys.polarizability())};
  for (const auto& strategy : strategies) {
    CHECK(max_abs_diff(strategy.conjugation_matrix(0.0, 0.05), ComplexMatrix::identity(3)) == 0.0);
  }
}

TEST_CASE("newton and exponential conjugation matrices coincide") {
  const SpectralData spec = SpectralData::compute(three_level_p());
  const ComplexMatrix newton = LiouvilleStrategy::newton(spec).conjugation_matrix(0.31, 0.05);
  const ComplexMatrix exact = unitary_exponential(0.31, spec);
  CHECK(max_abs_diff(newton, exact) < 1e-12);
}

TEST_CASE("crank-nicolson conjugation matrix matches the 2x2 hand algebra") {
  // (I + 0.1 i p)(I - 0.1 i p)^{-1} = ((1 - 0.01) I + 0.2 i p) / 1.01 when p^2 = I.
  const ComplexMatrix a = cayley(0.2, pauli_x());
  ComplexMatrix expected = ComplexMatrix::identity(2);
  expected *= Complex(0.99 / 1.01, 0.0);
  add_scaled(expected, Complex(0.0, 0.2 / 1.01), pauli_x());
  CHECK(max_abs_diff(a, expected) < 1e-15);
}

TEST_CASE("every conjugation matrix is unitary for Hermitian couplings") {
  const SpectralData spec = SpectralData::compute(three_level_p());
  const LevelSystem sys = three_level_system();
  const std::vector<LiouvilleStrategy> strategies{
      LiouvilleStrategy::exponential(spec), LiouvilleStrategy::newton(spec),
      LiouvilleStrategy::canonical3(spec), LiouvilleStrategy::crank_nicolson(sys.polarizability())};
  const ComplexMatrix identity = ComplexMatrix::identity(3);
  for (const auto& strategy : strategies) {
    for (double gamma : {0.05, 0.31, 1.4}) {
      const ComplexMatrix m = strategy.conjugation_matrix(gamma, 0.05);
      CHECK(max_abs_diff(m.adjoint() * m, identity) <= 1e-11);
    }
  }
}

TEST_CASE("divided differences of the constant function") {
  const auto dd = newton_divided_differences(0.0, {0.3, 1.0, 2.5});
  CHECK(std::abs(dd[0] - Complex(1.0, 0.0)) == 0.0);
  CHECK(std::abs(dd[1]) < 1e-15);
  CHECK(std::abs(dd[2]) < 1e-15);
}

TEST_CASE("divided differences on (-1, 1) reduce to i sin(gamma)") {
  for (double gamma : {0.2, 1.3, -0.7}) {
    const auto dd = newton_divided_differences(gamma, {-1.0, 1.0});
    CHECK(std::abs(dd[0] - std::polar(1.0, -gamma)) < 1e-15);
    CHECK(std::abs(dd[1] - Complex(0.0, std::sin(gamma))) < 1e-15);
  }
}

TEST_CASE("divided differences match a Vandermonde solve") {
  const std::vector<double> nodes{0.0, 1.0, 2.0};
  const double gamma = 0.5;
  const auto dd = newton_divided_differences(gamma, nodes);

  // Power-basis coefficients from the 3x3 Vandermonde system.
  ComplexMatrix vand(3);
  ComplexMatrix values(3);  // first column carries the rhs
  for (int i = 0; i < 3; ++i) {
    vand(i, 0) = 1.0;
    vand(i, 1) = nodes[i];
    vand(i, 2) = nodes[i] * nodes[i];
    values(i, 0) = std::polar(1.0, gamma * nodes[i]);
  }
  const ComplexMatrix coeffs = solve_linear(vand, values);

  for (double x : {0.3, 1.5, -0.8}) {
    const Complex newton_value =
        dd[0] + dd[1] * (x - nodes[0]) + dd[2] * (x - nodes[0]) * (x - nodes[1]);
    const Complex power_value = coeffs(0, 0) + coeffs(1, 0) * x + coeffs(2, 0) * x * x;
    CHECK(std::abs(newton_value - power_value) < 1e-13);
  }

  CHECK_THROWS_AS(newton_divided_differences(0.5, {1.0, 1.0}), NodeCollisionError);
}

TEST_CASE("newton polynomial is exact on the deduplicated degenerate spectrum") {
  const SpectralData spec = SpectralData::compute(degenerate_p());
  CHECK(max_abs_diff(newton_polynomial(0.0, spec), ComplexMatrix::identity(3)) == 0.0);

  const double gamma = 0.4;
  const ComplexMatrix poly = newton_polynomial(gamma, spec);
  CHECK(max_abs_diff(poly, unitary_exponential(gamma, spec)) < 1e-12);

  // Explicit two-node form f[-1] I + f[-1,2] (p + I).
  const auto dd = newton_divided_differences(gamma, spec.distinct_nodes());
  ComplexMatrix expected(3);
  add_scaled(expected, dd[0], ComplexMatrix::identity(3));
  add_scaled(expected, dd[1], spec.newton_basis()[1]);
  CHECK(max_abs_diff(poly, expected) == 0.0);
}

TEST_CASE("newton polynomial matches the exponential on a 10-level draw") {
  std::mt19937_64 rng(5150);
  const ComplexMatrix p = random_hermitian_zero_diag(10, rng);
  const SpectralData spec = SpectralData::compute(p);
  CHECK(max_abs_diff(newton_polynomial(0.1, spec), unitary_exponential(0.1, spec)) < 1e-10);
}

TEST_CASE("cached-basis and Horner evaluation produce the same polynomial") {
  std::mt19937_64 rng(99);
  for (int n : {2, 3, 5, 8}) {
    const ComplexMatrix p = random_hermitian_zero_diag(n, rng);
    const SpectralData spec = SpectralData::compute(p);
    for (double gamma : {0.05, 0.7, -1.3}) {
      CHECK(max_abs_diff(newton_polynomial(gamma, spec),
                         newton_polynomial_horner(gamma, spec)) < 1e-13);
    }
  }
}

TEST_CASE("canonical coefficients solve the interpolation conditions") {
  const auto zero = canonical3_coefficients(0.0, {-1.0, 0.4, 1.7});
  CHECK(std::abs(zero.alpha0 - Complex(1.0, 0.0)) < 1e-15);
  CHECK(std::abs(zero.alpha1) < 1e-15);
  CHECK(std::abs(zero.alpha2) < 1e-15);

  for (double gamma : {0.3, 1.1, -0.8}) {
    const auto c = canonical3_coefficients(gamma, {-1.0, 0.0, 1.0});
    CHECK(std::abs(c.alpha0 - Complex(1.0, 0.0)) < 1e-14);
    CHECK(std::abs(c.alpha1 - Complex(0.0, std::sin(gamma))) < 1e-14);
    CHECK(std::abs(c.alpha2 - Complex(std::cos(gamma) - 1.0, 0.0)) < 1e-14);
  }

  CHECK_THROWS_AS(canonical3_coefficients(0.3, {-1.0, -1.0 + 1e-9, 2.0}),
                  DegenerateSpectrumError);
}

TEST_CASE("canonical strategy reconstructs the exponential on the benchmark coupling") {
  const SpectralData spec = SpectralData::compute(three_level_p());
  const LiouvilleStrategy canonical = LiouvilleStrategy::canonical3(spec);
  CHECK(max_abs_diff(canonical.conjugation_matrix(0.31, 0.05), unitary_exponential(0.31, spec)) <
        1e-11);
}

TEST_CASE("cayley transform is the (1,1) Pade approximant") {
  CHECK(max_abs_diff(cayley(0.0, pauli_x()), ComplexMatrix::identity(2)) == 0.0);

  // Scalar analogue: (1 + i g x / 2)/(1 - i g x / 2) deviates from e^{i g x}
  // at third order.
  const double x = 0.9;
  double previous = 0.0;
  for (double g : {0.1, 0.05, 0.025}) {
    const Complex pade = Complex(1.0, 0.5 * g * x) / Complex(1.0, -0.5 * g * x);
    const double err = std::abs(pade - std::polar(1.0, g * x));
    const double normalized = err / (g * g * g);
    CHECK(normalized > 0.01);
    CHECK(normalized < 1.0);
    if (previous != 0.0) {
      CHECK(std::abs(previous - normalized) / normalized < 0.1);
    }
    previous = normalized;
  }
}

TEST_CASE("cayley transform has third-order local error against the series oracle") {
  const ComplexMatrix p = three_level_p();
  double previous_error = 0.0;
  for (double gamma : {0.1, 0.05, 0.025}) {
    ComplexMatrix arg = p;
    arg *= Complex(0.0, gamma);
    const double err = max_abs_diff(cayley(gamma, p), series_exponential(arg));
    if (previous_error != 0.0) {
      const double ratio = previous_error / err;
      CHECK(ratio > 6.0);
      CHECK(ratio < 10.0);
    }
    previous_error = err;
  }
  CHECK(max_abs_diff(cayley(0.3, p).adjoint() * cayley(0.3, p), ComplexMatrix::identity(3)) <
        1e-12);
}

TEST_CASE("liouville step identities") {
  const SpectralData spec = SpectralData::compute(three_level_p());
  const LiouvilleStrategy strategy = LiouvilleStrategy::exponential(spec);
  const DensityMatrix rho = sample_state();
  CHECK(max_abs_diff(liouville_step(strategy, rho, 0.0, 0.05).matrix(), rho.matrix()) == 0.0);

  const DensityMatrix mixed = DensityMatrix::maximally_mixed(3);
  CHECK(max_abs_diff(liouville_step(strategy, mixed, 0.8, 0.05).matrix(), mixed.matrix()) <
        1e-14);
}

TEST_CASE("newton and exponential steps agree on a pure state") {
  const SpectralData spec = SpectralData::compute(three_level_p());
  const DensityMatrix rho = DensityMatrix::ground_state(3);
  const DensityMatrix a = liouville_step(LiouvilleStrategy::exponential(spec), rho, 0.3, 0.05);
  const DensityMatrix b = liouville_step(LiouvilleStrategy::newton(spec), rho, 0.3, 0.05);
  CHECK(max_abs_diff(a.matrix(), b.matrix()) < 1e-12);
}

TEST_CASE("liouville step conserves trace and the spectrum for the exact strategies") {
  const SpectralData spec = SpectralData::compute(three_level_p());
  const LevelSystem sys = three_level_system();
  const DensityMatrix rho = sample_state();
  const std::vector<double> before = state_spectrum(rho.matrix());

  const std::vector<LiouvilleStrategy> exact{
      LiouvilleStrategy::exponential(spec), LiouvilleStrategy::newton(spec),
      LiouvilleStrategy::canonical3(spec)};
  for (const auto& strategy : exact) {
    const DensityMatrix out = liouville_step(strategy, rho, 0.7, 0.05);
    CHECK(std::abs(out.matrix().trace() - rho.matrix().trace()) <= 1e-13);
    CHECK(out.matrix().hermiticity_defect() <= 1e-13);
    const std::vector<double> after = state_spectrum(out.matrix());
    for (std::size_t k = 0; k < before.size(); ++k) {
      CHECK(std::abs(after[k] - before[k]) <= 1e-11);
    }
  }

  // The implicit midpoint step keeps trace and Hermiticity as well.
  const LiouvilleStrategy cn = LiouvilleStrategy::crank_nicolson(sys.polarizability());
  const DensityMatrix out = liouville_step(cn, rho, 0.7, 0.05);
  CHECK(std::abs(out.matrix().trace() - rho.matrix().trace()) <= 1e-13);
  CHECK(out.matrix().hermiticity_defect() <= 1e-13);
}

TEST_CASE("crank-nicolson step deviates from the exact flow at third order") {
  const SpectralData spec = SpectralData::compute(three_level_p());
  const LiouvilleStrategy cn = LiouvilleStrategy::crank_nicolson(three_level_p());
  const LiouvilleStrategy exact = LiouvilleStrategy::exponential(spec);
  const DensityMatrix rho = sample_state();

  double previous = 0.0;
  for (double gamma : {0.2, 0.1, 0.05}) {
    const double err = max_abs_diff(liouville_step(cn, rho, gamma, gamma).matrix(),
                                    liouville_step(exact, rho, gamma, gamma).matrix());
    CHECK(err > 0.0);
    if (previous != 0.0) {
      const double ratio = previous / err;
      CHECK(ratio > 5.0);
      CHECK(ratio < 12.0);
    }
    previous = err;
  }
}

TEST_CASE("strategy equivalence over random draws") {
  std::mt19937_64 rng(2718281828);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const ComplexMatrix p = random_hermitian_zero_diag(n, rng);
    const double gamma = uniform_in(rng, -2.0, 2.0);
    const SpectralData spec = SpectralData::compute(p);
    const ComplexMatrix exact = unitary_exponential(gamma, spec);
    CHECK(max_abs_diff(newton_polynomial(gamma, spec), exact) <= 1e-11 * exact.max_abs());
    if (n == 3) {
      const auto c = canonical3_coefficients(
          gamma, {spec.eigenvalues()[0], spec.eigenvalues()[1], spec.eigenvalues()[2]});
      ComplexMatrix canonical(3);
      add_scaled(canonical, c.alpha0, ComplexMatrix::identity(3));
      add_scaled(canonical, c.alpha1, p);
      add_scaled(canonical, c.alpha2, p * p);
      CHECK(max_abs_diff(canonical, exact) <= 1e-10);
    }
  }
}

TEST_CASE("nsfd report reproduces the small-step limit values") {
  const SpectralData spec = SpectralData::compute(three_level_p());
  const double dt = 1e-4;
  const NsfdReport report = nsfd_report(dt, dt, 1.0, spec);
  CHECK(std::abs(report.alpha0 - Complex(1.0, 0.0)) <= 1e-6);
  REQUIRE(report.has_canonical);
  CHECK(std::abs(report.canonical_alpha - Complex(1.0, 0.0)) <= 1e-6);
  CHECK(std::abs(report.canonical_xi - Complex(0.5, 0.0)) <= 1e-6);
  CHECK(std::abs(report.phi_over_dt - Complex(1.0, 0.0)) <= 1e-4);
}

TEST_CASE("nsfd report at zero field carries the limit values") {
  const SpectralData spec = SpectralData::compute(three_level_p());
  const NsfdReport report = nsfd_report(0.0, 0.05, 0.0, spec);
  CHECK(report.alpha[0] == Complex(1.0, 0.0));
  CHECK(report.alpha[1] == Complex(0.0, 0.0));
  CHECK(report.alpha[2] == Complex(0.0, 0.0));
  CHECK(report.phi_over_dt == Complex(1.0, 0.0));
  CHECK(report.q_poly_coeffs[1] == Complex(1.0, 0.0));
  CHECK(report.canonical_xi == Complex(0.5, 0.0));
}

TEST_CASE("nsfd renormalization defect vanishes at least linearly in dt") {
  const SpectralData spec = SpectralData::compute(three_level_p());
  double previous = 0.0;
  for (double dt : {0.1, 0.05, 0.025}) {
    const NsfdReport report = nsfd_report(dt, dt, 1.0, spec);
    const double defect = std::abs(report.phi_over_dt - Complex(1.0, 0.0));
    CHECK(defect > 0.0);
    if (previous != 0.0) CHECK(previous / defect >= 1.8);
    previous = defect;
  }
}

TEST_CASE("nsfd power coefficients rebuild the interpolation polynomial") {
  const SpectralData spec = SpectralData::compute(three_level_p());
  const double dt = 0.05;
  const double e_field = 0.8;
  const NsfdReport report = nsfd_report(dt * e_field, dt, e_field, spec);

  const ComplexMatrix& p = spec.matrix();
  ComplexMatrix from_power(3);
  ComplexMatrix power = ComplexMatrix::identity(3);
  for (int j = 0; j < 3; ++j) {
    add_scaled(from_power, report.alpha[j], power);
    power = power * p;
  }
  CHECK(max_abs_diff(from_power, newton_polynomial(dt * e_field, spec)) < 1e-13);

  // alpha0 I + i E alpha1_tilde Q(p) is the same polynomial.
  ComplexMatrix q(3);
  power = ComplexMatrix::identity(3);
  for (int j = 0; j < 3; ++j) {
    add_scaled(q, report.q_poly_coeffs[j], power);
    power = power * p;
  }
  ComplexMatrix recombined = ComplexMatrix::identity(3);
  recombined *= report.alpha0;
  add_scaled(recombined, Complex(0.0, e_field) * report.alpha1_tilde, q);
  CHECK(max_abs_diff(recombined, from_power) < 1e-13);
}

TEST_CASE("nsfd report rejects inconsistent arguments and vanishing coefficients") {
  const SpectralData spec = SpectralData::compute(three_level_p());
  CHECK_THROWS_AS(nsfd_report(0.3, 0.05, 1.0, spec), InvalidArgumentError);

  // Symmetric two-level spectrum: alpha_0 = cos(gamma) vanishes at pi/2.
  const SpectralData two = SpectralData::compute(pauli_x());
  CHECK_THROWS_AS(nsfd_report(kPi / 2.0, kPi / 2.0, 1.0, two), VanishingCoefficientError);
}
