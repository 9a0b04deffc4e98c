#include "bloch/core/matrix_exponential.hpp"

#include <cmath>

namespace bloch {

namespace {

// Smallest Taylor order whose remainder bound at argument norm theta <= 1 is
// below tol: sum_{k>K} theta^k/k! <= theta^{K+1}/(K+1)! * 1/(1 - theta/(K+2)).
int taylor_order(double theta, double tol) {
  int k = 1;
  double term = theta;  // theta^k / k!
  while (k < 64) {
    const double tail = term * theta / (k + 1) / (1.0 - theta / (k + 2));
    if (tail <= tol) return k;
    ++k;
    term *= theta / k;
  }
  return 64;
}

}  // namespace

ComplexMatrix series_exponential(const ComplexMatrix& m, double tol) {
  if (!m.is_finite()) {
    throw InvalidArgumentError("series exponential: entries must be finite");
  }
  const int n = m.dim();
  const double norm = m.one_norm();

  int squarings = 0;
  if (norm > 1.0) {
    squarings = static_cast<int>(std::ceil(std::log2(norm)));
  }
  const double scale = std::ldexp(1.0, -squarings);

  ComplexMatrix a = m;
  a *= scale;
  const double theta = norm * scale;
  const int order = theta > 0.0 ? taylor_order(theta, tol) : 0;

  ComplexMatrix result = ComplexMatrix::identity(n);
  ComplexMatrix term = ComplexMatrix::identity(n);
  ComplexMatrix scratch(n);
  for (int k = 1; k <= order; ++k) {
    multiply_into(scratch, term, a);
    swap(term, scratch);
    term *= Complex(1.0 / k, 0.0);
    result += term;
  }
  for (int s = 0; s < squarings; ++s) {
    multiply_into(scratch, result, result);
    swap(result, scratch);
  }
  return result;
}

}  // namespace bloch
