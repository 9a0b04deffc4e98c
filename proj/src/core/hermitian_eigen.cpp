#include "bloch/core/hermitian_eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace bloch {

namespace {

constexpr int kMaxSweeps = 100;

double max_offdiagonal(const ComplexMatrix& a) {
  double worst = 0.0;
  for (int i = 0; i < a.dim(); ++i) {
    for (int j = 0; j < a.dim(); ++j) {
      if (i != j) worst = std::max(worst, std::abs(a(i, j)));
    }
  }
  return worst;
}

// One Jacobi rotation zeroing a(p,q); accumulates the rotation into v.
void rotate(ComplexMatrix& a, ComplexMatrix& v, int p, int q) {
  const Complex apq = a(p, q);
  const double g = std::abs(apq);
  if (g == 0.0) return;
  const Complex phase = apq / g;

  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double tau = (aqq - app) / (2.0 * g);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  const int n = a.dim();
  // Column update: A <- A * R with R acting on columns p, q.
  for (int k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = c * akp - s * std::conj(phase) * akq;
    a(k, q) = s * phase * akp + c * akq;
  }
  // Row update: A <- R^H * A.
  for (int k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = c * apk - s * phase * aqk;
    a(q, k) = s * std::conj(phase) * apk + c * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = Complex(a(p, p).real(), 0.0);
  a(q, q) = Complex(a(q, q).real(), 0.0);

  for (int k = 0; k < n; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = c * vkp - s * std::conj(phase) * vkq;
    v(k, q) = s * phase * vkp + c * vkq;
  }
}

void normalize_column_phase(ComplexMatrix& v, int col, double threshold) {
  const int n = v.dim();
  for (int i = 0; i < n; ++i) {
    const double mag = std::abs(v(i, col));
    if (mag > threshold) {
      const Complex factor = std::conj(v(i, col)) / mag;
      for (int k = 0; k < n; ++k) v(k, col) *= factor;
      return;
    }
  }
}

bool column_less(const ComplexMatrix& v, int a, int b) {
  for (int i = 0; i < v.dim(); ++i) {
    const Complex za = v(i, a);
    const Complex zb = v(i, b);
    if (za.real() != zb.real()) return za.real() < zb.real();
    if (za.imag() != zb.imag()) return za.imag() < zb.imag();
  }
  return false;
}

}  // namespace

EigenDecomposition eigendecompose_hermitian(const ComplexMatrix& m) {
  const double scale = m.max_abs();
  if (m.hermiticity_defect() > 1e-10 * std::max(scale, 1e-300)) {
    throw NotHermitianError("eigendecomposition: input is not Hermitian within tolerance");
  }

  const int n = m.dim();
  ComplexMatrix a = m;
  // Work on the exactly Hermitian part so roundoff in the input cannot leak
  // into the rotations.
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      a(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
    }
    a(i, i) = Complex(a(i, i).real(), 0.0);
  }
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double stop = 1e-15 * std::max(scale, 1e-300);
  int sweep = 0;
  while (max_offdiagonal(a) > stop) {
    if (++sweep > kMaxSweeps) {
      throw NoConvergenceError("eigendecomposition: Jacobi sweep budget exhausted");
    }
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        if (std::abs(a(p, q)) > stop * 1e-2) rotate(a, v, p, q);
      }
    }
  }

  const double phase_threshold = 1e-12;
  for (int col = 0; col < n; ++col) normalize_column_phase(v, col, phase_threshold);

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    const double lx = a(x, x).real();
    const double ly = a(y, y).real();
    if (lx != ly) return lx < ly;
    return column_less(v, x, y);
  });

  EigenDecomposition out{std::vector<double>(n), ComplexMatrix(n)};
  for (int k = 0; k < n; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]).real();
    for (int i = 0; i < n; ++i) out.eigenvectors(i, k) = v(i, order[k]);
  }
  return out;
}

}  // namespace bloch
