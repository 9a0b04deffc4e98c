#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "bloch/errors.hpp"

namespace bloch {

using Complex = std::complex<double>;

/// Dense square complex matrix at desk scale. Row-major storage, N >= 2.
/// Matrices up to kInlineDim live in inline storage so the per-step
/// temporaries of the propagators never touch the allocator.
class ComplexMatrix {
 public:
  static constexpr int kInlineDim = 12;

  explicit ComplexMatrix(int dim);

  static ComplexMatrix identity(int dim);
  static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);
  // Validates squareness and finiteness of externally supplied entries.
  static ComplexMatrix from_data(int dim, std::vector<Complex> entries);

  ComplexMatrix(const ComplexMatrix& other);
  ComplexMatrix& operator=(const ComplexMatrix& other);
  ComplexMatrix(ComplexMatrix&& other) noexcept;
  ComplexMatrix& operator=(ComplexMatrix&& other) noexcept;
  ~ComplexMatrix() = default;

  int dim() const { return dim_; }
  std::size_t size() const { return static_cast<std::size_t>(dim_) * dim_; }

  Complex* data() {
    return dim_ <= kInlineDim ? reinterpret_cast<Complex*>(inline_.data()) : heap_.data();
  }
  const Complex* data() const {
    return dim_ <= kInlineDim ? reinterpret_cast<const Complex*>(inline_.data()) : heap_.data();
  }

  Complex& operator()(int i, int j) { return data()[static_cast<std::size_t>(i) * dim_ + j]; }
  const Complex& operator()(int i, int j) const {
    return data()[static_cast<std::size_t>(i) * dim_ + j];
  }

  ComplexMatrix adjoint() const;
  Complex trace() const;

  /// Largest entry modulus.
  double max_abs() const;
  /// Largest column absolute sum.
  double one_norm() const;
  /// Largest modulus of a_ij - conj(a_ji).
  double hermiticity_defect() const;
  bool is_finite() const;

  std::vector<Complex> to_vector() const { return {data(), data() + size()}; }

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(Complex s);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix m) { return m *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

 private:
  // Raw doubles so constructing a matrix does not zero the unused tail of the
  // inline buffer; std::complex<double> is layout-compatible with double[2].
  int dim_;
  std::array<double, 2 * static_cast<std::size_t>(kInlineDim) * kInlineDim> inline_;
  std::vector<Complex> heap_;
};

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// acc += s * m, without temporaries.
void add_scaled(ComplexMatrix& acc, Complex s, const ComplexMatrix& m);

/// out = a * b; out must not alias a or b.
void multiply_into(ComplexMatrix& out, const ComplexMatrix& a, const ComplexMatrix& b);

/// adj(m) * rho * m.
ComplexMatrix conjugate_by(const ComplexMatrix& m, const ComplexMatrix& rho);

void swap(ComplexMatrix& a, ComplexMatrix& b) noexcept;

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* context);

}  // namespace bloch
