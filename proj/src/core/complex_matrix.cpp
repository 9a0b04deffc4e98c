#include "bloch/core/complex_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace bloch {

namespace {

void require_valid_dim(int dim) {
  if (dim < 2) {
    throw InvalidArgumentError("matrix dimension must be at least 2, got " +
                               std::to_string(dim));
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(int dim) : dim_(dim) {
  require_valid_dim(dim);
  if (dim_ <= kInlineDim) {
    std::fill_n(data(), size(), Complex(0.0, 0.0));
  } else {
    heap_.assign(size(), Complex(0.0, 0.0));
  }
}

ComplexMatrix::ComplexMatrix(const ComplexMatrix& other) : dim_(other.dim_) {
  if (dim_ <= kInlineDim) {
    std::copy_n(other.data(), size(), data());
  } else {
    heap_ = other.heap_;
  }
}

ComplexMatrix& ComplexMatrix::operator=(const ComplexMatrix& other) {
  if (this == &other) return *this;
  dim_ = other.dim_;
  if (dim_ <= kInlineDim) {
    std::copy_n(other.data(), size(), data());
    heap_.clear();
  } else {
    heap_ = other.heap_;
  }
  return *this;
}

ComplexMatrix::ComplexMatrix(ComplexMatrix&& other) noexcept : dim_(other.dim_) {
  if (dim_ <= kInlineDim) {
    std::copy_n(other.data(), size(), data());
  } else {
    heap_ = std::move(other.heap_);
  }
}

ComplexMatrix& ComplexMatrix::operator=(ComplexMatrix&& other) noexcept {
  if (this == &other) return *this;
  dim_ = other.dim_;
  if (dim_ <= kInlineDim) {
    std::copy_n(other.data(), size(), data());
    heap_.clear();
  } else {
    heap_ = std::move(other.heap_);
  }
  return *this;
}

ComplexMatrix ComplexMatrix::identity(int dim) {
  ComplexMatrix m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::from_rows(
    std::initializer_list<std::initializer_list<Complex>> rows) {
  const int n = static_cast<int>(rows.size());
  require_valid_dim(n);
  std::vector<Complex> entries;
  entries.reserve(static_cast<std::size_t>(n) * n);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n) {
      throw InvalidArgumentError("matrix rows must all have length equal to the dimension");
    }
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return from_data(n, std::move(entries));
}

ComplexMatrix ComplexMatrix::from_data(int dim, std::vector<Complex> entries) {
  require_valid_dim(dim);
  if (entries.size() != static_cast<std::size_t>(dim) * dim) {
    throw InvalidArgumentError("matrix entry count does not match dimension");
  }
  ComplexMatrix m(dim);
  std::copy(entries.begin(), entries.end(), m.data());
  if (!m.is_finite()) {
    throw InvalidArgumentError("matrix entries must be finite");
  }
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_);
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) {
      out(j, i) = std::conj((*this)(i, j));
    }
  }
  return out;
}

Complex ComplexMatrix::trace() const {
  Complex t(0.0, 0.0);
  for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  const Complex* a = data();
  for (std::size_t k = 0; k < size(); ++k) m = std::max(m, std::abs(a[k]));
  return m;
}

double ComplexMatrix::one_norm() const {
  double best = 0.0;
  for (int j = 0; j < dim_; ++j) {
    double col = 0.0;
    for (int i = 0; i < dim_; ++i) col += std::abs((*this)(i, j));
    best = std::max(best, col);
  }
  return best;
}

double ComplexMatrix::hermiticity_defect() const {
  double worst = 0.0;
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) {
      worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    }
  }
  return worst;
}

bool ComplexMatrix::is_finite() const {
  const Complex* a = data();
  for (std::size_t k = 0; k < size(); ++k) {
    if (!std::isfinite(a[k].real()) || !std::isfinite(a[k].imag())) return false;
  }
  return true;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  require_same_dim(*this, rhs, "matrix addition");
  Complex* a = data();
  const Complex* b = rhs.data();
  for (std::size_t k = 0; k < size(); ++k) a[k] += b[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  require_same_dim(*this, rhs, "matrix subtraction");
  Complex* a = data();
  const Complex* b = rhs.data();
  for (std::size_t k = 0; k < size(); ++k) a[k] -= b[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
  Complex* a = data();
  for (std::size_t k = 0; k < size(); ++k) a[k] *= s;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.dim());
  multiply_into(out, a, b);
  return out;
}

void multiply_into(ComplexMatrix& out, const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "matrix multiplication");
  require_same_dim(out, a, "matrix multiplication output");
  const int n = a.dim();
  Complex* o = out.data();
  const Complex* ad = a.data();
  const Complex* bd = b.data();
  for (int i = 0; i < n; ++i) {
    Complex* orow = o + static_cast<std::size_t>(i) * n;
    std::fill_n(orow, n, Complex(0.0, 0.0));
    for (int k = 0; k < n; ++k) {
      const Complex aik = ad[static_cast<std::size_t>(i) * n + k];
      const Complex* brow = bd + static_cast<std::size_t>(k) * n;
      for (int j = 0; j < n; ++j) {
        orow[j] += aik * brow[j];
      }
    }
  }
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "matrix comparison");
  double worst = 0.0;
  const Complex* ad = a.data();
  const Complex* bd = b.data();
  for (std::size_t k = 0; k < a.size(); ++k) {
    worst = std::max(worst, std::abs(ad[k] - bd[k]));
  }
  return worst;
}

void add_scaled(ComplexMatrix& acc, Complex s, const ComplexMatrix& m) {
  require_same_dim(acc, m, "scaled accumulation");
  Complex* a = acc.data();
  const Complex* b = m.data();
  for (std::size_t k = 0; k < acc.size(); ++k) a[k] += s * b[k];
}

ComplexMatrix conjugate_by(const ComplexMatrix& m, const ComplexMatrix& rho) {
  require_same_dim(m, rho, "conjugation");
  const int n = m.dim();
  const ComplexMatrix t = rho * m;
  ComplexMatrix out(n);
  Complex* o = out.data();
  const Complex* td = t.data();
  for (int i = 0; i < n; ++i) {
    Complex* orow = o + static_cast<std::size_t>(i) * n;
    for (int k = 0; k < n; ++k) {
      const Complex mki = std::conj(m(k, i));
      const Complex* trow = td + static_cast<std::size_t>(k) * n;
      for (int j = 0; j < n; ++j) {
        orow[j] += mki * trow[j];
      }
    }
  }
  return out;
}

void swap(ComplexMatrix& a, ComplexMatrix& b) noexcept {
  ComplexMatrix tmp(std::move(a));
  a = std::move(b);
  b = std::move(tmp);
}

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* context) {
  if (a.dim() != b.dim()) {
    throw InvalidArgumentError(std::string(context) + ": dimension mismatch (" +
                               std::to_string(a.dim()) + " vs " + std::to_string(b.dim()) + ")");
  }
}

}  // namespace bloch
