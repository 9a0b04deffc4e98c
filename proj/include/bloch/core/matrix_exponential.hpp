#pragma once

#include "bloch/core/complex_matrix.hpp"

namespace bloch {

/// exp(m) by scaling-and-squaring with a truncated Taylor series. The
/// truncation order is chosen from the a-priori remainder bound of the scaled
/// matrix so the series residual stays below tol. Independent of any
/// eigendecomposition, which makes it usable as a cross-check for the
/// spectral routes.
ComplexMatrix series_exponential(const ComplexMatrix& m, double tol = 1e-14);

}  // namespace bloch
