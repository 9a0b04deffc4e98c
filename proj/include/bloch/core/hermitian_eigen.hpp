#pragma once

#include <vector>

#include "bloch/core/complex_matrix.hpp"

namespace bloch {

struct EigenDecomposition {
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix eigenvectors;       // unitary, k-th column pairs with eigenvalues[k]
};

/// Cyclic Jacobi rotations on a Hermitian matrix. Deterministic sweep order,
/// eigenvalues sorted ascending, eigenvector columns phase-normalized so the
/// first component above threshold is real positive (ties broken
/// lexicographically). Throws NotHermitianError when the input symmetry check
/// fails and NoConvergenceError if the sweep budget is exhausted.
EigenDecomposition eigendecompose_hermitian(const ComplexMatrix& m);

}  // namespace bloch
