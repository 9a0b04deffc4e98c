#pragma once

#include <vector>

#include "bloch/core/complex_matrix.hpp"

namespace bloch {

/// LU factorization with partial pivoting of a dense complex n x n system.
/// Intended for the tiny dimensions this library works at.
class LuSolver {
 public:
  LuSolver(std::vector<Complex> a, int n);

  /// Solves in place; rhs.size() must be n.
  void solve(std::vector<Complex>& rhs) const;

  int size() const { return n_; }

 private:
  int n_;
  std::vector<Complex> lu_;
  std::vector<int> perm_;
};

/// X with a * X = b. Throws SingularResolventError on a vanishing pivot.
ComplexMatrix solve_linear(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace bloch
