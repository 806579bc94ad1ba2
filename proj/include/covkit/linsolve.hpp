#pragma once

#include <cstddef>
#include <vector>

#include "covkit/matlin.hpp"

namespace covkit {

struct FeasibilityResult {
  bool feasible = false;
  std::vector<double> witness;       // empty when infeasible
  double residual = 0.0;             // max |M a - b| of the witness (or best least-squares attempt)
  std::size_t solution_dimension = 0;  // dim of the affine solution set of M a = b (ignoring a >= 0)
};

// Finds real a >= 0 with M a = b. Complex rows are split into real and
// imaginary parts. Small problems only: every column subset is tried, smallest
// first, so the witness is a vertex of the feasible polytope when one exists.
FeasibilityResult nonnegative_solve(const ComplexMatrix& m, const ComplexMatrix& b, Tolerance tol = {});

}  // namespace covkit
