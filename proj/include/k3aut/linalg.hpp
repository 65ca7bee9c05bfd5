#pragma once

#include "k3aut/numeric.hpp"

namespace k3aut {

// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... , all
// diagonal entries non-negative.
struct SmithDecomposition {
  IntMatrix d;
  IntMatrix u;
  IntMatrix v;
};

SmithDecomposition smith_normal_form(const IntMatrix& a);

// Counts of positive, negative and zero eigenvalues of a symmetric matrix,
// computed exactly by rational congruence diagonalization.
struct Inertia {
  int positive = 0;
  int negative = 0;
  int zero = 0;
};

Inertia symmetric_inertia(const RatMatrix& symmetric);

// Exact determinant by fraction-free (Bareiss) elimination.
Int integer_determinant(const IntMatrix& a);
Rat rational_determinant(const RatMatrix& a);

// General solution of A x = b over Q.
struct LinearSolution {
  bool consistent = false;
  int rank = 0;
  RatVector particular;  // one solution when consistent
  RatMatrix nullspace;   // columns form a basis of ker(A)
};

LinearSolution solve_linear_system(const RatMatrix& a, const RatVector& b);

IntMatrix integer_identity(Eigen::Index n);

// A^-1 over Q; throws std::domain_error when singular.
RatMatrix rational_inverse(const RatMatrix& a);

}  // namespace k3aut
