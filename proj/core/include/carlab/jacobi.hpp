#pragma once

#include <vector>

namespace carlab {

using Matrix = std::vector<std::vector<double>>;

// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, sweeping
// until the off-diagonal Frobenius norm falls below `tol` (or 100 sweeps).
// Returned in descending order.
std::vector<double> symmetric_eigenvalues(Matrix a, double tol = 1e-10);

double max_eigenvalue(const Matrix& a, double tol = 1e-10);

}  // namespace carlab
