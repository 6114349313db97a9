#pragma once

// Small dense symmetric routines used by the statistics module.

#include "simplexgeo/ambient.hpp"

namespace simplexgeo {

struct SymmetricEigen {
  Vector values;   // descending
  Matrix vectors;  // column k pairs with values[k]; first nonzero entry positive
};

/// Cyclic Jacobi rotations. Stops once the off-diagonal Frobenius norm drops
/// below tol * max(1, ||A||_F); throws NonConvergence after max_sweeps.
SymmetricEigen jacobi_eigen(const Matrix& a, double tol = 1e-12, int max_sweeps = 100);

/// Lower-triangular L with L L^T = a. Throws NotPositiveDefinite when a pivot
/// is not clearly positive.
Matrix cholesky(const Matrix& a);

}  // namespace simplexgeo
