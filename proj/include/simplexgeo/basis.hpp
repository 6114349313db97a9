#pragma once

// Orthonormal bases of the zero-sum hyperplane and the coordinate chart they
// induce on the simplex. The tangent space and its Euclidean product do not
// depend on a, so a single basis serves every geometry.

#include <vector>

#include "simplexgeo/geometry.hpp"

namespace simplexgeo {

class TangentBasis {
 public:
  /// Rows of `vectors` are the basis elements; checked for orthonormality
  /// and zero sums to 1e-12.
  explicit TangentBasis(Matrix vectors);

  Index dim() const noexcept { return vectors_.cols(); }
  Index size() const noexcept { return vectors_.rows(); }
  TangentVector vector(Index k) const;
  const Matrix& matrix() const noexcept { return vectors_; }

 private:
  Matrix vectors_;
};

/// eta_k = (1,...,1,-k,0,...,0) / sqrt(k(k+1)), k = 1..dim-1, k leading ones.
TangentBasis helmert_basis(Index dim);

using Coordinates = Vector;

Coordinates coords(const GeometryContext& ctx, const TangentBasis& basis, const Composition& lambda);
Composition from_coords(const GeometryContext& ctx, const TangentBasis& basis, const Coordinates& z);

/// Tangent vector sum_k z_k eta_k.
TangentVector combine(const TangentBasis& basis, const Coordinates& z);

}  // namespace simplexgeo
