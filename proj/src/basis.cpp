#include "simplexgeo/basis.hpp"

#include <cmath>
#include <string>

namespace simplexgeo {

namespace {
constexpr double kOrthoTol = 1e-12;
}

TangentBasis::TangentBasis(Matrix vectors) : vectors_(std::move(vectors)) {
  if (vectors_.cols() < 2 || vectors_.rows() != vectors_.cols() - 1) {
    throw Error(ErrorCode::InvalidDimension, "a tangent basis of R^n needs n-1 vectors of length n");
  }
  const Matrix gram = vectors_ * vectors_.transpose();
  const Index n = gram.rows();
  if ((gram - Matrix::Identity(n, n)).lpNorm<Eigen::Infinity>() > kOrthoTol) {
    throw Error(ErrorCode::InvalidArgument, "tangent basis is not orthonormal");
  }
  if (vectors_.rowwise().sum().lpNorm<Eigen::Infinity>() > kOrthoTol) {
    throw Error(ErrorCode::NotTangent, "tangent basis vectors must sum to zero");
  }
}

TangentVector TangentBasis::vector(Index k) const {
  if (k < 0 || k >= size()) throw Error(ErrorCode::IndexOutOfRange, "basis index " + std::to_string(k));
  return TangentVector(vectors_.row(k).transpose());
}

TangentBasis helmert_basis(Index dim) {
  if (dim < 2) throw Error(ErrorCode::InvalidDimension, "helmert basis needs dim >= 2");
  Matrix h = Matrix::Zero(dim - 1, dim);
  for (Index k = 1; k < dim; ++k) {
    const double scale = 1.0 / std::sqrt(static_cast<double>(k) * static_cast<double>(k + 1));
    h.row(k - 1).head(k).setConstant(scale);
    h(k - 1, k) = -static_cast<double>(k) * scale;
  }
  return TangentBasis(std::move(h));
}

Coordinates coords(const GeometryContext& ctx, const TangentBasis& basis, const Composition& lambda) {
  detail::require_same_size(ctx.dim(), basis.dim(), "coords");
  return basis.matrix() * log_map(ctx, lambda).values();
}

TangentVector combine(const TangentBasis& basis, const Coordinates& z) {
  detail::require_same_size(basis.size(), z.size(), "combine");
  return TangentVector(basis.matrix().transpose() * z);
}

Composition from_coords(const GeometryContext& ctx, const TangentBasis& basis, const Coordinates& z) {
  detail::require_same_size(ctx.dim(), basis.dim(), "from_coords");
  return exp_map(ctx, combine(basis, z));
}

}  // namespace simplexgeo
