#include "simplexgeo/stats.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "simplexgeo/linalg.hpp"

namespace simplexgeo {

void Dataset::validate() const {
  if (rows.empty()) throw Error(ErrorCode::InvalidArgument, "dataset is empty");
  for (const Composition& row : rows) detail::require_same_size(rows.front().size(), row.size(), "dataset row");
  if (!labels.empty() && labels.size() != rows.size()) {
    throw Error(ErrorCode::InvalidArgument, "dataset labels do not match row count");
  }
}

Composition frechet_mean(const GeometryContext& ctx, const Dataset& data) {
  data.validate();
  detail::require_same_size(ctx.dim(), data.dim(), "frechet_mean");
  Vector acc = Vector::Zero(ctx.dim());
  for (const Composition& row : data.rows) acc += log_map(ctx, row).values();
  acc /= static_cast<double>(data.size());
  return exp_map(ctx, TangentVector(std::move(acc)));
}

Matrix coords_matrix(const GeometryContext& ctx, const TangentBasis& basis, const Dataset& data) {
  data.validate();
  Matrix out(data.size(), basis.size());
  for (Index j = 0; j < data.size(); ++j) {
    out.row(j) = coords(ctx, basis, data.rows[static_cast<size_t>(j)]).transpose();
  }
  return out;
}

Matrix sample_covariance(const GeometryContext& ctx, const TangentBasis& basis, const Dataset& data) {
  if (data.size() < 2) throw Error(ErrorCode::InvalidArgument, "sample covariance needs at least 2 rows");
  const Matrix z = coords_matrix(ctx, basis, data);
  const Matrix centered = z.rowwise() - z.colwise().mean();
  Matrix cov = centered.transpose() * centered / static_cast<double>(data.size() - 1);
  return 0.5 * (cov + cov.transpose());
}

PrincipalComponents pca(const GeometryContext& ctx, const TangentBasis& basis, const Dataset& data, Index k) {
  const Index n = basis.size();
  if (k < 1 || k > n) {
    throw Error(ErrorCode::InvalidArgument, "number of components must lie in [1, " + std::to_string(n) + "]");
  }
  const Matrix cov = sample_covariance(ctx, basis, data);
  const SymmetricEigen eig = jacobi_eigen(cov);

  const Matrix z = coords_matrix(ctx, basis, data);
  const Vector center = z.colwise().mean().transpose();

  PrincipalComponents pc{frechet_mean(ctx, data), {}, eig.values.head(k),
                         (z.rowwise() - center.transpose()) * eig.vectors.leftCols(k),
                         eig.vectors.leftCols(k), cov.trace()};
  pc.directions.reserve(static_cast<size_t>(k));
  for (Index l = 0; l < k; ++l) pc.directions.push_back(combine(basis, eig.vectors.col(l)));
  return pc;
}

Composition pc_project(const GeometryContext& ctx, const PrincipalComponents& pc, const Composition& lambda, Index k) {
  if (k < 0 || k > static_cast<Index>(pc.directions.size())) {
    throw Error(ErrorCode::IndexOutOfRange, "projection rank " + std::to_string(k));
  }
  // unit directions can have parts below double range in skewed geometries, so
  // the projection is summed in the tangent space and mapped once
  const Vector centered = log_map(ctx, difference(ctx, lambda, pc.mean)).values();
  Vector step = Vector::Zero(ctx.dim());
  for (Index l = 0; l < k; ++l) {
    const Vector& dir = pc.directions[static_cast<size_t>(l)].values();
    step += centered.dot(dir) * dir;
  }
  return perturb(ctx, pc.mean, exp_map(ctx, TangentVector(std::move(step))));
}

double residual_sum(const GeometryContext& ctx, const PrincipalComponents& pc, const Dataset& data, Index k) {
  double total = 0.0;
  for (const Composition& row : data.rows) {
    const double d = distance(ctx, row, pc_project(ctx, pc, row, k));
    total += d * d;
  }
  return total;
}

std::vector<Composition> pc_line(const GeometryContext& ctx, const PrincipalComponents& pc, Index component,
                                 std::span<const double> ts) {
  if (component < 0 || component >= static_cast<Index>(pc.directions.size())) {
    throw Error(ErrorCode::IndexOutOfRange, "principal component " + std::to_string(component));
  }
  const Vector& dir = pc.directions[static_cast<size_t>(component)].values();
  std::vector<Composition> out;
  out.reserve(ts.size());
  for (double t : ts) out.push_back(perturb(ctx, pc.mean, exp_map(ctx, TangentVector(t * dir))));
  return out;
}

SimplexGaussian::SimplexGaussian(GeometryContext ctx, TangentBasis basis, Coordinates mean_coords, Matrix covariance)
    : ctx_(std::move(ctx)), basis_(std::move(basis)), mean_(std::move(mean_coords)), cov_(std::move(covariance)) {
  detail::require_same_size(ctx_.dim(), basis_.dim(), "gaussian basis");
  detail::require_same_size(basis_.size(), mean_.size(), "gaussian mean");
  if (cov_.rows() != basis_.size() || cov_.cols() != basis_.size()) {
    throw Error(ErrorCode::DimensionMismatch, "gaussian covariance must be N x N");
  }
  if (!mean_.allFinite() || !cov_.allFinite()) throw Error(ErrorCode::NonFiniteValue, "gaussian parameters not finite");
  if ((cov_ - cov_.transpose()).lpNorm<Eigen::Infinity>() > 1e-12) {
    throw Error(ErrorCode::InvalidArgument, "gaussian covariance is not symmetric");
  }
  chol_ = cholesky(cov_);
}

SimplexGaussian gaussian_new(const GeometryContext& ctx, const TangentBasis& basis, const Coordinates& mean_coords,
                             const Matrix& covariance) {
  return SimplexGaussian(ctx, basis, mean_coords, covariance);
}

Composition gaussian_mean(const SimplexGaussian& g) { return from_coords(g.context(), g.basis(), g.mean_coords()); }

Dataset gaussian_sample(const SimplexGaussian& g, RandomSource& rng, Index n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "sample size must be >= 1");
  Dataset out;
  out.rows.reserve(static_cast<size_t>(n));
  for (Index i = 0; i < n; ++i) {
    const Coordinates z = g.mean_coords() + g.chol() * rng.normal_vector(g.basis().size());
    out.rows.push_back(from_coords(g.context(), g.basis(), z));
  }
  return out;
}

double gaussian_log_density(const SimplexGaussian& g, const Composition& lambda) {
  const Coordinates diff = coords(g.context(), g.basis(), lambda) - g.mean_coords();
  const Vector y = g.chol().triangularView<Eigen::Lower>().solve(diff);
  const double log_det = 2.0 * g.chol().diagonal().array().log().sum();
  const double n = static_cast<double>(g.basis().size());
  return -0.5 * (n * std::log(2.0 * std::numbers::pi) + log_det + y.squaredNorm());
}

double gaussian_density(const SimplexGaussian& g, const Composition& lambda) {
  return std::exp(gaussian_log_density(g, lambda));
}

}  // namespace simplexgeo
