#pragma once

// Descriptive statistics and the normal law on the simplex. Everything is
// computed in tangent coordinates, where log_map is a linear isometry, and
// mapped back with exp_map.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "simplexgeo/basis.hpp"
#include "simplexgeo/random.hpp"

namespace simplexgeo {

struct Dataset {
  std::vector<Composition> rows;
  std::vector<std::string> labels;  // empty, or one per row

  Index dim() const { return rows.empty() ? 0 : rows.front().size(); }
  Index size() const { return static_cast<Index>(rows.size()); }

  /// m >= 1, uniform dimension, labels empty or matching.
  void validate() const;
};

/// Exp of the average of Log images; the unique minimizer of sum_j d(., lambda_j)^2.
Composition frechet_mean(const GeometryContext& ctx, const Dataset& data);

/// m x N matrix of basis coordinates, one row per composition.
Matrix coords_matrix(const GeometryContext& ctx, const TangentBasis& basis, const Dataset& data);

/// Unbiased (1/(m-1)) covariance of the basis coordinates. Needs m >= 2.
Matrix sample_covariance(const GeometryContext& ctx, const TangentBasis& basis, const Dataset& data);

struct PrincipalComponents {
  Composition mean;
  std::vector<TangentVector> directions;  // unit tangent vectors
  Vector variances;                       // descending
  Matrix scores;                          // m x k
  Matrix coord_directions;                // N x k, same directions in basis coordinates
  double total_variance = 0.0;            // trace of the covariance
};

PrincipalComponents pca(const GeometryContext& ctx, const TangentBasis& basis, const Dataset& data, Index k);

/// Nearest point to lambda on the affine span of the first `k` components,
/// built with the simplex operations:
/// mean (+) sum_l <lambda (-) mean, mu_l>_a (.) mu_l, mu_l = Exp(direction_l).
Composition pc_project(const GeometryContext& ctx, const PrincipalComponents& pc, const Composition& lambda, Index k);

/// sum_j d_a(lambda_j, pc_project(lambda_j, k))^2
double residual_sum(const GeometryContext& ctx, const PrincipalComponents& pc, const Dataset& data, Index k);

/// Points mean (+) t (.) Exp(direction_component) for each t.
std::vector<Composition> pc_line(const GeometryContext& ctx, const PrincipalComponents& pc, Index component,
                                 std::span<const double> ts);

class SimplexGaussian {
 public:
  SimplexGaussian(GeometryContext ctx, TangentBasis basis, Coordinates mean_coords, Matrix covariance);

  const GeometryContext& context() const noexcept { return ctx_; }
  const TangentBasis& basis() const noexcept { return basis_; }
  const Coordinates& mean_coords() const noexcept { return mean_; }
  const Matrix& covariance() const noexcept { return cov_; }
  const Matrix& chol() const noexcept { return chol_; }

 private:
  GeometryContext ctx_;
  TangentBasis basis_;
  Coordinates mean_;
  Matrix cov_;
  Matrix chol_;
};

/// Throws NotPositiveDefinite for singular or indefinite covariance.
SimplexGaussian gaussian_new(const GeometryContext& ctx, const TangentBasis& basis, const Coordinates& mean_coords,
                             const Matrix& covariance);

/// E_a[X] = from_coords(mu_B)
Composition gaussian_mean(const SimplexGaussian& g);

Dataset gaussian_sample(const SimplexGaussian& g, RandomSource& rng, Index n);

/// Density relative to the pull-back of Lebesgue measure through the
/// coordinate chart, i.e. the N(mu_B, Sigma_B) density at coords(lambda).
double gaussian_density(const SimplexGaussian& g, const Composition& lambda);
double gaussian_log_density(const SimplexGaussian& g, const Composition& lambda);

}  // namespace simplexgeo
