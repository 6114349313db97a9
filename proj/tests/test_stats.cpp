#include <doctest.h>

#include <cmath>
#include <functional>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "oracles.hpp"
#include "simplexgeo/stats.hpp"

using namespace simplexgeo;
using oracle::max_abs_diff;

namespace {

Vector vec(std::initializer_list<double> v) { return detail::to_vector(v); }

Dataset random_dataset(oracle::Gen& gen, Index dim, Index m, double spread = 2.0) {
  Dataset d;
  for (Index j = 0; j < m; ++j) d.rows.push_back(gen.composition(dim, spread));
  return d;
}

// Euclidean PCA residual on an m x N coordinate matrix, via a reference
// eigensolver: sum of squared distances to the best k-dimensional affine fit.
double euclidean_residual(const Matrix& z, Index k) {
  const Matrix centered = z.rowwise() - z.colwise().mean();
  const Matrix scatter = centered.transpose() * centered;
  const Eigen::SelfAdjointEigenSolver<Matrix> eig(scatter);
  const Matrix top = eig.eigenvectors().rightCols(k);
  return (centered - centered * top * top.transpose()).squaredNorm();
}

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double eps, double whole,
                        double fa, double fm, double fb, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * eps) return left + right + (left + right - whole) / 15.0;
  return adaptive_simpson(f, a, m, eps / 2.0, left, fa, flm, fm, depth - 1) +
         adaptive_simpson(f, m, b, eps / 2.0, right, fm, frm, fb, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b, double eps) {
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(0.5 * (a + b));
  return adaptive_simpson(f, a, b, eps, (b - a) / 6.0 * (fa + 4.0 * fm + fb), fa, fm, fb, 50);
}

}  // namespace

TEST_CASE("frechet_mean examples") {
  const GeometryContext uniform(FreeVector{1, 1, 1});
  const Composition lambda{0.2, 0.3, 0.5};
  CHECK(max_abs_diff(frechet_mean(uniform, Dataset{{lambda}, {}}).values(), lambda.values()) < 1e-15);
  CHECK(max_abs_diff(frechet_mean(uniform, Dataset{{lambda, invert(uniform, lambda)}, {}}).values(),
                     uniform.neutral().values()) < 1e-15);
  CHECK(max_abs_diff(frechet_mean(uniform, Dataset{{lambda, Composition{0.5, 0.3, 0.2}}, {}}).values(),
                     vec({0.33913441998370523, 0.32173116003258955, 0.33913441998370523})) < 1e-15);
  CHECK_THROWS_AS(frechet_mean(uniform, Dataset{}), Error);
}

TEST_CASE("frechet_mean is the minimizer and the coordinate average") {
  oracle::Gen gen(51);
  for (int trial = 0; trial < 30; ++trial) {
    const Index dim = gen.integer(2, 6);
    const GeometryContext ctx{FreeVector(gen.param(dim, 0.5, 3.0))};
    const TangentBasis basis = helmert_basis(dim);
    const Dataset data = random_dataset(gen, dim, gen.integer(1, 20));
    const Composition mean = frechet_mean(ctx, data);

    const Vector avg = coords_matrix(ctx, basis, data).colwise().mean().transpose();
    CHECK(max_abs_diff(mean.values(), from_coords(ctx, basis, avg).values()) < 1e-12);

    auto objective = [&](const Composition& g) {
      double f = 0.0;
      for (const auto& r : data.rows) f += std::pow(distance(ctx, g, r), 2);
      return f;
    };
    const double best = objective(mean);
    for (int k = 0; k < 20; ++k) {
      Vector dir(dim - 1);
      for (Index i = 0; i < dim - 1; ++i) dir[i] = gen.uniform(-1, 1);
      const Composition eps = from_coords(ctx, basis, 1e-2 * dir.normalized());
      CHECK(best <= objective(perturb(ctx, mean, eps)));
    }
  }
}

TEST_CASE("sample_covariance") {
  const GeometryContext ctx(FreeVector{1, 2, 3});
  const TangentBasis basis = helmert_basis(3);
  const Composition p{0.2, 0.3, 0.5};
  const Composition q{0.6, 0.1, 0.3};
  CHECK(sample_covariance(ctx, basis, Dataset{{p, p, p}, {}}).lpNorm<Eigen::Infinity>() < 1e-15);
  CHECK_THROWS_AS(sample_covariance(ctx, basis, Dataset{{p}, {}}), Error);

  // Two points: the centered coordinates are +-(z1 - z2)/2, so the unbiased
  // covariance is (z1 - z2)(z1 - z2)^T / 2 with trace d^2 / 2.
  const Matrix two = sample_covariance(ctx, basis, Dataset{{p, q}, {}});
  CHECK(std::abs(two.trace() - 0.5 * std::pow(distance(ctx, p, q), 2)) < 1e-14);
  CHECK(std::abs(two.determinant()) < 1e-14);

  oracle::Gen gen(52);
  for (int trial = 0; trial < 30; ++trial) {
    const Index dim = gen.integer(2, 6);
    const GeometryContext g{FreeVector(gen.param(dim, 0.5, 3.0))};
    const TangentBasis b = helmert_basis(dim);
    const Dataset data = random_dataset(gen, dim, gen.integer(2, 15));
    const Composition gamma = gen.composition(dim, 1.0);
    Dataset moved = data;
    for (auto& r : moved.rows) r = perturb(g, r, gamma);
    const Matrix c0 = sample_covariance(g, b, data);
    CHECK((c0 - sample_covariance(g, b, moved)).lpNorm<Eigen::Infinity>() < 1e-10);
    CHECK((c0 - c0.transpose()).lpNorm<Eigen::Infinity>() == 0.0);
  }
}

TEST_CASE("pca recovers a generating geodesic") {
  const GeometryContext ctx(FreeVector{1, 1, 2, 0.5});
  const TangentBasis basis = helmert_basis(4);
  const Composition base{0.1, 0.2, 0.3, 0.4};
  const Composition mu{0.4, 0.1, 0.3, 0.2};
  Dataset data;
  for (double t : {-2.0, -1.3, -0.2, 0.4, 0.9, 1.7, 2.5}) data.rows.push_back(perturb(ctx, base, power(ctx, t, mu)));
  const PrincipalComponents pc = pca(ctx, basis, data, 3);
  CHECK(pc.variances[0] > 0.0);
  CHECK(std::abs(pc.variances[1]) < 1e-12);
  CHECK(std::abs(pc.variances[2]) < 1e-12);
  const Vector dir = log_map(ctx, mu).values().normalized();
  CHECK(std::abs(pc.directions[0].values().dot(dir)) > 1.0 - 1e-8);
}

TEST_CASE("pca with two points fits the joining line") {
  const GeometryContext ctx(FreeVector{1, 1, 2});
  const Dataset data{{Composition{0.2, 0.3, 0.5}, Composition{0.7, 0.1, 0.2}}, {}};
  const PrincipalComponents pc = pca(ctx, helmert_basis(3), data, 1);
  CHECK(residual_sum(ctx, pc, data, 1) < 1e-10);
  for (const auto& r : data.rows) CHECK(distance(ctx, r, pc_project(ctx, pc, r, 1)) < 1e-10);
}

TEST_CASE("pca matches Euclidean PCA on coordinates") {
  oracle::Gen gen(53);
  for (int trial = 0; trial < 40; ++trial) {
    const Index dim = gen.integer(3, 7);
    const GeometryContext ctx{FreeVector(gen.param(dim, 0.5, 3.0))};
    const TangentBasis basis = helmert_basis(dim);
    const Dataset data = random_dataset(gen, dim, gen.integer(3, 25));
    const PrincipalComponents full = pca(ctx, basis, data, dim - 1);
    const Matrix z = coords_matrix(ctx, basis, data);
    for (Index k = 1; k < dim; ++k) {
      CHECK(std::abs(residual_sum(ctx, full, data, k) - euclidean_residual(z, k)) < 1e-8);
    }
    for (Index k = 0; k + 1 < full.variances.size(); ++k) CHECK(full.variances[k] >= full.variances[k + 1]);
    CHECK(full.variances.minCoeff() >= -1e-12);
    CHECK(std::abs(full.variances.sum() - full.total_variance) < 1e-10);
    for (size_t i = 0; i < full.directions.size(); ++i) {
      for (size_t j = 0; j < full.directions.size(); ++j) {
        const double dot = full.directions[i].values().dot(full.directions[j].values());
        CHECK(std::abs(dot - (i == j ? 1.0 : 0.0)) < 1e-10);
      }
    }
    // scores are the centered coordinates projected on the directions
    const Matrix centered = z.rowwise() - z.colwise().mean();
    CHECK((centered * full.coord_directions - full.scores).lpNorm<Eigen::Infinity>() < 1e-12);
  }
  const GeometryContext ctx(FreeVector{1, 1, 1});
  const Dataset two{{Composition{0.2, 0.3, 0.5}, Composition{0.5, 0.3, 0.2}}, {}};
  CHECK_THROWS_AS(pca(ctx, helmert_basis(3), two, 0), Error);
  CHECK_THROWS_AS(pca(ctx, helmert_basis(3), two, 3), Error);
}

TEST_CASE("pc_line") {
  const GeometryContext ctx(FreeVector{1, 3, 2});
  oracle::Gen gen(54);
  const Dataset data = random_dataset(gen, 3, 12);
  const PrincipalComponents pc = pca(ctx, helmert_basis(3), data, 2);
  const std::vector<double> ts{0.0, 0.7, -0.7, 2.0, -2.0};
  const auto line = pc_line(ctx, pc, 0, ts);
  CHECK(max_abs_diff(line[0].values(), pc.mean.values()) < 1e-15);
  CHECK(std::abs(distance(ctx, line[1], pc.mean) - distance(ctx, line[2], pc.mean)) < 1e-10);
  CHECK(std::abs(distance(ctx, line[3], pc.mean) - 2.0) < 1e-10);
  for (const auto& p : line) CHECK(std::abs(p.values().sum() - 1.0) < 1e-12);
  CHECK_THROWS_AS(pc_line(ctx, pc, 2, ts), Error);
}

TEST_CASE("gaussian_new") {
  const GeometryContext ctx(FreeVector{1, 1, 2});
  const TangentBasis basis = helmert_basis(3);
  const SimplexGaussian g = gaussian_new(ctx, basis, Coordinates::Zero(2), Matrix::Identity(2, 2));
  CHECK(max_abs_diff(gaussian_mean(g).values(), ctx.neutral().values()) < 1e-15);

  const Coordinates mu = vec({0.3, -0.4});
  Matrix sigma(2, 2);
  sigma << 2.0, 0.3, 0.3, 0.5;
  const SimplexGaussian h = gaussian_new(ctx, basis, mu, sigma);
  CHECK(max_abs_diff(gaussian_mean(h).values(), from_coords(ctx, basis, mu).values()) == 0.0);
  CHECK((h.chol() * h.chol().transpose() - sigma).lpNorm<Eigen::Infinity>() < 1e-15);

  Matrix singular(2, 2);
  singular << 1.0, 1.0, 1.0, 1.0;
  try {
    gaussian_new(ctx, basis, Coordinates::Zero(2), singular);
    FAIL("expected NotPositiveDefinite");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotPositiveDefinite);
  }
  Matrix asym(2, 2);
  asym << 1.0, 0.2, 0.1, 1.0;
  CHECK_THROWS_AS(gaussian_new(ctx, basis, Coordinates::Zero(2), asym), Error);
}

TEST_CASE("random source") {
  RandomSource a(99);
  RandomSource b(99);
  for (int i = 0; i < 1000; ++i) CHECK(a.normal() == b.normal());
  RandomSource u(1);
  double lo = 1.0, hi = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const double x = u.uniform();
    lo = std::min(lo, x);
    hi = std::max(hi, x);
  }
  CHECK(lo > 0.0);
  CHECK(hi <= 1.0);
}

TEST_CASE("gaussian_sample") {
  const GeometryContext ctx(FreeVector{1, 1, 2});
  const TangentBasis basis = helmert_basis(3);
  const SimplexGaussian g = gaussian_new(ctx, basis, Coordinates::Zero(2), Matrix::Identity(2, 2));
  RandomSource r1(42), r2(42);
  const Dataset s1 = gaussian_sample(g, r1, 50);
  const Dataset s2 = gaussian_sample(g, r2, 50);
  for (size_t i = 0; i < s1.rows.size(); ++i) CHECK(s1.rows[i].values() == s2.rows[i].values());

  const Index n = 10000;
  RandomSource rng(2024);
  const Dataset big = gaussian_sample(g, rng, n);
  const Matrix z = coords_matrix(ctx, basis, big);
  const Vector zbar = z.colwise().mean().transpose();
  CHECK(zbar.cwiseAbs().maxCoeff() < 4.0 / std::sqrt(static_cast<double>(n)));
  CHECK((sample_covariance(ctx, basis, big) - Matrix::Identity(2, 2)).lpNorm<Eigen::Infinity>() < 0.1);
  CHECK(distance(ctx, frechet_mean(ctx, big), ctx.neutral()) <= 0.05);
  CHECK_THROWS_AS(gaussian_sample(g, rng, 0), Error);
}

TEST_CASE("gaussian_density") {
  const GeometryContext ctx(FreeVector{1, 1, 2});
  const TangentBasis basis = helmert_basis(3);
  const SimplexGaussian g = gaussian_new(ctx, basis, Coordinates::Zero(2), Matrix::Identity(2, 2));
  CHECK(std::abs(gaussian_density(g, ctx.neutral()) - 1.0 / (2.0 * std::numbers::pi)) < 1e-15);

  oracle::Gen gen(55);
  for (int trial = 0; trial < 500; ++trial) {
    Coordinates z(2);
    z << gen.uniform(-4, 4), gen.uniform(-4, 4);
    const double expected = oracle::std_normal_density(oracle::to_std(z));
    CHECK(std::abs(gaussian_density(g, from_coords(ctx, basis, z)) - expected) < 1e-12);
  }

  // dim 2: the chart is one-dimensional, integrate along it
  const GeometryContext line_ctx(FreeVector{1, 3});
  const TangentBasis b2 = helmert_basis(2);
  Matrix var(1, 1);
  var << 2.25;
  const SimplexGaussian h = gaussian_new(line_ctx, b2, vec({0.7}), var);
  auto f = [&](double s) { return gaussian_density(h, from_coords(line_ctx, b2, vec({s}))); };
  CHECK(std::abs(integrate(f, 0.7 - 15.0, 0.7 + 15.0, 1e-10) - 1.0) < 1e-6);
}
