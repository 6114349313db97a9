#include "simplexgeo/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

namespace simplexgeo {

namespace {

double off_diagonal_norm(const Matrix& a) {
  double sq = 0.0;
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      if (i != j) sq += a(i, j) * a(i, j);
    }
  }
  return std::sqrt(sq);
}

}  // namespace

SymmetricEigen jacobi_eigen(const Matrix& input, double tol, int max_sweeps) {
  if (input.rows() != input.cols()) throw Error(ErrorCode::DimensionMismatch, "jacobi_eigen needs a square matrix");
  const Index n = input.rows();
  Matrix a = 0.5 * (input + input.transpose());
  Matrix v = Matrix::Identity(n, n);
  const double threshold = tol * std::max(1.0, a.norm());

  int sweep = 0;
  while (off_diagonal_norm(a) >= threshold) {
    if (sweep++ >= max_sweeps) {
      throw Error(ErrorCode::NonConvergence, "jacobi_eigen did not converge in " + std::to_string(max_sweeps) + " sweeps");
    }
    for (Index p = 0; p < n - 1; ++p) {
      for (Index q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        // Rotation angle that annihilates a(p,q), small-angle branch for stability.
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (Index k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (Index k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        for (Index k = 0; k < n; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<Index> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Index i, Index j) { return a(i, i) > a(j, j); });

  SymmetricEigen out{Vector(n), Matrix(n, n)};
  for (Index k = 0; k < n; ++k) {
    const Index src = order[static_cast<size_t>(k)];
    out.values[k] = a(src, src);
    Vector col = v.col(src);
    for (Index i = 0; i < n; ++i) {
      if (std::abs(col[i]) > 1e-12) {
        if (col[i] < 0.0) col = -col;
        break;
      }
    }
    out.vectors.col(k) = col;
  }
  return out;
}

Matrix cholesky(const Matrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorCode::DimensionMismatch, "cholesky needs a square matrix");
  const Index n = a.rows();
  const double scale = n > 0 ? a.diagonal().cwiseAbs().maxCoeff() : 0.0;
  const double floor = 1e-13 * std::max(scale, std::numeric_limits<double>::min());
  Matrix l = Matrix::Zero(n, n);
  for (Index j = 0; j < n; ++j) {
    double d = a(j, j) - l.row(j).head(j).squaredNorm();
    if (!(d > floor)) {
      throw Error(ErrorCode::NotPositiveDefinite, "matrix is not positive definite (pivot " + std::to_string(j) + ")");
    }
    l(j, j) = std::sqrt(d);
    for (Index i = j + 1; i < n; ++i) {
      l(i, j) = (a(i, j) - l.row(i).head(j).dot(l.row(j).head(j))) / l(j, j);
    }
  }
  return l;
}

}  // namespace simplexgeo
