#include <doctest.h>

#include <Eigen/Eigenvalues>

#include "oracles.hpp"
#include "simplexgeo/linalg.hpp"

using namespace simplexgeo;

TEST_CASE("jacobi_eigen matches a reference eigensolver") {
  oracle::Gen gen(41);
  for (int trial = 0; trial < 100; ++trial) {
    const Index n = gen.integer(1, 12);
    Matrix m(n, n);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) m(i, j) = gen.uniform(-2, 2);
    const Matrix s = m * m.transpose();
    const SymmetricEigen eig = jacobi_eigen(s);
    const Eigen::SelfAdjointEigenSolver<Matrix> ref(s);
    const Vector ref_desc = ref.eigenvalues().reverse();
    CHECK(oracle::max_abs_diff(eig.values, ref_desc) < 1e-10);
    for (Index k = 0; k + 1 < n; ++k) CHECK(eig.values[k] >= eig.values[k + 1]);
    CHECK((eig.vectors.transpose() * eig.vectors - Matrix::Identity(n, n)).lpNorm<Eigen::Infinity>() < 1e-12);
    CHECK((s * eig.vectors - eig.vectors * eig.values.asDiagonal()).lpNorm<Eigen::Infinity>() < 1e-10);
    for (Index k = 0; k < n; ++k) {
      for (Index i = 0; i < n; ++i) {
        if (std::abs(eig.vectors(i, k)) > 1e-12) {
          CHECK(eig.vectors(i, k) > 0.0);
          break;
        }
      }
    }
  }
}

TEST_CASE("jacobi_eigen on a diagonal and a zero matrix") {
  Matrix d = Matrix::Zero(3, 3);
  d.diagonal() << 1.0, 3.0, 2.0;
  const SymmetricEigen eig = jacobi_eigen(d);
  CHECK(eig.values == Vector((Vector(3) << 3.0, 2.0, 1.0).finished()));
  CHECK(jacobi_eigen(Matrix::Zero(4, 4)).values == Vector::Zero(4));
}

TEST_CASE("cholesky") {
  Matrix a(2, 2);
  a << 4, 2, 2, 3;
  const Matrix l = cholesky(a);
  CHECK((l * l.transpose() - a).lpNorm<Eigen::Infinity>() < 1e-15);
  CHECK(l(0, 1) == 0.0);

  Matrix singular(2, 2);
  singular << 1, 1, 1, 1;
  try {
    cholesky(singular);
    FAIL("expected NotPositiveDefinite");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotPositiveDefinite);
  }
  Matrix indefinite(2, 2);
  indefinite << 1, 2, 2, 1;
  CHECK_THROWS_AS(cholesky(indefinite), Error);
}
