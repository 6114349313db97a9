#pragma once

// The open positive orthant R^{N+1}_{>0} as an Abelian group under the
// componentwise product, and as a real vector space under componentwise
// powers. Exp/Log are the (global) group exponential and logarithm.

#include <initializer_list>

#include <Eigen/Core>

#include "simplexgeo/errors.hpp"

namespace simplexgeo {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using Index = Eigen::Index;

/// Unconstrained real (N+1)-vector: Lie-algebra coordinates, or a raw
/// subgroup parameter before validation.
class FreeVector {
 public:
  explicit FreeVector(Vector values);
  FreeVector(std::initializer_list<double> values);

  const Vector& values() const noexcept { return values_; }
  Index size() const noexcept { return values_.size(); }
  double operator[](Index i) const { return values_[i]; }

 private:
  Vector values_;
};

/// Strictly positive (N+1)-vector, N >= 1.
class AmbientVector {
 public:
  explicit AmbientVector(Vector values);
  AmbientVector(std::initializer_list<double> values);

  static AmbientVector ones(Index dim);

  const Vector& values() const noexcept { return values_; }
  Index size() const noexcept { return values_.size(); }
  double operator[](Index i) const { return values_[i]; }

 private:
  Vector values_;
};

AmbientVector oplus(const AmbientVector& x, const AmbientVector& y);
AmbientVector odot(double c, const AmbientVector& x);

/// Componentwise e^{v_i}; throws Overflow if any component is not finite.
AmbientVector amb_exp(const FreeVector& v);
FreeVector amb_log(const AmbientVector& x);

namespace detail {
void require_same_size(Index a, Index b, const char* where);
Vector to_vector(std::initializer_list<double> values);
}  // namespace detail

}  // namespace simplexgeo
