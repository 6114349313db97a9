#include "simplexgeo/ambient.hpp"

#include <cmath>
#include <string>

namespace simplexgeo {

namespace detail {

void require_same_size(Index a, Index b, const char* where) {
  if (a != b) {
    throw Error(ErrorCode::DimensionMismatch, std::string(where) + ": " + std::to_string(a) +
                                                  " vs " + std::to_string(b));
  }
}

Vector to_vector(std::initializer_list<double> values) {
  Vector v(static_cast<Index>(values.size()));
  Index i = 0;
  for (double x : values) v[i++] = x;
  return v;
}

}  // namespace detail

namespace {

void require_dim(const Vector& v, const char* what) {
  if (v.size() < 2) {
    throw Error(ErrorCode::InvalidDimension,
                std::string(what) + " needs at least 2 components, got " + std::to_string(v.size()));
  }
}

}  // namespace

FreeVector::FreeVector(Vector values) : values_(std::move(values)) {
  require_dim(values_, "FreeVector");
  if (!values_.allFinite()) throw Error(ErrorCode::NonFiniteValue, "FreeVector has non-finite entries");
}

FreeVector::FreeVector(std::initializer_list<double> values) : FreeVector(detail::to_vector(values)) {}

AmbientVector::AmbientVector(Vector values) : values_(std::move(values)) {
  require_dim(values_, "AmbientVector");
  for (Index i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) {
      throw Error(ErrorCode::NonFiniteValue, "AmbientVector component " + std::to_string(i) + " is not finite");
    }
    if (!(values_[i] > 0.0)) {
      throw Error(ErrorCode::NonPositiveValue, "AmbientVector component " + std::to_string(i) + " is not positive");
    }
  }
}

AmbientVector::AmbientVector(std::initializer_list<double> values)
    : AmbientVector(detail::to_vector(values)) {}

AmbientVector AmbientVector::ones(Index dim) { return AmbientVector(Vector::Ones(dim)); }

AmbientVector oplus(const AmbientVector& x, const AmbientVector& y) {
  detail::require_same_size(x.size(), y.size(), "oplus");
  Vector r = x.values().cwiseProduct(y.values());
  if (!r.allFinite() || (r.array() <= 0.0).any()) {
    throw Error(ErrorCode::Overflow, "oplus left the representable positive range");
  }
  return AmbientVector(std::move(r));
}

AmbientVector odot(double c, const AmbientVector& x) {
  if (!std::isfinite(c)) throw Error(ErrorCode::NonFiniteValue, "odot scalar is not finite");
  Vector r = x.values().array().pow(c).matrix();
  if (!r.allFinite() || (r.array() <= 0.0).any()) {
    throw Error(ErrorCode::Overflow, "odot left the representable positive range");
  }
  return AmbientVector(std::move(r));
}

AmbientVector amb_exp(const FreeVector& v) {
  Vector r = v.values().array().exp().matrix();
  if (!r.allFinite()) throw Error(ErrorCode::Overflow, "amb_exp overflowed");
  if ((r.array() <= 0.0).any()) throw Error(ErrorCode::Overflow, "amb_exp underflowed to zero");
  return AmbientVector(std::move(r));
}

FreeVector amb_log(const AmbientVector& x) { return FreeVector(x.values().array().log().matrix()); }

}  // namespace simplexgeo
