#include "simplexgeo/random.hpp"

#include <cmath>
#include <numbers>

namespace simplexgeo {

double RandomSource::uniform() {
  constexpr double kScale = 1.0 / 9007199254740992.0;  // 2^-53
  return (static_cast<double>(engine_() >> 11) + 1.0) * kScale;
}

double RandomSource::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double radius = std::sqrt(-2.0 * std::log(uniform()));
  const double angle = 2.0 * std::numbers::pi * uniform();
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

Vector RandomSource::normal_vector(Index n) {
  Vector z(n);
  for (Index i = 0; i < n; ++i) z[i] = normal();
  return z;
}

}  // namespace simplexgeo
