#pragma once

#include <cstdint>
#include <random>

#include "simplexgeo/ambient.hpp"

namespace simplexgeo {

/// Seeded source of uniform and standard-normal variates.
///
/// Engine: std::mt19937_64 (fully specified by the standard, so streams are
/// identical across platforms). Uniforms take the top 53 bits of each draw;
/// normals use the Box-Muller transform, consuming two uniforms per pair and
/// returning the sine branch on the next call.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const noexcept { return seed_; }
  static constexpr const char* algorithm() { return "mt19937_64+box-muller"; }

  /// Uniform on (0, 1].
  double uniform();
  double normal();
  Vector normal_vector(Index n);

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace simplexgeo
