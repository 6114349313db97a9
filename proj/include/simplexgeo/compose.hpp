#pragma once

// Subcompositions and permutations under a general quotient structure.
// Selecting parts of a composition must carry the matching parts of a along,
// so every operation here returns the derived geometry with the data.

#include <utility>
#include <vector>

#include "simplexgeo/geometry.hpp"

namespace simplexgeo {

/// 1-based part indices, distinct, at least two; order is kept as listed.
class SubSelection {
 public:
  explicit SubSelection(std::vector<Index> indices);

  const std::vector<Index>& indices() const noexcept { return indices_; }
  Index size() const noexcept { return static_cast<Index>(indices_.size()); }

  /// Throws IndexOutOfRange if any index exceeds dim.
  void check(Index dim) const;

 private:
  std::vector<Index> indices_;
};

Vector select(const SubSelection& sel, const Vector& x);
AmbientVector select(const SubSelection& sel, const AmbientVector& x);

struct SubComposition {
  GeometryContext ctx;
  Composition composition;
};

/// Sub(lambda) = C_{a'}(select(lambda)) with a' = select(a).
SubComposition subcompose(const GeometryContext& ctx, const SubSelection& sel, const Composition& lambda);

/// Geometry for a' = select(a) alone.
GeometryContext sub_context(const GeometryContext& ctx, const SubSelection& sel);

/// 1-based permutation: output part i is input part perm[i].
class Permutation {
 public:
  explicit Permutation(std::vector<Index> perm);

  const std::vector<Index>& indices() const noexcept { return perm_; }
  Index size() const noexcept { return static_cast<Index>(perm_.size()); }

 private:
  std::vector<Index> perm_;
};

Vector permute(const Permutation& perm, const Vector& x);
Composition permute(const Permutation& perm, const Composition& lambda);

/// Context for sigma(a); its neutral element is sigma(e_a).
GeometryContext permute_context(const GeometryContext& ctx, const Permutation& perm);

}  // namespace simplexgeo
