#include "simplexgeo/compose.hpp"

#include <algorithm>
#include <string>

namespace simplexgeo {

SubSelection::SubSelection(std::vector<Index> indices) : indices_(std::move(indices)) {
  if (indices_.size() < 2) throw Error(ErrorCode::InvalidArgument, "a subcomposition needs at least 2 parts");
  std::vector<Index> sorted = indices_;
  std::sort(sorted.begin(), sorted.end());
  if (sorted.front() < 1) throw Error(ErrorCode::IndexOutOfRange, "selection indices are 1-based");
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorCode::InvalidArgument, "selection indices must be distinct");
  }
}

void SubSelection::check(Index dim) const {
  for (Index i : indices_) {
    if (i > dim) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "selection index " + std::to_string(i) + " exceeds dimension " + std::to_string(dim));
    }
  }
}

Vector select(const SubSelection& sel, const Vector& x) {
  sel.check(x.size());
  Vector out(sel.size());
  for (Index k = 0; k < sel.size(); ++k) out[k] = x[sel.indices()[static_cast<size_t>(k)] - 1];
  return out;
}

AmbientVector select(const SubSelection& sel, const AmbientVector& x) { return AmbientVector(select(sel, x.values())); }

GeometryContext sub_context(const GeometryContext& ctx, const SubSelection& sel) {
  return GeometryContext(FreeVector(select(sel, ctx.param().values())), ctx.solver());
}

SubComposition subcompose(const GeometryContext& ctx, const SubSelection& sel, const Composition& lambda) {
  detail::require_same_size(ctx.dim(), lambda.size(), "subcompose");
  GeometryContext sub = sub_context(ctx, sel);
  Composition part = closure_log(sub, select(sel, lambda.values()).array().log().matrix());
  return {std::move(sub), std::move(part)};
}

Permutation::Permutation(std::vector<Index> perm) : perm_(std::move(perm)) {
  std::vector<Index> sorted = perm_;
  std::sort(sorted.begin(), sorted.end());
  for (size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != static_cast<Index>(i + 1)) {
      throw Error(ErrorCode::InvalidPermutation, "permutation must list each of 1..n exactly once");
    }
  }
}

Vector permute(const Permutation& perm, const Vector& x) {
  detail::require_same_size(perm.size(), x.size(), "permute");
  Vector out(x.size());
  for (Index i = 0; i < x.size(); ++i) out[i] = x[perm.indices()[static_cast<size_t>(i)] - 1];
  return out;
}

Composition permute(const Permutation& perm, const Composition& lambda) {
  return Composition(permute(perm, lambda.values()));
}

GeometryContext permute_context(const GeometryContext& ctx, const Permutation& perm) {
  return GeometryContext(FreeVector(permute(perm, ctx.param().values())), ctx.solver());
}

}  // namespace simplexgeo
