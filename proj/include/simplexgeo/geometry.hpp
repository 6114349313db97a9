#pragma once

// Quotient geometry of the open simplex induced by a one-parameter subgroup
// H_a = { (e^{t a_i})_i : t real } of the positive orthant.
//
// Every positive vector x has exactly one representative of its class x H_a
// on the simplex when all a_i share one strict sign. That representative is
// the closure C_a(x) = (x_i e^{a_i t})_i with t the root of sum_i x_i e^{a_i t} = 1.
// Transporting the ambient group/vector structure through C_a turns the simplex
// into a Euclidean vector space whose neutral element is e_a = C_a(1,...,1).

#include <cstdint>
#include <initializer_list>

#include "simplexgeo/ambient.hpp"

namespace simplexgeo {

/// Point of the open simplex: strictly positive, sums to 1.
class Composition {
 public:
  /// Accepts inputs whose sum is within 1e-9 of 1 and renormalizes them.
  explicit Composition(Vector values);
  Composition(std::initializer_list<double> values);

  static constexpr double kSumTolerance = 1e-9;

  const Vector& values() const noexcept { return values_; }
  Index size() const noexcept { return values_.size(); }
  double operator[](Index i) const { return values_[i]; }

 private:
  Vector values_;
};

/// Element of the tangent space at e_a: an (N+1)-vector summing to zero.
class TangentVector {
 public:
  /// Accepts |sum| <= 1e-10 * max(1, sum |v_i|) and projects the rest away.
  explicit TangentVector(Vector values);
  TangentVector(std::initializer_list<double> values);

  static TangentVector zero(Index dim);

  static constexpr double kSumTolerance = 1e-10;

  const Vector& values() const noexcept { return values_; }
  Index size() const noexcept { return values_.size(); }
  double operator[](Index i) const { return values_[i]; }

 private:
  Vector values_;
};

struct SolverSettings {
  double f_tol = 1e-13;
  double t_tol = 1e-14;
  int max_iter = 200;
};

enum class ClosureKind : std::uint8_t {
  General,      // safeguarded Newton on the log-sum-exp residual
  Uniform,      // a proportional to (1,...,1): t = -ln sum x
  LastDoubled,  // a proportional to (1,...,1,2): quadratic in e^t
};

/// Validated parameter a together with the cached neutral element.
/// Immutable; cheap to copy.
class GeometryContext {
 public:
  /// Throws MixedSignParameter / ZeroComponent for inadmissible a. An
  /// all-negative a is replaced by -a (same subgroup).
  explicit GeometryContext(const FreeVector& a_raw, SolverSettings solver = {});

  const FreeVector& param() const noexcept { return a_; }
  const Composition& neutral() const noexcept { return neutral_; }
  /// s = sum_k a_k (e_a)_k
  double normalizer() const noexcept { return s_; }
  Index dim() const noexcept { return a_.size(); }
  const SolverSettings& solver() const noexcept { return solver_; }
  ClosureKind closure_kind() const noexcept { return kind_; }

 private:
  FreeVector a_;
  SolverSettings solver_;
  ClosureKind kind_;
  Composition neutral_;
  double s_;
};

GeometryContext context_new(const FreeVector& a_raw, SolverSettings solver = {});

/// Root t of sum_i x_i e^{a_i t} = 1, using the closed form where one exists.
double solve_t(const GeometryContext& ctx, const AmbientVector& x);

/// Same root from log-coordinates ln x; never materializes x.
double solve_t_log(const GeometryContext& ctx, const Vector& log_x);

/// Always runs the iterative solver, bypassing closed forms.
double solve_t_general(const GeometryContext& ctx, const Vector& log_x);

Composition closure(const GeometryContext& ctx, const AmbientVector& x);

/// Closure of Exp(log_x). Components that underflow double range are clamped
/// to the smallest positive subnormal so the result stays a Composition.
Composition closure_log(const GeometryContext& ctx, const Vector& log_x);

/// Parameter (sign-canonical) whose quotient structure has lambda as neutral
/// element: a = (-ln lambda_i)_i.
FreeVector neutral_to_param(const Composition& lambda);

/// Derivative of C_a at the ambient identity:
/// (i,j) -> delta_ij e_i - (a_i / s) e_i e_j.
Matrix dC1(const GeometryContext& ctx);

TangentVector log_map(const GeometryContext& ctx, const Composition& lambda);

/// Exp along the section v_i = xi_i / (e_a)_i, which satisfies dC1 v = xi.
Composition exp_map(const GeometryContext& ctx, const TangentVector& xi);

Composition perturb(const GeometryContext& ctx, const Composition& lambda, const Composition& mu);
Composition invert(const GeometryContext& ctx, const Composition& lambda);
Composition power(const GeometryContext& ctx, double c, const Composition& lambda);
/// lambda (+) ((-1) (.) mu)
Composition difference(const GeometryContext& ctx, const Composition& lambda, const Composition& mu);

double inner(const GeometryContext& ctx, const Composition& lambda, const Composition& mu);
double norm(const GeometryContext& ctx, const Composition& lambda);
double distance(const GeometryContext& ctx, const Composition& lambda, const Composition& mu);

/// Weighted log-ratio form of the squared distance, evaluated directly from
/// ln(lambda_i / mu_i). Used as a cross-check of distance().
double distance_explicit(const GeometryContext& ctx, const Composition& lambda, const Composition& mu);

/// Generalized scale equivalence: v ~ w iff v_i = w_i alpha^{a_i} for some alpha > 0.
bool equivalent(const GeometryContext& ctx, const AmbientVector& v, const AmbientVector& w,
                double tol = 1e-10);

}  // namespace simplexgeo
