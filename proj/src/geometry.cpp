#include "simplexgeo/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace simplexgeo {

namespace {

constexpr double kFastPathTol = 1e-12;

void require_finite_positive(const Vector& v, const char* what) {
  if (v.size() < 2) {
    throw Error(ErrorCode::InvalidDimension, std::string(what) + " needs at least 2 components");
  }
  for (Index i = 0; i < v.size(); ++i) {
    if (!std::isfinite(v[i])) {
      throw Error(ErrorCode::NonFiniteValue, std::string(what) + " component " + std::to_string(i) + " is not finite");
    }
    if (!(v[i] > 0.0)) {
      throw Error(ErrorCode::NonPositiveValue,
                  std::string(what) + " component " + std::to_string(i) + " is not positive");
    }
  }
}

double log_sum_exp(const Vector& y) {
  const double m = y.maxCoeff();
  if (!std::isfinite(m)) return m;
  return m + std::log((y.array() - m).exp().sum());
}

FreeVector canonical_param(const FreeVector& a_raw) {
  Index pos = 0;
  Index neg = 0;
  for (Index i = 0; i < a_raw.size(); ++i) {
    if (a_raw[i] == 0.0) {
      throw Error(ErrorCode::ZeroComponent, "parameter component " + std::to_string(i) + " is zero");
    }
    (a_raw[i] > 0.0 ? pos : neg) += 1;
  }
  if (pos > 0 && neg > 0) {
    throw Error(ErrorCode::MixedSignParameter, "parameter components must share one strict sign");
  }
  return neg > 0 ? FreeVector(-a_raw.values()) : a_raw;
}

ClosureKind detect_kind(const Vector& a) {
  const Index n = a.size();
  const double base = a[0];
  auto near = [base](double v, double ratio) { return std::abs(v / base - ratio) <= kFastPathTol * ratio; };
  bool head_uniform = true;
  for (Index i = 0; i + 1 < n; ++i) head_uniform = head_uniform && near(a[i], 1.0);
  if (head_uniform && near(a[n - 1], 1.0)) return ClosureKind::Uniform;
  if (head_uniform && near(a[n - 1], 2.0)) return ClosureKind::LastDoubled;
  return ClosureKind::General;
}

// g(t) = LSE_i(ln x_i + a_i t) is smooth, strictly increasing and convex with
// slope in [min a, max a]; its unique zero is the closure parameter.
double newton_root(const Vector& a, const SolverSettings& st, const Vector& log_x) {
  auto eval = [&](double t, double& slope) {
    Vector y = log_x + t * a;
    const double m = y.maxCoeff();
    Vector w = (y.array() - m).exp().matrix();
    const double total = w.sum();
    slope = w.dot(a) / total;
    return m + std::log(total);
  };

  const double a_max = a.maxCoeff();
  double slope = 0.0;
  const double t0 = -log_sum_exp(log_x) / a.mean();
  const double g0 = eval(t0, slope);
  if (std::abs(g0) <= st.f_tol) return t0;

  // Bracket by doubling away from t0. Since slope >= min a, at most
  // log2(max a / min a) + 1 doublings are needed.
  double lo = t0;
  double hi = t0;
  const double dir = g0 < 0.0 ? 1.0 : -1.0;
  double step = std::max(std::abs(g0) / a_max, std::numeric_limits<double>::min());
  for (int k = 0;; ++k) {
    const double probe = t0 + dir * step;
    double s = 0.0;
    const double gp = eval(probe, s);
    if (dir > 0.0) {
      if (gp >= 0.0) { hi = probe; break; }
      lo = probe;
    } else {
      if (gp <= 0.0) { lo = probe; break; }
      hi = probe;
    }
    if (!std::isfinite(probe) || k > 2100) {
      throw Error(ErrorCode::NonConvergence, "could not bracket the closure root");
    }
    step *= 2.0;
  }

  double t = g0 < 0.0 ? lo : hi;
  for (int iter = 0; iter < st.max_iter; ++iter) {
    const double g = eval(t, slope);
    if (std::abs(g) <= st.f_tol) return t;
    if (g < 0.0) lo = t; else hi = t;
    double next = t - g / slope;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    const double scale = std::max(1.0, std::abs(t));
    if (std::abs(next - t) <= st.t_tol * scale || hi - lo <= st.t_tol * scale) return next;
    t = next;
  }
  throw Error(ErrorCode::NonConvergence,
              "closure root not found in " + std::to_string(st.max_iter) + " iterations");
}

double uniform_root(const Vector& a, const Vector& log_x) { return -log_sum_exp(log_x) / a[0]; }

// With y = e^{c t}: S y + q y^2 = 1, S = sum of the first N parts, q the last.
// Positive root in rationalized form y = 2 / (S + sqrt(S^2 + 4q)), evaluated in
// log space so extreme magnitudes neither overflow nor cancel.
double last_doubled_root(const Vector& a, const Vector& log_x) {
  const Index n = log_x.size();
  const double log_s = log_sum_exp(log_x.head(n - 1));
  const double log_2sqrtq = std::numbers::ln2 + 0.5 * log_x[n - 1];
  const double log_m = std::max(log_s, log_2sqrtq);
  const double r1 = std::exp(log_s - log_m);
  const double r2 = std::exp(log_2sqrtq - log_m);
  const double log_den = log_m + std::log(r1 + std::hypot(r1, r2));
  return (std::numbers::ln2 - log_den) / a[0];
}

double root_for(const Vector& a, ClosureKind kind, const SolverSettings& st, const Vector& log_x) {
  switch (kind) {
    case ClosureKind::Uniform: return uniform_root(a, log_x);
    case ClosureKind::LastDoubled: return last_doubled_root(a, log_x);
    case ClosureKind::General: break;
  }
  return newton_root(a, st, log_x);
}

Composition close_log(const Vector& a, ClosureKind kind, const SolverSettings& st, const Vector& log_x) {
  if (!log_x.allFinite()) throw Error(ErrorCode::Overflow, "closure input is not finite in log space");
  const double t = root_for(a, kind, st, log_x);
  Vector values = (log_x + t * a).array().exp().matrix();
  constexpr double kTiny = std::numeric_limits<double>::denorm_min();
  for (Index i = 0; i < values.size(); ++i) values[i] = std::max(values[i], kTiny);
  return Composition(std::move(values));
}

const SolverSettings& validated(const SolverSettings& st) {
  if (!(st.f_tol > 0.0) || !(st.t_tol > 0.0) || st.max_iter < 1) {
    throw Error(ErrorCode::InvalidArgument, "solver tolerances must be positive and max_iter >= 1");
  }
  return st;
}

}  // namespace

Composition::Composition(Vector values) : values_(std::move(values)) {
  require_finite_positive(values_, "Composition");
  const double total = values_.sum();
  if (std::abs(total - 1.0) > kSumTolerance) {
    throw Error(ErrorCode::NotOnSimplex, "composition sums to " + std::to_string(total));
  }
  values_ /= total;
}

Composition::Composition(std::initializer_list<double> values) : Composition(detail::to_vector(values)) {}

TangentVector::TangentVector(Vector values) : values_(std::move(values)) {
  if (values_.size() < 2) throw Error(ErrorCode::InvalidDimension, "TangentVector needs at least 2 components");
  if (!values_.allFinite()) throw Error(ErrorCode::NonFiniteValue, "TangentVector has non-finite entries");
  const double total = values_.sum();
  if (std::abs(total) > kSumTolerance * std::max(1.0, values_.lpNorm<1>())) {
    throw Error(ErrorCode::NotTangent, "tangent vector sums to " + std::to_string(total));
  }
  values_.array() -= total / static_cast<double>(values_.size());
}

TangentVector::TangentVector(std::initializer_list<double> values) : TangentVector(detail::to_vector(values)) {}

TangentVector TangentVector::zero(Index dim) { return TangentVector(Vector::Zero(dim)); }

GeometryContext::GeometryContext(const FreeVector& a_raw, SolverSettings solver)
    : a_(canonical_param(a_raw)),
      solver_(validated(solver)),
      kind_(detect_kind(a_.values())),
      neutral_(close_log(a_.values(), kind_, solver_, Vector::Zero(a_.size()))),
      s_(a_.values().dot(neutral_.values())) {}

GeometryContext context_new(const FreeVector& a_raw, SolverSettings solver) {
  return GeometryContext(a_raw, solver);
}

double solve_t_log(const GeometryContext& ctx, const Vector& log_x) {
  detail::require_same_size(ctx.dim(), log_x.size(), "solve_t");
  return root_for(ctx.param().values(), ctx.closure_kind(), ctx.solver(), log_x);
}

double solve_t(const GeometryContext& ctx, const AmbientVector& x) {
  return solve_t_log(ctx, x.values().array().log().matrix());
}

double solve_t_general(const GeometryContext& ctx, const Vector& log_x) {
  detail::require_same_size(ctx.dim(), log_x.size(), "solve_t_general");
  return newton_root(ctx.param().values(), ctx.solver(), log_x);
}

Composition closure_log(const GeometryContext& ctx, const Vector& log_x) {
  detail::require_same_size(ctx.dim(), log_x.size(), "closure");
  return close_log(ctx.param().values(), ctx.closure_kind(), ctx.solver(), log_x);
}

Composition closure(const GeometryContext& ctx, const AmbientVector& x) {
  return closure_log(ctx, x.values().array().log().matrix());
}

FreeVector neutral_to_param(const Composition& lambda) {
  return FreeVector(-lambda.values().array().log().matrix());
}

Matrix dC1(const GeometryContext& ctx) {
  const Vector& e = ctx.neutral().values();
  const Vector& a = ctx.param().values();
  Matrix d = -(a.cwiseProduct(e) / ctx.normalizer()) * e.transpose();
  d.diagonal() += e;
  return d;
}

TangentVector log_map(const GeometryContext& ctx, const Composition& lambda) {
  detail::require_same_size(ctx.dim(), lambda.size(), "log_map");
  const Vector& e = ctx.neutral().values();
  const Vector& a = ctx.param().values();
  const Vector logs = lambda.values().array().log().matrix();
  const double weighted = e.dot(logs);
  return TangentVector(e.cwiseProduct(logs - (weighted / ctx.normalizer()) * a));
}

Composition exp_map(const GeometryContext& ctx, const TangentVector& xi) {
  detail::require_same_size(ctx.dim(), xi.size(), "exp_map");
  const Vector section = xi.values().cwiseQuotient(ctx.neutral().values());
  if (!section.allFinite()) throw Error(ErrorCode::Overflow, "exp_map section is not finite");
  const double t = solve_t_log(ctx, section);
  const Vector logs = section + t * ctx.param().values();
  if (logs.minCoeff() < std::log(std::numeric_limits<double>::min())) {
    throw Error(ErrorCode::Overflow, "exp_map result has parts below double range");
  }
  return Composition(logs.array().exp().matrix());
}

Composition perturb(const GeometryContext& ctx, const Composition& lambda, const Composition& mu) {
  detail::require_same_size(lambda.size(), mu.size(), "perturb");
  return closure_log(ctx, (lambda.values().array().log() + mu.values().array().log()).matrix());
}

Composition power(const GeometryContext& ctx, double c, const Composition& lambda) {
  if (!std::isfinite(c)) throw Error(ErrorCode::NonFiniteValue, "power scalar is not finite");
  return closure_log(ctx, (c * lambda.values().array().log()).matrix());
}

Composition invert(const GeometryContext& ctx, const Composition& lambda) { return power(ctx, -1.0, lambda); }

Composition difference(const GeometryContext& ctx, const Composition& lambda, const Composition& mu) {
  detail::require_same_size(lambda.size(), mu.size(), "difference");
  return closure_log(ctx, (lambda.values().array().log() - mu.values().array().log()).matrix());
}

double inner(const GeometryContext& ctx, const Composition& lambda, const Composition& mu) {
  return log_map(ctx, lambda).values().dot(log_map(ctx, mu).values());
}

double norm(const GeometryContext& ctx, const Composition& lambda) { return log_map(ctx, lambda).values().norm(); }

double distance(const GeometryContext& ctx, const Composition& lambda, const Composition& mu) {
  return (log_map(ctx, lambda).values() - log_map(ctx, mu).values()).norm();
}

double distance_explicit(const GeometryContext& ctx, const Composition& lambda, const Composition& mu) {
  detail::require_same_size(ctx.dim(), lambda.size(), "distance_explicit");
  detail::require_same_size(lambda.size(), mu.size(), "distance_explicit");
  const Vector& e = ctx.neutral().values();
  const Vector& a = ctx.param().values();
  double weighted = 0.0;
  Vector ratios(ctx.dim());
  for (Index j = 0; j < ctx.dim(); ++j) {
    ratios[j] = std::log(lambda[j] / mu[j]);
    weighted += e[j] * ratios[j];
  }
  double sq = 0.0;
  for (Index i = 0; i < ctx.dim(); ++i) {
    const double r = ratios[i] - a[i] / ctx.normalizer() * weighted;
    sq += e[i] * e[i] * r * r;
  }
  return std::sqrt(sq);
}

bool equivalent(const GeometryContext& ctx, const AmbientVector& v, const AmbientVector& w, double tol) {
  detail::require_same_size(v.size(), w.size(), "equivalent");
  return (closure(ctx, v).values() - closure(ctx, w).values()).lpNorm<Eigen::Infinity>() <= tol;
}

}  // namespace simplexgeo
