#include "copula_outage/bounds.hpp"

#include "copula_outage/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

namespace copula_outage {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr Point kNoPoint{kNaN, kNaN};

// Parameterization of the level curve inside the support rectangle.
struct LevelCurve {
  // Set when the curve misses the support: every point has F_X = F_Y = 0
  // (value 0) or F_X = F_Y = 1 (value 1).
  bool empty = false;
  double empty_value = 0.0;
  bool cdf_space = false;  // parameter is u = F_X(x) rather than x
  double lo = 0.0;
  double hi = 0.0;
};

LevelCurve level_curve(const Marginal& fx, const Marginal& fy, const BinaryOp& op, double s) {
  const Support sx = fx.support();
  const Support sy = fy.support();
  if (sx.lo < 0.0 || sy.lo < 0.0) {
    throw DomainError("level-curve bounds require marginals on the non-negative reals");
  }

  LevelCurve curve;
  if (s <= op.apply(sx.lo, sy.lo)) {
    curve.empty = true;
    curve.empty_value = 0.0;
    return curve;
  }
  if (s >= op.apply(sx.hi, sy.hi)) {
    curve.empty = true;
    curve.empty_value = 1.0;
    return curve;
  }

  double lo = sx.lo;
  double hi = sx.hi;
  switch (op.kind()) {
    case BinaryOp::Kind::Sum:
      lo = std::max(sx.lo, s - sy.hi);
      hi = std::min(sx.hi, s - sy.lo);
      break;
    case BinaryOp::Kind::Product:
      lo = std::max(sx.lo, s / sy.hi);
      hi = (sy.lo > 0.0) ? std::min(sx.hi, s / sy.lo) : sx.hi;
      break;
    case BinaryOp::Kind::Custom:
      break;
  }

  if (std::isinf(hi)) {
    curve.cdf_space = true;
    curve.lo = fx.cdf(lo);
    if (lo <= 0.0 && op.kind() != BinaryOp::Kind::Sum) {
      curve.lo = std::max(curve.lo, kCdfSpaceEpsilon);
    }
    curve.hi = std::min(fx.cdf(hi), 1.0 - kCdfSpaceEpsilon);
  } else {
    curve.lo = lo;
    curve.hi = hi;
  }
  if (curve.lo > curve.hi) curve.hi = curve.lo;
  return curve;
}

enum class Sense { Maximize, Minimize };

template <class Objective>
LevelOptimum optimize_on_curve(const Marginal& fx, const Marginal& fy, const BinaryOp& op, double s,
                               const Tolerance& tol, int grid_n, Sense sense, Objective objective) {
  const LevelCurve curve = level_curve(fx, fy, op, s);
  if (curve.empty) return {curve.empty_value, kNoPoint};

  const auto point_at = [&](double t) {
    const double x = curve.cdf_space ? fx.quantile(t) : t;
    return Point{x, op.solve_y(x, s)};
  };
  const auto value_at = [&](double t) {
    const Point p = point_at(t);
    return objective(fx.cdf(p.x), fy.cdf(p.y));
  };

  const ScalarOptimum best = (sense == Sense::Maximize)
                                 ? maximize_scalar(value_at, curve.lo, curve.hi, tol, grid_n)
                                 : minimize_scalar(value_at, curve.lo, curve.hi, tol, grid_n);
  return {best.value, point_at(best.arg)};
}

}  // namespace

BinaryOp::BinaryOp(Kind kind, Function f, Solver solve, std::string name)
    : kind_(kind), f_(std::move(f)), solve_(std::move(solve)), name_(std::move(name)) {}

BinaryOp BinaryOp::sum() {
  return BinaryOp(
      Kind::Sum, [](double x, double y) { return x + y; },
      [](double x, double s) { return std::max(s - x, 0.0); }, "sum");
}

BinaryOp BinaryOp::product() {
  return BinaryOp(
      Kind::Product, [](double x, double y) { return x * y; },
      [](double x, double s) {
        if (s <= 0.0) return 0.0;
        return (x > 0.0) ? s / x : kInf;
      },
      "product");
}

BinaryOp BinaryOp::custom(Function f, Solver solve_y, std::string name) {
  return BinaryOp(Kind::Custom, std::move(f), std::move(solve_y), std::move(name));
}

double BinaryOp::apply(double x, double y) const { return f_(x, y); }

double BinaryOp::solve_y(double x, double s) const { return solve_(x, s); }

LevelOptimum tau_bound(const Copula& c, const Marginal& fx, const Marginal& fy, const BinaryOp& op,
                       double s, const Tolerance& tol, int grid_n) {
  return optimize_on_curve(fx, fy, op, s, tol, grid_n, Sense::Maximize,
                           [&c](double a, double b) { return c.eval(a, b); });
}

LevelOptimum phi_bound(const Copula& c, const Marginal& fx, const Marginal& fy, const BinaryOp& op,
                       double s, const Tolerance& tol, int grid_n) {
  return optimize_on_curve(fx, fy, op, s, tol, grid_n, Sense::Minimize,
                           [&c](double a, double b) { return c.dual(a, b); });
}

LevelOptimum tau_lower(const Marginal& fx, const Marginal& fy, const BinaryOp& op, double s,
                       const Tolerance& tol, int grid_n) {
  return optimize_on_curve(fx, fy, op, s, tol, grid_n, Sense::Maximize,
                           [](double a, double b) { return std::max(a + b - 1.0, 0.0); });
}

LevelOptimum phi_upper(const Marginal& fx, const Marginal& fy, const BinaryOp& op, double s,
                       const Tolerance& tol, int grid_n) {
  return optimize_on_curve(fx, fy, op, s, tol, grid_n, Sense::Minimize,
                           [](double a, double b) { return std::min(a + b, 1.0); });
}

BoundResult numerical_bounds(const Marginal& fx, const Marginal& fy, const BinaryOp& op, double s,
                             const Tolerance& tol, int grid_n) {
  const LevelOptimum lower = tau_lower(fx, fy, op, s, tol, grid_n);
  const LevelOptimum upper = phi_upper(fx, fy, op, s, tol, grid_n);
  return {s, lower.value, upper.value, lower.argpoint, upper.argpoint, BoundMethod::Numerical};
}

BoundResult closed_form_sum_uniform(const Marginal& fx, const Marginal& fy, double s) {
  if (!fx.is_uniform() || !fy.is_uniform()) {
    throw TypeMismatch("closed_form_sum_uniform requires uniform marginals");
  }
  const Uniform& ux = fx.as_uniform();
  const Uniform& uy = fy.as_uniform();
  const double cross = std::min(ux.min + uy.max, uy.min + ux.max);
  const double cross_hi = std::max(ux.min + uy.max, uy.min + ux.max);
  const auto ramp = [s](double a, double b) { return std::clamp((s - a) / (b - a), 0.0, 1.0); };

  BoundResult r{s, ramp(cross, ux.max + uy.max), ramp(ux.min + uy.min, cross_hi),
                kNoPoint, kNoPoint, BoundMethod::ClosedForm};

  // The objective is linear along x + y = s, so both optima sit at segment ends.
  const double a = std::max(ux.min, s - uy.max);
  const double b = std::min(ux.max, s - uy.min);
  if (a <= b) {
    const auto mass = [&](double x) { return fx.cdf(x) + fy.cdf(s - x); };
    const Point pa{a, s - a};
    const Point pb{b, s - b};
    r.lower_argpoint = (mass(a) >= mass(b)) ? pa : pb;
    r.upper_argpoint = (mass(a) <= mass(b)) ? pa : pb;
  }
  return r;
}

BoundResult closed_form_sum_exponential(const Marginal& fx, const Marginal& fy, double s) {
  if (!fx.is_exponential() || !fy.is_exponential()) {
    throw TypeMismatch("closed_form_sum_exponential requires exponential marginals");
  }
  const double scale_x = 1.0 / fx.as_exponential().rate;
  const double scale_y = 1.0 / fy.as_exponential().rate;
  const double total = scale_x + scale_y;

  BoundResult r{s, 0.0, 0.0, kNoPoint, kNoPoint, BoundMethod::ClosedForm};
  if (s < 0.0) return r;

  const double shift =
      total * std::log(total) - scale_y * std::log(scale_y) - scale_x * std::log(scale_x);
  r.lower = std::max(0.0, -std::expm1(-(s - shift) / total));
  const double x_star = std::clamp(
      (s / scale_y + std::log(scale_y / scale_x)) * scale_x * scale_y / total, 0.0, s);
  r.lower_argpoint = {x_star, s - x_star};

  const double fx_s = fx.cdf(s);
  const double fy_s = fy.cdf(s);
  r.upper = std::min(fx_s, fy_s);
  r.upper_argpoint = (fx_s <= fy_s) ? Point{s, 0.0} : Point{0.0, s};
  return r;
}

bool has_closed_form(const Marginal& fx, const Marginal& fy, const BinaryOp& op) {
  if (op.kind() != BinaryOp::Kind::Sum) return false;
  return (fx.is_uniform() && fy.is_uniform()) || (fx.is_exponential() && fy.is_exponential());
}

BoundResult compute_bounds(const Marginal& fx, const Marginal& fy, const BinaryOp& op, double s,
                           const Tolerance& tol, int grid_n) {
  if (has_closed_form(fx, fy, op)) {
    return fx.is_uniform() ? closed_form_sum_uniform(fx, fy, s)
                           : closed_form_sum_exponential(fx, fy, s);
  }
  return numerical_bounds(fx, fy, op, s, tol, grid_n);
}

}  // namespace copula_outage
