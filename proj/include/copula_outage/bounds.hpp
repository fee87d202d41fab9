#ifndef COPULA_OUTAGE_BOUNDS_HPP
#define COPULA_OUTAGE_BOUNDS_HPP

#include "copula_outage/copulas.hpp"
#include "copula_outage/marginals.hpp"
#include "copula_outage/numerics.hpp"

#include <functional>
#include <string>

namespace copula_outage {

/// Coarse grid size used before golden-section refinement along a level curve.
inline constexpr int kDefaultLevelGrid = 257;

/// Opening of the CDF-space interval at x = 0 (product) and x = +inf.
inline constexpr double kCdfSpaceEpsilon = 1e-12;

struct Point {
  double x;
  double y;
};

/// Continuous binary operation L(x, y), non-decreasing in each argument.
///
/// solve_y(x, s) returns the y >= 0 with L(x, y) = s. When L(x, 0) >= s it
/// returns 0, and when L(x, y) < s for every y it returns +inf.
class BinaryOp {
public:
  enum class Kind { Sum, Product, Custom };
  using Function = std::function<double(double, double)>;
  using Solver = std::function<double(double, double)>;

  static BinaryOp sum();
  static BinaryOp product();
  static BinaryOp custom(Function f, Solver solve_y, std::string name = "custom");

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }

  double apply(double x, double y) const;
  double solve_y(double x, double s) const;

private:
  BinaryOp(Kind kind, Function f, Solver solve, std::string name);

  Kind kind_;
  Function f_;
  Solver solve_;
  std::string name_;
};

/// Optimal value of a bound along the level curve L(x, y) = s and where it is
/// attained. The argpoint is NaN when the level curve misses the support.
struct LevelOptimum {
  double value;
  Point argpoint;
};

enum class BoundMethod { ClosedForm, Numerical };

/// Pointwise bounds lower <= P(L(X, Y) < s) <= upper over every dependence
/// structure with the given marginals.
struct BoundResult {
  double threshold;
  double lower;
  double upper;
  Point lower_argpoint;
  Point upper_argpoint;
  BoundMethod method;
};

/// sup over L(x, y) = s of C(F_X(x), F_Y(y)).
LevelOptimum tau_bound(const Copula& c, const Marginal& fx, const Marginal& fy, const BinaryOp& op,
                       double s, const Tolerance& tol = {}, int grid_n = kDefaultLevelGrid);

/// inf over L(x, y) = s of the dual copula a + b - C(a, b).
LevelOptimum phi_bound(const Copula& c, const Marginal& fx, const Marginal& fy, const BinaryOp& op,
                       double s, const Tolerance& tol = {}, int grid_n = kDefaultLevelGrid);

/// Lower bound on P(L(X, Y) < s): tau_bound with C = W.
LevelOptimum tau_lower(const Marginal& fx, const Marginal& fy, const BinaryOp& op, double s,
                       const Tolerance& tol = {}, int grid_n = kDefaultLevelGrid);

/// Upper bound on P(L(X, Y) < s): phi_bound with C = W, i.e. min(F_X + F_Y, 1).
LevelOptimum phi_upper(const Marginal& fx, const Marginal& fy, const BinaryOp& op, double s,
                       const Tolerance& tol = {}, int grid_n = kDefaultLevelGrid);

/// Both bounds through the generic level-curve optimizer.
BoundResult numerical_bounds(const Marginal& fx, const Marginal& fy, const BinaryOp& op, double s,
                             const Tolerance& tol = {}, int grid_n = kDefaultLevelGrid);

/// X + Y with uniform marginals. The lower bound is the uniform CDF on
/// [min(x_min + y_max, y_min + x_max), x_max + y_max], the upper bound the
/// uniform CDF on [x_min + y_min, max(x_min + y_max, y_min + x_max)].
/// Throws TypeMismatch unless both marginals are uniform.
BoundResult closed_form_sum_uniform(const Marginal& fx, const Marginal& fy, double s);

/// X + Y with exponential marginals (scales a = 1/lambda_x, b = 1/lambda_y).
///
/// Lower: shifted exponential 1 - exp(-(s - k) / (a + b)), clipped at zero,
/// with k = (a + b) ln(a + b) - b ln b - a ln a. The maximizer on x + y = s is
/// x* = (s / b + ln(b / a)) a b / (a + b).
/// Upper: min(F_X(s), F_Y(s)), an exponential with rate min(lambda_x, lambda_y).
/// Throws TypeMismatch unless both marginals are exponential.
BoundResult closed_form_sum_exponential(const Marginal& fx, const Marginal& fy, double s);

bool has_closed_form(const Marginal& fx, const Marginal& fy, const BinaryOp& op);

/// Closed form when one exists for (fx, fy, op), otherwise numerical_bounds.
BoundResult compute_bounds(const Marginal& fx, const Marginal& fy, const BinaryOp& op, double s,
                           const Tolerance& tol = {}, int grid_n = kDefaultLevelGrid);

}  // namespace copula_outage

#endif
