#ifndef COPULA_OUTAGE_COPULAS_HPP
#define COPULA_OUTAGE_COPULAS_HPP

#include "copula_outage/marginals.hpp"
#include "copula_outage/numerics.hpp"

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace copula_outage {

/// Two-dimensional copula: W (countermonotone), M (comonotone), Pi
/// (independence) or a user-supplied function on the unit square.
class Copula {
public:
  enum class Kind { W, M, Pi, Custom };
  using Function = std::function<double(double, double)>;

  static Copula lower_frechet() { return Copula(Kind::W, {}, "W"); }
  static Copula upper_frechet() { return Copula(Kind::M, {}, "M"); }
  static Copula product() { return Copula(Kind::Pi, {}, "Pi"); }
  static Copula custom(Function f, std::string name = "custom") {
    return Copula(Kind::Custom, std::move(f), std::move(name));
  }

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }

  /// C(a, b). Throws DomainError if a or b is outside [0, 1].
  double eval(double a, double b) const;
  /// a + b - C(a, b).
  double dual(double a, double b) const;

private:
  Copula(Kind kind, Function f, std::string name)
      : kind_(kind), f_(std::move(f)), name_(std::move(name)) {}

  Kind kind_;
  Function f_;
  std::string name_;
};

/// H(x, y) = C(F_X(x), F_Y(y)).
double sklar_joint_cdf(const Copula& c, const Marginal& fx, const Marginal& fy, double x, double y);

struct CopulaViolation {
  enum class Kind { Boundary, Rectangle, Range };
  Kind kind;
  double a;
  double b;
  double magnitude;
};

struct ValidityReport {
  int grid_n = 0;
  std::vector<CopulaViolation> violations;

  bool valid() const { return violations.empty(); }
  double worst() const;
};

/// Checks the copula axioms on a grid_n x grid_n uniform grid: boundary
/// conditions on the edges, values in [0, 1], and the rectangle inequality on
/// every pair of adjacent grid cells. grid_n >= 2.
ValidityReport check_copula(const Copula& c, int grid_n, double slack = 1e-12);

/// Draws (U, V) with joint CDF C for C in {W, M, Pi}. Throws DomainError for
/// custom copulas.
std::pair<double, double> sample_copula(const Copula& c, RandomSource& rng);

}  // namespace copula_outage

#endif
