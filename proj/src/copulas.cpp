#include "copula_outage/copulas.hpp"

#include "copula_outage/errors.hpp"

#include <algorithm>
#include <cmath>

namespace copula_outage {

namespace {

void require_unit(double a, double b) {
  if (!(a >= 0.0 && a <= 1.0 && b >= 0.0 && b <= 1.0)) {
    throw DomainError("copula arguments must lie in [0, 1]");
  }
}

}  // namespace

double Copula::eval(double a, double b) const {
  require_unit(a, b);
  switch (kind_) {
    case Kind::W:
      return std::max(a + b - 1.0, 0.0);
    case Kind::M:
      return std::min(a, b);
    case Kind::Pi:
      return a * b;
    case Kind::Custom:
      return f_(a, b);
  }
  return 0.0;
}

double Copula::dual(double a, double b) const { return a + b - eval(a, b); }

double sklar_joint_cdf(const Copula& c, const Marginal& fx, const Marginal& fy, double x,
                       double y) {
  return c.eval(fx.cdf(x), fy.cdf(y));
}

double ValidityReport::worst() const {
  double w = 0.0;
  for (const auto& v : violations) w = std::max(w, v.magnitude);
  return w;
}

ValidityReport check_copula(const Copula& c, int grid_n, double slack) {
  if (grid_n < 2) throw DomainError("check_copula: grid_n must be >= 2");
  ValidityReport report;
  report.grid_n = grid_n;

  const auto node = [grid_n](int i) {
    return (i == grid_n - 1) ? 1.0 : static_cast<double>(i) / static_cast<double>(grid_n - 1);
  };

  std::vector<double> values(static_cast<std::size_t>(grid_n) * grid_n);
  const auto at = [&](int i, int j) -> double& {
    return values[static_cast<std::size_t>(i) * grid_n + j];
  };
  for (int i = 0; i < grid_n; ++i) {
    for (int j = 0; j < grid_n; ++j) {
      const double a = node(i);
      const double b = node(j);
      const double v = c.eval(a, b);
      at(i, j) = v;
      if (!(v >= -slack && v <= 1.0 + slack)) {
        report.violations.push_back({CopulaViolation::Kind::Range, a, b,
                                     std::isnan(v) ? 1.0 : std::max(-v, v - 1.0)});
      }
    }
  }

  // C(a, 0) = 0 = C(0, b), C(a, 1) = a, C(1, b) = b.
  for (int i = 0; i < grid_n; ++i) {
    const double t = node(i);
    const auto edge = [&](double a, double b, double got, double want) {
      const double dev = std::abs(got - want);
      if (!(dev <= slack)) {
        report.violations.push_back(
            {CopulaViolation::Kind::Boundary, a, b, std::isnan(dev) ? 1.0 : dev});
      }
    };
    edge(t, 0.0, at(i, 0), 0.0);
    edge(0.0, t, at(0, i), 0.0);
    edge(t, 1.0, at(i, grid_n - 1), t);
    edge(1.0, t, at(grid_n - 1, i), t);
  }

  for (int i = 0; i + 1 < grid_n; ++i) {
    for (int j = 0; j + 1 < grid_n; ++j) {
      const double volume = at(i + 1, j + 1) - at(i + 1, j) - at(i, j + 1) + at(i, j);
      if (!(volume >= -slack)) {
        report.violations.push_back(
            {CopulaViolation::Kind::Rectangle, node(i), node(j), std::isnan(volume) ? 1.0 : -volume});
      }
    }
  }
  return report;
}

std::pair<double, double> sample_copula(const Copula& c, RandomSource& rng) {
  const double u = rng.next_uniform();
  switch (c.kind()) {
    case Copula::Kind::W:
      return {u, 1.0 - u};
    case Copula::Kind::M:
      return {u, u};
    case Copula::Kind::Pi:
      return {u, rng.next_uniform()};
    case Copula::Kind::Custom:
      break;
  }
  throw DomainError("sample_copula: custom copulas cannot be sampled");
}

}  // namespace copula_outage
