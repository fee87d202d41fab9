#include "copula_outage/numerics.hpp"

#include "copula_outage/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace copula_outage {

void Tolerance::validate() const {
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0) || max_iter < 1) {
    throw DomainError("tolerance requires abs_tol > 0, rel_tol > 0, max_iter >= 1");
  }
}

double find_root(const ScalarFunction& f, double lo, double hi, const Tolerance& tol) {
  tol.validate();
  double a = lo;
  double b = hi;
  double fa = f(a);
  double fb = f(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if ((fa > 0.0) == (fb > 0.0)) {
    throw NoBracket("find_root: f(" + std::to_string(lo) + ") and f(" + std::to_string(hi) +
                    ") have the same sign");
  }

  // Brent (zeroin): b is the current best estimate, a the previous one,
  // c the contrapoint keeping the root bracketed between b and c.
  double c = a;
  double fc = fa;
  double d = b - a;
  double e = d;
  for (int iter = 0; iter < tol.max_iter; ++iter) {
    if ((fb > 0.0) == (fc > 0.0)) {
      c = a;
      fc = fa;
      d = b - a;
      e = d;
    }
    if (std::abs(fc) < std::abs(fb)) {
      a = b;
      b = c;
      c = a;
      fa = fb;
      fb = fc;
      fc = fa;
    }
    const double tol1 = 0.5 * (tol.abs_tol + tol.rel_tol * std::abs(b));
    const double half = 0.5 * (c - b);
    if (std::abs(half) <= tol1 || fb == 0.0) return b;

    if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
      double p;
      double q;
      const double s = fb / fa;
      if (a == c) {
        p = 2.0 * half * s;
        q = 1.0 - s;
      } else {
        const double qa = fa / fc;
        const double r = fb / fc;
        p = s * (2.0 * half * qa * (qa - r) - (b - a) * (r - 1.0));
        q = (qa - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) {
        q = -q;
      } else {
        p = -p;
      }
      if (2.0 * p < std::min(3.0 * half * q - std::abs(tol1 * q), std::abs(e * q))) {
        e = d;
        d = p / q;
      } else {
        d = half;
        e = d;
      }
    } else {
      d = half;
      e = d;
    }
    a = b;
    fa = fb;
    b += (std::abs(d) > tol1) ? d : std::copysign(tol1, half);
    fb = f(b);
  }
  throw MaxIterExceeded("find_root: no convergence after " + std::to_string(tol.max_iter) +
                        " iterations");
}

namespace {

constexpr double kInvPhi = 0.6180339887498948482;  // (sqrt(5) - 1) / 2

// Golden-section search for a maximum on [a, b]. Ties shrink from both sides,
// which keeps a plateau maximum inside the bracket.
ScalarOptimum golden_section_max(const ScalarFunction& f, double a, double b,
                                 const Tolerance& tol) {
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (int iter = 0; iter < tol.max_iter; ++iter) {
    const double mid = 0.5 * (a + b);
    if (b - a <= tol.abs_tol + tol.rel_tol * std::abs(mid)) break;
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else if (fc < fd) {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    } else {
      a = c;
      b = d;
      c = b - kInvPhi * (b - a);
      d = a + kInvPhi * (b - a);
      fc = f(c);
      fd = f(d);
    }
  }
  const double mid = 0.5 * (a + b);
  ScalarOptimum best{mid, f(mid)};
  if (fc > best.value) best = {c, fc};
  if (fd > best.value) best = {d, fd};
  return best;
}

}  // namespace

ScalarOptimum maximize_scalar(const ScalarFunction& f, double lo, double hi, const Tolerance& tol,
                              int grid_n) {
  tol.validate();
  if (!(lo <= hi)) throw InvalidInterval("maximize_scalar: lo > hi");
  if (grid_n < 3) throw DomainError("maximize_scalar: grid_n must be >= 3");
  if (lo == hi) return {lo, f(lo)};

  const double step = (hi - lo) / static_cast<double>(grid_n - 1);
  int best_i = 0;
  ScalarOptimum best{lo, f(lo)};
  for (int i = 1; i < grid_n; ++i) {
    const double x = (i == grid_n - 1) ? hi : lo + step * static_cast<double>(i);
    const double v = f(x);
    // NaN values never win.
    if (v > best.value || std::isnan(best.value)) {
      best = {x, v};
      best_i = i;
    }
  }

  const double a = (best_i == 0) ? lo : lo + step * static_cast<double>(best_i - 1);
  const double b = (best_i == grid_n - 1) ? hi : lo + step * static_cast<double>(best_i + 1);
  const ScalarOptimum refined = golden_section_max(f, a, b, tol);
  return (refined.value > best.value) ? refined : best;
}

ScalarOptimum minimize_scalar(const ScalarFunction& f, double lo, double hi, const Tolerance& tol,
                              int grid_n) {
  const ScalarOptimum m =
      maximize_scalar([&f](double x) { return -f(x); }, lo, hi, tol, grid_n);
  return {m.arg, -m.value};
}

}  // namespace copula_outage
