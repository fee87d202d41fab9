#include "copula_outage/errors.hpp"
#include "copula_outage/numerics.hpp"

#include <cmath>
#include <numbers>

namespace copula_outage {

namespace detail {

// K1(x) = 1/x + ln(x/2) I1(x) - (x/4) sum_k [psi(k+1) + psi(k+2)] (x^2/4)^k / (k! (k+1)!)
double bessel_k1_series(double x) {
  const double y = 0.25 * x * x;
  double coeff = 1.0;  // y^k / (k! (k+1)!)
  double psi_k1 = -std::numbers::egamma_v<double>;  // psi(k+1)
  double psi_k2 = psi_k1 + 1.0;                      // psi(k+2)
  double i1_sum = 0.0;
  double psi_sum = 0.0;
  for (int k = 0; k < 60; ++k) {
    i1_sum += coeff;
    const double term = (psi_k1 + psi_k2) * coeff;
    psi_sum += term;
    if (coeff < 1e-18 * i1_sum && std::abs(term) < 1e-18 * std::abs(psi_sum)) break;
    const double kp1 = static_cast<double>(k + 1);
    coeff *= y / (kp1 * (kp1 + 1.0));
    psi_k1 += 1.0 / kp1;
    psi_k2 += 1.0 / (kp1 + 1.0);
  }
  const double i1 = 0.5 * x * i1_sum;
  return 1.0 / x + std::log(0.5 * x) * i1 - 0.25 * x * psi_sum;
}

// Steed's CF2 (Temme's normalization) for K0 and K1 at order mu = 0, then
// K1 = K0 (x + 1/2 - h) / x. Converges for any x > 0, fast for x >= 2.
double bessel_k1_continued_fraction(double x) {
  constexpr double eps = 1e-17;
  double b = 2.0 * (1.0 + x);
  double d = 1.0 / b;
  double h = d;
  double delh = d;
  double q1 = 0.0;
  double q2 = 1.0;
  const double a1 = 0.25;
  double q = a1;
  double c = a1;
  double a = -a1;
  double s = 1.0 + q * delh;
  for (int i = 2; i < 100000; ++i) {
    a -= 2.0 * static_cast<double>(i - 1);
    c = -a * c / static_cast<double>(i);
    const double qnew = (q1 - b * q2) / a;
    q1 = q2;
    q2 = qnew;
    q += c * qnew;
    b += 2.0;
    d = 1.0 / (b + a * d);
    delh = (b * d - 1.0) * delh;
    h += delh;
    const double dels = q * delh;
    s += dels;
    if (std::abs(dels / s) < eps) break;
  }
  h *= a1;
  const double k0 = std::sqrt(std::numbers::pi / (2.0 * x)) * std::exp(-x) / s;
  return k0 * (x + 0.5 - h) / x;
}

}  // namespace detail

double bessel_k1(double x) {
  if (!(x > 0.0)) throw DomainError("bessel_k1: argument must be positive");
  if (std::isinf(x)) return 0.0;
  return (x <= 2.0) ? detail::bessel_k1_series(x) : detail::bessel_k1_continued_fraction(x);
}

}  // namespace copula_outage
