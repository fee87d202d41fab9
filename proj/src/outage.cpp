#include "copula_outage/outage.hpp"

#include "copula_outage/errors.hpp"
#include "copula_outage/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace copula_outage {

namespace {

void require_shapes(double lx, double ly) {
  if (!(lx > 0.0) || !(ly > 0.0) || !std::isfinite(lx) || !std::isfinite(ly)) {
    throw DomainError("shape parameters must be positive and finite");
  }
}

void require_rates(double r1, double r2) {
  if (!(r1 >= 0.0) || !(r2 >= 0.0)) throw DomainError("rates must be non-negative");
}

double exp_cdf(double rate, double x) { return (x <= 0.0) ? 0.0 : -std::expm1(-rate * x); }

// 2^r - 1 without cancellation for small r.
double pow2_minus_one(double r) { return std::expm1(r * std::numbers::ln2); }

}  // namespace

double RateConfig::threshold() const { return pow2_minus_one(rate) / snr; }

void RateConfig::validate() const {
  if (!(rate >= 0.0) || !std::isfinite(rate)) throw DomainError("rate must be non-negative");
  if (!(snr > 0.0) || !std::isfinite(snr)) throw DomainError("snr must be positive");
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

MacThresholds MacThresholds::from_rates(double r1, double r2) {
  require_rates(r1, r2);
  return {pow2_minus_one(r1), pow2_minus_one(r2), pow2_minus_one(r1 + r2)};
}

BoundResult p2p_outage_bounds(double lx, double ly, const RateConfig& cfg) {
  require_shapes(lx, ly);
  cfg.validate();
  return closed_form_sum_exponential(Marginal::exponential(lx), Marginal::exponential(ly),
                                     cfg.threshold());
}

double mac_outage_lower(double lx, double ly, double r1, double r2) {
  require_shapes(lx, ly);
  const MacThresholds t = MacThresholds::from_rates(r1, r2);

  const double y_opt = (lx * t.s + std::log(ly / lx)) / (lx + ly);
  double y_star = y_opt;
  if (y_opt <= t.beta) {
    y_star = t.beta;
  } else if (y_opt >= t.s - t.alpha) {
    y_star = t.s - t.alpha;
  }
  const double g =
      std::max(exp_cdf(lx, t.s - y_star) + exp_cdf(ly, y_star) - 1.0, 0.0);
  return std::max({exp_cdf(lx, t.alpha), g, exp_cdf(ly, t.beta)});
}

double mac_outage_upper(double lx, double ly, double r1, double r2) {
  require_shapes(lx, ly);
  const MacThresholds t = MacThresholds::from_rates(r1, r2);
  return std::min({exp_cdf(lx, t.alpha) + exp_cdf(ly, t.s - t.alpha),
                   exp_cdf(lx, t.s - t.beta) + exp_cdf(ly, t.beta), 1.0});
}

BoundResult mac_outage_bounds_numerical(const Marginal& fx, const Marginal& fy, double r1,
                                        double r2, const Tolerance& tol, int grid_n) {
  const MacThresholds t = MacThresholds::from_rates(r1, r2);
  const double x_lo = t.alpha;
  const double x_hi = t.s - t.beta;

  const auto lower_obj = [&](double x) {
    return std::max(fx.cdf(x) + fy.cdf(t.s - x) - 1.0, 0.0);
  };
  const auto upper_obj = [&](double x) { return std::min(fx.cdf(x) + fy.cdf(t.s - x), 1.0); };

  BoundResult r{t.s, 0.0, 0.0, {}, {}, BoundMethod::Numerical};

  // Vertical piece x = alpha, y >= s - alpha: sup is F_X(alpha) as y -> inf.
  // Horizontal piece y = beta, x >= s - beta: sup is F_Y(beta).
  const ScalarOptimum mid = maximize_scalar(lower_obj, x_lo, x_hi, tol, grid_n);
  r.lower = mid.value;
  r.lower_argpoint = {mid.arg, t.s - mid.arg};
  const double fx_alpha = fx.cdf(t.alpha);
  const double fy_beta = fy.cdf(t.beta);
  if (fx_alpha > r.lower) {
    r.lower = fx_alpha;
    r.lower_argpoint = {t.alpha, std::numeric_limits<double>::infinity()};
  }
  if (fy_beta > r.lower) {
    r.lower = fy_beta;
    r.lower_argpoint = {std::numeric_limits<double>::infinity(), t.beta};
  }

  // The axis-parallel pieces attain their infimum at the corners, which are
  // the ends of the middle piece.
  const ScalarOptimum low = minimize_scalar(upper_obj, x_lo, x_hi, tol, grid_n);
  r.upper = low.value;
  r.upper_argpoint = {low.arg, t.s - low.arg};
  return r;
}

double ris_independent_outage(double lx, double ly, const RateConfig& cfg) {
  require_shapes(lx, ly);
  cfg.validate();
  const double s = cfg.threshold();
  if (s == 0.0) return 0.0;
  const double z = 2.0 * std::sqrt(lx * ly * s);
  return 1.0 - z * bessel_k1(z);
}

BoundResult ris_outage_bounds(double lx, double ly, const RateConfig& cfg, const Tolerance& tol) {
  require_shapes(lx, ly);
  cfg.validate();
  return numerical_bounds(Marginal::exponential(lx), Marginal::exponential(ly),
                          BinaryOp::product(), cfg.threshold(), tol);
}

MonteCarloEstimate correlated_rayleigh_outage_mc(const CorrelationModel& model,
                                                 const RateConfig& cfg, std::uint64_t n,
                                                 RandomSource& rng) {
  if (!(model.rho >= 0.0 && model.rho <= 1.0)) throw DomainError("rho must lie in [0, 1]");
  if (n < 10000) throw DomainError("Monte Carlo needs at least 10^4 samples");
  cfg.validate();

  const double s = cfg.threshold();
  const double own = std::sqrt(1.0 - model.rho);
  const double shared = std::sqrt(model.rho);
  const auto trial = [=](RandomSource& r) {
    const double x1 = r.next_gaussian(0.0, 0.5);
    const double y1 = r.next_gaussian(0.0, 0.5);
    const double x2 = r.next_gaussian(0.0, 0.5);
    const double y2 = r.next_gaussian(0.0, 0.5);
    const double x0 = r.next_gaussian(0.0, 0.5);
    const double y0 = r.next_gaussian(0.0, 0.5);
    const double hx_re = own * x1 + shared * x0;
    const double hx_im = own * y1 + shared * y0;
    const double hy_re = own * x2 + shared * x0;
    const double hy_im = own * y2 + shared * y0;
    const double gain_x = hx_re * hx_re + hx_im * hx_im;
    const double gain_y = hy_re * hy_re + hy_im * hy_im;
    return gain_x + gain_y < s;
  };

  const std::uint64_t hits = kernels::parallel::count_hits(n, rng.next_u64(), trial);
  const double p = static_cast<double>(hits) / static_cast<double>(n);
  return {p, std::sqrt(p * (1.0 - p) / static_cast<double>(n)), n, hits};
}

}  // namespace copula_outage
