#ifndef COPULA_OUTAGE_OUTAGE_HPP
#define COPULA_OUTAGE_OUTAGE_HPP

#include "copula_outage/bounds.hpp"
#include "copula_outage/marginals.hpp"
#include "copula_outage/numerics.hpp"

#include <cstdint>

namespace copula_outage {

/// Transmission rate (bits per channel use) and linear SNR.
struct RateConfig {
  double rate;
  double snr;

  /// Outage threshold on the channel gain: (2^R - 1) / snr.
  double threshold() const;
  /// Throws DomainError unless rate >= 0 and snr > 0.
  void validate() const;
};

double db_to_linear(double db);

/// Rate-region thresholds of the two-user MAC.
struct MacThresholds {
  double alpha;  // 2^R1 - 1
  double beta;   // 2^R2 - 1
  double s;      // 2^(R1 + R2) - 1 = alpha + beta + alpha * beta

  static MacThresholds from_rates(double r1, double r2);
};

/// Linear correlation model h_i = (sqrt(1-rho) x_i + sqrt(rho) x_0) + j (sqrt(1-rho) y_i + sqrt(rho) y_0)
/// with all components N(0, 1/2).
struct CorrelationModel {
  double rho;
};

struct MonteCarloEstimate {
  double estimate;
  double std_error;
  std::uint64_t samples;
  std::uint64_t hits;
};

/// Point-to-point outage P(X + Y < s) over Rayleigh links with exponential
/// gains X ~ Exp(lx), Y ~ Exp(ly).
BoundResult p2p_outage_bounds(double lx, double ly, const RateConfig& cfg);

/// MAC outage lower bound for exponential gains.
///
/// Maximum of F_X(alpha), F_Y(beta) and g(s - y*, y*) with
/// g(x, y) = max(F_X(x) + F_Y(y) - 1, 0) and y* the stationary point
/// y_opt = (lx s + ln(ly / lx)) / (lx + ly) clamped to [beta, s - alpha].
/// Throws DomainError on negative rates or non-positive shape parameters.
double mac_outage_lower(double lx, double ly, double r1, double r2);

/// min(F_X(alpha) + F_Y(s - alpha), F_X(s - beta) + F_Y(beta), 1).
double mac_outage_upper(double lx, double ly, double r1, double r2);

/// MAC bounds for arbitrary marginals: the two axis-parallel pieces of the
/// outage boundary are handled in closed form, the x + y = s piece by the
/// level-curve optimizer.
BoundResult mac_outage_bounds_numerical(const Marginal& fx, const Marginal& fy, double r1,
                                        double r2, const Tolerance& tol = {},
                                        int grid_n = kDefaultLevelGrid);

/// Outage of the single-element RIS channel log2(1 + snr X Y) with independent
/// gains: 1 - z K1(z), z = 2 sqrt(lx ly s).
double ris_independent_outage(double lx, double ly, const RateConfig& cfg);

/// RIS outage bounds: level-curve optimization over x y = s.
BoundResult ris_outage_bounds(double lx, double ly, const RateConfig& cfg,
                              const Tolerance& tol = {});

/// Monte Carlo estimate of P(|h_x|^2 + |h_y|^2 < s) under the correlation
/// model, with binomial standard error. The caller's stream seeds the sample
/// blocks, so the estimate does not depend on the number of threads.
/// Throws DomainError if rho is outside [0, 1] or n < 10^4.
MonteCarloEstimate correlated_rayleigh_outage_mc(const CorrelationModel& model,
                                                 const RateConfig& cfg, std::uint64_t n,
                                                 RandomSource& rng);

}  // namespace copula_outage

#endif
