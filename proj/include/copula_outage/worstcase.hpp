#ifndef COPULA_OUTAGE_WORSTCASE_HPP
#define COPULA_OUTAGE_WORSTCASE_HPP

#include "copula_outage/bounds.hpp"
#include "copula_outage/marginals.hpp"
#include "copula_outage/numerics.hpp"

#include <cstdint>

namespace copula_outage {

/// Quantile arguments are capped here so unbounded marginals never yield +inf.
inline constexpr double kMaxSampleProbability = 1.0 - 1e-12;

/// Joint distribution with marginals fx, fy whose P(L(X, Y) < s) equals the
/// lower (or upper) bound at the single threshold s.
///
/// Built from one uniform W: a comonotone piece and a countermonotone piece
/// split at the bound value. For the lower bound t, W <= t maps to
/// (Q_X(W), Q_Y(W)) below the level curve and W > t to (Q_X(W), Q_Y(1 + t - W))
/// on or above it. For the upper bound m, W <= m maps to (Q_X(W), Q_Y(m - W))
/// below the curve and W > m to (Q_X(W), Q_Y(W)) above it.
struct AttainingJoint {
  enum class Target { LowerBound, UpperBound };

  Marginal fx;
  Marginal fy;
  BinaryOp op;
  double threshold;
  Target target;
  double probability;  // t for the lower bound, m for the upper bound
  double split_u;      // F_X at the bound's argpoint (NaN if the curve misses the support)

  /// Target t = tau_lower(fx, fy, op, s).
  static AttainingJoint lower(const Marginal& fx, const Marginal& fy, const BinaryOp& op, double s,
                              const Tolerance& tol = {});
  /// Target m = phi_upper(fx, fy, op, s).
  static AttainingJoint upper(const Marginal& fx, const Marginal& fy, const BinaryOp& op, double s,
                              const Tolerance& tol = {});
};

/// Throws DomainError if j does not target the lower bound.
Point sample_lower_attaining(const AttainingJoint& j, RandomSource& rng);
/// Throws DomainError if j does not target the upper bound.
Point sample_upper_attaining(const AttainingJoint& j, RandomSource& rng);
Point sample_attaining(const AttainingJoint& j, RandomSource& rng);

struct AuditReport {
  std::uint64_t n;
  double sup_deviation_x;  // Kolmogorov-Smirnov distance to fx
  double sup_deviation_y;
};

/// Empirical marginal CDFs of n construction samples against fx and fy.
/// Throws DomainError for n < 10^4.
AuditReport marginal_audit(const AttainingJoint& j, std::uint64_t n, RandomSource& rng);

struct AttainmentAudit {
  std::uint64_t n;
  std::uint64_t hits;
  double empirical;  // fraction of samples with L(x, y) < s
  double target;
  double sigma;      // binomial standard deviation at the target
  double deviation;  // |empirical - target|
};

/// Measures P(L(X, Y) < s) under the construction with n samples. Throws
/// ConstructionUnverified when the deviation exceeds k_sigma * sigma + 1/n.
AttainmentAudit audit_attainment(const AttainingJoint& j, std::uint64_t n, RandomSource& rng,
                                 double k_sigma = 4.0);

}  // namespace copula_outage

#endif
