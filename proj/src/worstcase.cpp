#include "copula_outage/worstcase.hpp"

#include "copula_outage/errors.hpp"
#include "copula_outage/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <sstream>
#include <vector>

namespace copula_outage {

namespace {

double capped_quantile(const Marginal& m, double p) {
  return m.quantile(std::clamp(p, 0.0, kMaxSampleProbability));
}

double split_from(const Marginal& fx, const LevelOptimum& opt) {
  if (std::isnan(opt.argpoint.x)) return std::numeric_limits<double>::quiet_NaN();
  return fx.cdf(opt.argpoint.x);
}

// Two-sided Kolmogorov-Smirnov statistic of a sorted sample.
double ks_distance(std::vector<double>& sample, const Marginal& m) {
  std::sort(sample.begin(), sample.end());
  const double n = static_cast<double>(sample.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const double f = m.cdf(sample[i]);
    d = std::max({d, static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n});
  }
  return d;
}

}  // namespace

AttainingJoint AttainingJoint::lower(const Marginal& fx, const Marginal& fy, const BinaryOp& op,
                                     double s, const Tolerance& tol) {
  const LevelOptimum opt = tau_lower(fx, fy, op, s, tol);
  return {fx, fy, op, s, Target::LowerBound, opt.value, split_from(fx, opt)};
}

AttainingJoint AttainingJoint::upper(const Marginal& fx, const Marginal& fy, const BinaryOp& op,
                                     double s, const Tolerance& tol) {
  const LevelOptimum opt = phi_upper(fx, fy, op, s, tol);
  return {fx, fy, op, s, Target::UpperBound, opt.value, split_from(fx, opt)};
}

Point sample_lower_attaining(const AttainingJoint& j, RandomSource& rng) {
  if (j.target != AttainingJoint::Target::LowerBound) {
    throw DomainError("sample_lower_attaining: joint targets the upper bound");
  }
  const double w = rng.next_uniform();
  const double t = j.probability;
  const double v = (w <= t) ? w : 1.0 + t - w;
  return {capped_quantile(j.fx, w), capped_quantile(j.fy, v)};
}

Point sample_upper_attaining(const AttainingJoint& j, RandomSource& rng) {
  if (j.target != AttainingJoint::Target::UpperBound) {
    throw DomainError("sample_upper_attaining: joint targets the lower bound");
  }
  const double w = rng.next_uniform();
  const double m = j.probability;
  const double v = (w <= m) ? m - w : w;
  return {capped_quantile(j.fx, w), capped_quantile(j.fy, v)};
}

Point sample_attaining(const AttainingJoint& j, RandomSource& rng) {
  return (j.target == AttainingJoint::Target::LowerBound) ? sample_lower_attaining(j, rng)
                                                          : sample_upper_attaining(j, rng);
}

AuditReport marginal_audit(const AttainingJoint& j, std::uint64_t n, RandomSource& rng) {
  if (n < 10000) throw DomainError("marginal_audit needs at least 10^4 samples");
  std::vector<Point> pairs(n);
  kernels::parallel::fill(std::span<Point>(pairs), rng.next_u64(),
                          [&j](RandomSource& r) { return sample_attaining(j, r); });
  std::vector<double> xs(n);
  std::vector<double> ys(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    xs[i] = pairs[i].x;
    ys[i] = pairs[i].y;
  }
  return {n, ks_distance(xs, j.fx), ks_distance(ys, j.fy)};
}

AttainmentAudit audit_attainment(const AttainingJoint& j, std::uint64_t n, RandomSource& rng,
                                 double k_sigma) {
  if (n == 0) throw DomainError("audit_attainment needs samples");
  const double s = j.threshold;
  const std::uint64_t hits =
      kernels::parallel::count_hits(n, rng.next_u64(), [&j, s](RandomSource& r) {
        const Point p = sample_attaining(j, r);
        return j.op.apply(p.x, p.y) < s;
      });
  const double nd = static_cast<double>(n);
  AttainmentAudit a{n, hits, static_cast<double>(hits) / nd, j.probability, 0.0, 0.0};
  a.sigma = std::sqrt(std::max(a.target * (1.0 - a.target), 0.0) / nd);
  a.deviation = std::abs(a.empirical - a.target);
  if (a.deviation > k_sigma * a.sigma + 1.0 / nd) {
    std::ostringstream os;
    os << "attaining construction at s=" << s << " gives P(L<s)=" << a.empirical
       << ", bound is " << a.target << " (sigma " << a.sigma << ")";
    throw ConstructionUnverified(os.str());
  }
  return a;
}

}  // namespace copula_outage
