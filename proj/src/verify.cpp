#include "copula_outage/bounds.hpp"
#include "copula_outage/cli.hpp"
#include "copula_outage/copulas.hpp"
#include "copula_outage/errors.hpp"
#include "copula_outage/numerics.hpp"
#include "copula_outage/outage.hpp"
#include "copula_outage/worstcase.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace copula_outage::cli {

namespace {

class Checklist {
public:
  explicit Checklist(std::ostream& out) : out_(out) {}

  // Passes when measured <= limit.
  void at_most(const std::string& name, double measured, double limit) {
    record(name, measured <= limit, measured, limit);
  }

  void record(const std::string& name, bool ok, double measured, double limit) {
    out_ << (ok ? "PASS " : "FAIL ") << name << " measured=" << format_number(measured)
         << " limit=" << format_number(limit) << '\n';
    if (!ok) ++failures_;
  }

  int failures() const { return failures_; }

private:
  std::ostream& out_;
  int failures_ = 0;
};

double linspace(double a, double b, int i, int n) {
  return a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
}

void check_copulas(Checklist& list, const VerifyOptions& options) {
  std::vector<Copula> all{Copula::lower_frechet(), Copula::upper_frechet(), Copula::product()};
  all.insert(all.end(), options.extra_copulas.begin(), options.extra_copulas.end());
  for (const Copula& c : all) {
    const ValidityReport report = check_copula(c, 200);
    list.record("copula_axioms[" + c.name() + "] violations=" +
                    std::to_string(report.violations.size()),
                report.valid(), report.worst(), 0.0);
  }

  const Copula w = Copula::lower_frechet();
  const Copula m = Copula::upper_frechet();
  const Copula pi = Copula::product();
  double worst = 0.0;
  for (int i = 0; i <= 100; ++i) {
    for (int j = 0; j <= 100; ++j) {
      const double a = i / 100.0;
      const double b = j / 100.0;
      worst = std::max({worst, w.eval(a, b) - pi.eval(a, b), pi.eval(a, b) - m.eval(a, b)});
    }
  }
  list.at_most("frechet_ordering W<=Pi<=M", worst, 1e-15);
}

void check_closed_forms(Checklist& list) {
  const Marginal ux = Marginal::uniform(1.0, 3.0);
  const Marginal uy = Marginal::uniform(2.0, 5.0);
  double dev = 0.0;
  for (int i = 0; i < 201; ++i) {
    const double s = linspace(0.0, 20.0, i, 201);
    const BoundResult c = closed_form_sum_uniform(ux, uy, s);
    const BoundResult n = numerical_bounds(ux, uy, BinaryOp::sum(), s);
    dev = std::max({dev, std::abs(c.lower - n.lower), std::abs(c.upper - n.upper)});
  }
  list.at_most("closed_vs_numerical[uniform_sum]", dev, 1e-6);

  const double pairs[][2] = {{1.0, 1.0}, {1.0, 2.0}, {0.5, 3.0}};
  for (const auto& p : pairs) {
    const Marginal ex = Marginal::exponential(p[0]);
    const Marginal ey = Marginal::exponential(p[1]);
    double d = 0.0;
    for (int i = 0; i < 100; ++i) {
      const double s = linspace(0.01, 20.0, i, 100);
      const BoundResult c = closed_form_sum_exponential(ex, ey, s);
      const BoundResult n = numerical_bounds(ex, ey, BinaryOp::sum(), s);
      d = std::max({d, std::abs(c.lower - n.lower), std::abs(c.upper - n.upper)});
    }
    list.at_most("closed_vs_numerical[exp_sum " + format_number(p[0]) + "," + format_number(p[1]) +
                     "]",
                 d, 1e-6);
  }
}

void check_bessel(Checklist& list) {
  double rel = 0.0;
  for (int i = 0; i <= 100; ++i) {
    const double x = linspace(1.5, 2.5, i, 101);
    const double a = detail::bessel_k1_series(x);
    const double b = detail::bessel_k1_continued_fraction(x);
    rel = std::max(rel, std::abs(a - b) / std::abs(b));
  }
  list.at_most("bessel_k1_branch_overlap[1.5,2.5]", rel, 1e-9);
}

void check_mac(Checklist& list, RandomSource& rng) {
  double worst_order = -1.0;
  double worst_numeric = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double lx = 0.1 + 4.9 * rng.next_uniform();
    const double ly = 0.1 + 4.9 * rng.next_uniform();
    const double r1 = 3.0 * rng.next_uniform();
    const double r2 = 3.0 * rng.next_uniform();
    const double lo = mac_outage_lower(lx, ly, r1, r2);
    const double hi = mac_outage_upper(lx, ly, r1, r2);
    worst_order = std::max(worst_order, lo - hi);
    if (i < 20) {
      const BoundResult n = mac_outage_bounds_numerical(Marginal::exponential(lx),
                                                        Marginal::exponential(ly), r1, r2);
      worst_numeric = std::max({worst_numeric, std::abs(n.lower - lo), std::abs(n.upper - hi)});
    }
  }
  list.at_most("mac_lower_minus_upper", worst_order, 0.0);
  list.at_most("mac_closed_vs_numerical", worst_numeric, 1e-6);
}

void check_ris(Checklist& list) {
  double worst = -1.0;
  for (int i = 0; i < 50; ++i) {
    const double rate = std::exp(linspace(std::log(1e-3), std::log(10.0), i, 50));
    const RateConfig cfg{rate, 1.0};
    const BoundResult b = ris_outage_bounds(1.0, 1.0, cfg);
    const double ind = ris_independent_outage(1.0, 1.0, cfg);
    worst = std::max({worst, b.lower - ind, ind - b.upper});
  }
  list.at_most("ris_lower<=independent<=upper", worst, 0.0);
}

void check_attainment(Checklist& list, const VerifyOptions& options) {
  const double n = static_cast<double>(options.samples);
  // DKW band at confidence 1 - 1e-3.
  const double band = std::max(0.005, std::sqrt(std::log(2.0 / 1e-3) / (2.0 * n)));

  const AttainingJoint lower = AttainingJoint::lower(
      Marginal::uniform(1.0, 3.0), Marginal::uniform(2.0, 5.0), BinaryOp::sum(), 6.0);
  const AttainingJoint upper = AttainingJoint::upper(
      Marginal::exponential(1.0), Marginal::exponential(1.0), BinaryOp::sum(), 0.1);

  int k = 0;
  for (const AttainingJoint* j : {&lower, &upper}) {
    const std::string tag = (j == &lower) ? "lower[uniform_sum s=6]" : "upper[exp_sum s=0.1]";
    RandomSource rng(mix_seed(options.seed, 100 + k++));
    try {
      const AttainmentAudit a = audit_attainment(*j, options.samples, rng);
      list.at_most("attainment_" + tag, a.deviation, 4.0 * a.sigma + 1.0 / n);
    } catch (const ConstructionUnverified&) {
      list.record("attainment_" + tag, false, 1.0, 0.0);
    }
    const AuditReport audit = marginal_audit(*j, options.samples, rng);
    list.at_most("marginal_audit_" + tag,
                 std::max(audit.sup_deviation_x, audit.sup_deviation_y), band);
  }
}

void check_monotone(Checklist& list) {
  const Marginal ex = Marginal::exponential(1.0);
  const Marginal ey = Marginal::exponential(2.0);
  double worst = 0.0;
  double prev_lo = 0.0;
  double prev_hi = 0.0;
  for (int i = 0; i < 200; ++i) {
    const double s = linspace(0.0, 10.0, i, 200);
    const BoundResult prod = numerical_bounds(ex, ey, BinaryOp::product(), s);
    worst = std::max({worst, prev_lo - prod.lower, prev_hi - prod.upper, prod.lower - prod.upper});
    prev_lo = prod.lower;
    prev_hi = prod.upper;
  }
  list.at_most("bounds_monotone_in_s[exp_product]", worst, 1e-9);
}

}  // namespace

int run_verify(const VerifyOptions& options, std::ostream& out) {
  out << "# verify seed=" << options.seed << " samples=" << options.samples << '\n';
  Checklist list(out);
  check_copulas(list, options);
  check_closed_forms(list);
  check_bessel(list);
  RandomSource mac_rng(mix_seed(options.seed, 1));
  check_mac(list, mac_rng);
  check_ris(list);
  check_monotone(list);
  check_attainment(list, options);
  out << (list.failures() == 0 ? "all checks passed" : std::to_string(list.failures()) + " check(s) failed")
      << '\n';
  return list.failures() == 0 ? kExitOk : kExitCheckFailed;
}

}  // namespace copula_outage::cli
