#include "copula_outage/cli.hpp"

#include "copula_outage/bounds.hpp"
#include "copula_outage/errors.hpp"
#include "copula_outage/kernels.hpp"
#include "copula_outage/marginals.hpp"
#include "copula_outage/outage.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <span>
#include <sstream>

namespace copula_outage::cli {

void SweepSpec::validate() const {
  if (points < 2) throw ParseError("sweep needs at least 2 points");
  if (!(start < stop)) throw ParseError("sweep start must be below stop");
  if (scale == Scale::Log && !(start > 0.0)) throw ParseError("log sweep needs start > 0");
}

std::vector<double> SweepSpec::values() const {
  validate();
  std::vector<double> v(static_cast<std::size_t>(points));
  const double n = static_cast<double>(points - 1);
  if (scale == Scale::Linear) {
    for (int i = 0; i < points; ++i) v[i] = start + (stop - start) * (static_cast<double>(i) / n);
  } else {
    const double a = std::log(start);
    const double b = std::log(stop);
    for (int i = 0; i < points; ++i) v[i] = std::exp(a + (b - a) * (static_cast<double>(i) / n));
    v.front() = start;
  }
  v.back() = stop;
  return v;
}

const char* variable_name(SweepSpec::Variable v) {
  switch (v) {
    case SweepSpec::Variable::Rate:
      return "rate";
    case SweepSpec::Variable::SnrDb:
      return "snr_db";
    case SweepSpec::Variable::Rho:
      return "rho";
    case SweepSpec::Variable::Threshold:
      return "s";
  }
  return "?";
}

std::string format_number(double v) {
  if (v == 0.0) return "0";  // also folds -0
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void CsvWriter::meta(const std::string& key, const std::string& value) {
  out_ << "# " << key << '=' << value << '\n';
}

void CsvWriter::header(const std::vector<std::string>& columns) {
  for (std::size_t i = 0; i < columns.size(); ++i) out_ << (i ? "," : "") << columns[i];
  out_ << '\n';
}

void CsvWriter::row(const std::vector<double>& values) {
  for (std::size_t i = 0; i < values.size(); ++i) out_ << (i ? "," : "") << format_number(values[i]);
  out_ << '\n';
}

namespace {

struct BoundsArgs {
  std::string op;
  std::string fx;
  std::string fy;
  double from = 0.0;
  double to = 1.0;
  int points = 201;
  bool log = false;
  bool numerical = false;
};

struct OutageArgs {
  std::string scenario;
  std::optional<double> lx, ly;
  std::optional<double> snr_db, snr_db_from, snr_db_to;
  std::optional<double> rate, rate_from, rate_to;
  std::optional<double> r1, r2;
  std::optional<double> rho, rho_from, rho_to;
  int points = 21;
  bool log = false;
  std::uint64_t seed = 1;
  std::uint64_t samples = 1000000;
};

std::string describe(const SweepSpec& sweep) {
  std::ostringstream os;
  os << variable_name(sweep.variable) << " from=" << format_number(sweep.start)
     << " to=" << format_number(sweep.stop) << " points=" << sweep.points
     << " scale=" << (sweep.scale == SweepSpec::Scale::Log ? "log" : "linear");
  return os.str();
}

// A fixed value, or a sweep when --X-from/--X-to are given. Mixing both is an error.
std::optional<SweepSpec> sweep_or_fixed(SweepSpec::Variable var, const std::optional<double>& fixed,
                                        const std::optional<double>& from,
                                        const std::optional<double>& to, const OutageArgs& a) {
  const std::string name = variable_name(var);
  if (from.has_value() != to.has_value()) {
    throw ParseError("--" + name + "-from and --" + name + "-to must be given together");
  }
  if (!from) return std::nullopt;
  if (fixed) throw ParseError("--" + name + " conflicts with a " + name + " sweep");
  SweepSpec sweep{var, *from, *to, a.points, a.log ? SweepSpec::Scale::Log : SweepSpec::Scale::Linear};
  sweep.validate();
  return sweep;
}

double require(const std::optional<double>& v, const std::string& flag) {
  if (!v) throw ParseError("missing " + flag);
  return *v;
}

void reject(const std::optional<double>& v, const std::string& flag, const std::string& scenario) {
  if (v) throw ParseError(flag + " is not used by scenario " + scenario);
}

int cmd_bounds(const BoundsArgs& a, std::ostream& out) {
  if (a.op != "sum" && a.op != "product") throw ParseError("op must be sum or product");
  const Marginal fx = Marginal::parse(a.fx);
  const Marginal fy = Marginal::parse(a.fy);
  if (fx.support().lo < 0.0 || fy.support().lo < 0.0) {
    throw ParseError("marginals must be supported on the non-negative reals");
  }
  const SweepSpec sweep{SweepSpec::Variable::Threshold, a.from, a.to, a.points,
                        a.log ? SweepSpec::Scale::Log : SweepSpec::Scale::Linear};
  const std::vector<double> grid = sweep.values();
  const BinaryOp op = (a.op == "sum") ? BinaryOp::sum() : BinaryOp::product();
  const bool closed = !a.numerical && has_closed_form(fx, fy, op);

  const auto rows = kernels::parallel::map(std::span<const double>(grid), [&](double s) {
    return closed ? compute_bounds(fx, fy, op, s) : numerical_bounds(fx, fy, op, s);
  });

  CsvWriter csv(out);
  csv.meta("command", "bounds");
  csv.meta("op", a.op);
  csv.meta("fx", fx.to_string());
  csv.meta("fy", fy.to_string());
  csv.meta("sweep", describe(sweep));
  csv.meta("method", closed ? "closed_form" : "numerical");
  csv.header({"s", "lower", "upper"});
  for (const BoundResult& r : rows) csv.row({r.threshold, r.lower, r.upper});
  return kExitOk;
}

void write_outage_meta(CsvWriter& csv, const OutageArgs& a, const std::string& sweep) {
  csv.meta("command", "outage");
  csv.meta("scenario", a.scenario);
  const auto opt = [&csv](const char* key, const std::optional<double>& v) {
    if (v) csv.meta(key, format_number(*v));
  };
  opt("lx", a.lx);
  opt("ly", a.ly);
  opt("snr_db", a.snr_db);
  opt("rate", a.rate);
  opt("r1", a.r1);
  opt("r2", a.r2);
  opt("rho", a.rho);
  csv.meta("sweep", sweep);
  if (a.scenario == "corr") {
    csv.meta("samples", std::to_string(a.samples));
    csv.meta("seed", std::to_string(a.seed));
  }
}

std::vector<double> single(double v) { return {v}; }

int cmd_p2p(const OutageArgs& a, std::ostream& out) {
  reject(a.r1, "--r1", a.scenario);
  reject(a.r2, "--r2", a.scenario);
  reject(a.rho, "--rho", a.scenario);
  reject(a.rho_from, "--rho-from", a.scenario);
  const double lx = a.lx.value_or(1.0);
  const double ly = a.ly.value_or(1.0);
  const auto rate_sweep = sweep_or_fixed(SweepSpec::Variable::Rate, a.rate, a.rate_from, a.rate_to, a);
  const auto snr_sweep =
      sweep_or_fixed(SweepSpec::Variable::SnrDb, a.snr_db, a.snr_db_from, a.snr_db_to, a);
  if (rate_sweep && snr_sweep) throw ParseError("sweep either the rate or the SNR, not both");

  std::vector<double> grid;
  std::string column = "rate";
  std::string sweep_text = "none";
  if (snr_sweep) {
    grid = snr_sweep->values();
    column = "snr_db";
    sweep_text = describe(*snr_sweep);
  } else if (rate_sweep) {
    grid = rate_sweep->values();
    sweep_text = describe(*rate_sweep);
  } else {
    grid = single(require(a.rate, "--rate"));
  }
  const bool over_snr = snr_sweep.has_value();
  const double fixed_rate = over_snr ? require(a.rate, "--rate") : 0.0;
  const double fixed_snr = over_snr ? 0.0 : db_to_linear(require(a.snr_db, "--snr-db"));

  const auto rows = kernels::parallel::map(std::span<const double>(grid), [&](double v) {
    const RateConfig cfg = over_snr ? RateConfig{fixed_rate, db_to_linear(v)} : RateConfig{v, fixed_snr};
    return p2p_outage_bounds(lx, ly, cfg);
  });

  CsvWriter csv(out);
  write_outage_meta(csv, a, sweep_text);
  csv.header({column, "lower", "upper"});
  for (std::size_t i = 0; i < grid.size(); ++i) csv.row({grid[i], rows[i].lower, rows[i].upper});
  return kExitOk;
}

int cmd_mac(const OutageArgs& a, std::ostream& out) {
  reject(a.snr_db, "--snr-db", a.scenario);
  reject(a.snr_db_from, "--snr-db-from", a.scenario);
  reject(a.rate, "--rate", a.scenario);
  reject(a.rho, "--rho", a.scenario);
  reject(a.rho_from, "--rho-from", a.scenario);
  const double lx = a.lx.value_or(1.0);
  const double ly = a.ly.value_or(1.0);
  const auto sweep = sweep_or_fixed(SweepSpec::Variable::Rate, a.r1, a.rate_from, a.rate_to, a);

  std::vector<double> grid = sweep ? sweep->values() : single(require(a.r1, "--r1"));
  // Sweeps move R1 and R2 together unless R2 is pinned.
  const std::optional<double> pinned_r2 = sweep ? a.r2 : std::optional<double>(require(a.r2, "--r2"));

  const auto rows = kernels::parallel::map(std::span<const double>(grid), [&](double r1) {
    const double r2 = pinned_r2.value_or(r1);
    return std::pair{mac_outage_lower(lx, ly, r1, r2), mac_outage_upper(lx, ly, r1, r2)};
  });

  CsvWriter csv(out);
  write_outage_meta(csv, a, sweep ? describe(*sweep) : "none");
  csv.header({"rate", "lower", "upper"});
  for (std::size_t i = 0; i < grid.size(); ++i) csv.row({grid[i], rows[i].first, rows[i].second});
  return kExitOk;
}

int cmd_ris(const OutageArgs& a, std::ostream& out) {
  reject(a.r1, "--r1", a.scenario);
  reject(a.r2, "--r2", a.scenario);
  reject(a.rho, "--rho", a.scenario);
  reject(a.rho_from, "--rho-from", a.scenario);
  reject(a.snr_db_from, "--snr-db-from", a.scenario);
  const double lx = a.lx.value_or(1.0);
  const double ly = a.ly.value_or(1.0);
  const double snr = db_to_linear(require(a.snr_db, "--snr-db"));
  const auto sweep = sweep_or_fixed(SweepSpec::Variable::Rate, a.rate, a.rate_from, a.rate_to, a);
  const std::vector<double> grid = sweep ? sweep->values() : single(require(a.rate, "--rate"));

  struct Row {
    BoundResult bounds;
    double independent;
  };
  const auto rows = kernels::parallel::map(std::span<const double>(grid), [&](double rate) {
    const RateConfig cfg{rate, snr};
    return Row{ris_outage_bounds(lx, ly, cfg), ris_independent_outage(lx, ly, cfg)};
  });

  CsvWriter csv(out);
  write_outage_meta(csv, a, sweep ? describe(*sweep) : "none");
  csv.header({"rate", "lower", "independent", "upper"});
  for (std::size_t i = 0; i < grid.size(); ++i) {
    csv.row({grid[i], rows[i].bounds.lower, rows[i].independent, rows[i].bounds.upper});
  }
  return kExitOk;
}

int cmd_corr(const OutageArgs& a, std::ostream& out) {
  reject(a.r1, "--r1", a.scenario);
  reject(a.r2, "--r2", a.scenario);
  reject(a.lx, "--lx", a.scenario);
  reject(a.ly, "--ly", a.scenario);
  reject(a.rate_from, "--rate-from", a.scenario);
  reject(a.snr_db_from, "--snr-db-from", a.scenario);
  const RateConfig cfg{require(a.rate, "--rate"), db_to_linear(require(a.snr_db, "--snr-db"))};
  cfg.validate();
  if (a.samples < 10000) throw ParseError("--samples must be at least 10000");
  const auto sweep = sweep_or_fixed(SweepSpec::Variable::Rho, a.rho, a.rho_from, a.rho_to, a);
  const std::vector<double> grid = sweep ? sweep->values() : single(require(a.rho, "--rho"));
  for (double rho : grid) {
    if (!(rho >= 0.0 && rho <= 1.0)) throw ParseError("rho must lie in [0, 1]");
  }

  // Both gains of the correlation model are Exp(1).
  const BoundResult bounds = p2p_outage_bounds(1.0, 1.0, cfg);

  CsvWriter csv(out);
  write_outage_meta(csv, a, sweep ? describe(*sweep) : "none");
  csv.header({"rho", "mc_estimate", "mc_stderr", "lower", "upper"});
  for (std::size_t i = 0; i < grid.size(); ++i) {
    RandomSource rng(a.seed + i);
    const MonteCarloEstimate mc =
        correlated_rayleigh_outage_mc(CorrelationModel{grid[i]}, cfg, a.samples, rng);
    csv.row({grid[i], mc.estimate, mc.std_error, bounds.lower, bounds.upper});
  }
  return kExitOk;
}

int cmd_outage(const OutageArgs& a, std::ostream& out) {
  if (a.scenario == "p2p") return cmd_p2p(a, out);
  if (a.scenario == "mac") return cmd_mac(a, out);
  if (a.scenario == "ris") return cmd_ris(a, out);
  if (a.scenario == "corr") return cmd_corr(a, out);
  throw ParseError("unknown scenario '" + a.scenario + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Copula-based outage probability bounds under unknown channel dependence",
               "copula_outage"};
  app.require_subcommand(1);

  BoundsArgs bounds;
  auto* bounds_cmd = app.add_subcommand("bounds", "Bounds on P(L(X,Y) < s) over a threshold sweep");
  bounds_cmd->add_option("op", bounds.op, "sum | product")->required();
  bounds_cmd->add_option("fx", bounds.fx, "marginal of X (uniform:a:b | exp:rate)")->required();
  bounds_cmd->add_option("fy", bounds.fy, "marginal of Y")->required();
  bounds_cmd->add_option("--from", bounds.from, "first threshold")->required();
  bounds_cmd->add_option("--to", bounds.to, "last threshold")->required();
  bounds_cmd->add_option("--points", bounds.points, "number of thresholds")->capture_default_str();
  bounds_cmd->add_flag("--log", bounds.log, "log-spaced thresholds");
  bounds_cmd->add_flag("--numerical", bounds.numerical, "skip closed forms");

  OutageArgs outage;
  auto* outage_cmd = app.add_subcommand("outage", "Outage probability bounds for a scenario");
  outage_cmd->add_option("scenario", outage.scenario, "p2p | mac | ris | corr")->required();
  outage_cmd->add_option("--lx", outage.lx, "shape parameter of X (default 1)");
  outage_cmd->add_option("--ly", outage.ly, "shape parameter of Y (default 1)");
  outage_cmd->add_option("--snr-db", outage.snr_db, "SNR in dB");
  outage_cmd->add_option("--snr-db-from", outage.snr_db_from);
  outage_cmd->add_option("--snr-db-to", outage.snr_db_to);
  outage_cmd->add_option("--rate", outage.rate, "transmission rate (bits per channel use)");
  outage_cmd->add_option("--rate-from", outage.rate_from);
  outage_cmd->add_option("--rate-to", outage.rate_to);
  outage_cmd->add_option("--r1", outage.r1, "MAC rate of user 1");
  outage_cmd->add_option("--r2", outage.r2, "MAC rate of user 2");
  outage_cmd->add_option("--rho", outage.rho, "correlation coefficient");
  outage_cmd->add_option("--rho-from", outage.rho_from);
  outage_cmd->add_option("--rho-to", outage.rho_to);
  outage_cmd->add_option("--points", outage.points, "sweep points")->capture_default_str();
  outage_cmd->add_flag("--log", outage.log, "log-spaced sweep");
  outage_cmd->add_option("--seed", outage.seed, "Monte Carlo seed")->capture_default_str();
  outage_cmd->add_option("--samples", outage.samples, "Monte Carlo samples per point")
      ->capture_default_str();

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run the self-consistency checks");
  verify_cmd->add_option("--seed", verify.seed)->capture_default_str();
  verify_cmd->add_option("--samples", verify.samples)->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  }

  try {
    if (bounds_cmd->parsed()) return cmd_bounds(bounds, out);
    if (outage_cmd->parsed()) return cmd_outage(outage, out);
    if (verify.samples < 10000) throw ParseError("--samples must be at least 10000");
    return run_verify(verify, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const Error& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  }
}

}  // namespace copula_outage::cli
