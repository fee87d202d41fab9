#ifndef COPULA_OUTAGE_CLI_HPP
#define COPULA_OUTAGE_CLI_HPP

#include "copula_outage/copulas.hpp"

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace copula_outage::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitBadInput = 2;
inline constexpr int kExitNumerical = 3;

/// Grid for the x-axis of a CSV table.
struct SweepSpec {
  enum class Variable { Rate, SnrDb, Rho, Threshold };
  enum class Scale { Linear, Log };

  Variable variable = Variable::Threshold;
  double start = 0.0;
  double stop = 1.0;
  int points = 2;
  Scale scale = Scale::Linear;

  /// Throws ParseError unless points >= 2, start < stop and (log) start > 0.
  void validate() const;
  /// Ascending grid; the last value is exactly `stop`.
  std::vector<double> values() const;
};

const char* variable_name(SweepSpec::Variable v);

/// 12 significant digits, shortest form ("%.12g").
std::string format_number(double v);

/// CSV table: `#` metadata lines, a header row, then data rows. LF endings.
class CsvWriter {
public:
  explicit CsvWriter(std::ostream& out) : out_(out) {}
  void meta(const std::string& key, const std::string& value);
  void header(const std::vector<std::string>& columns);
  void row(const std::vector<double>& values);

private:
  std::ostream& out_;
};

struct VerifyOptions {
  std::uint64_t seed = 1;
  std::uint64_t samples = 100000;
  /// Additional copulas run through the grid validity check.
  std::vector<Copula> extra_copulas;
};

/// Runs the self-consistency suite, one line per check. Returns kExitOk when
/// every check passes, kExitCheckFailed otherwise.
int run_verify(const VerifyOptions& options, std::ostream& out);

/// Entry point shared by the executable and the tests. args excludes argv[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace copula_outage::cli

#endif
