#ifndef COPULA_OUTAGE_MARGINALS_HPP
#define COPULA_OUTAGE_MARGINALS_HPP

#include <string>
#include <string_view>
#include <variant>

namespace copula_outage {

struct Uniform {
  double min;
  double max;
};

/// Exponential channel gain with shape (rate) parameter lambda.
struct Exponential {
  double rate;
};

struct Support {
  double lo;
  double hi;  // may be +inf
};

/// Continuous one-dimensional distribution of a channel gain.
///
/// Immutable once constructed. The CDF clamps outside the support so it can be
/// evaluated anywhere along an unbounded level curve.
class Marginal {
public:
  /// Throws DomainError unless min < max (both finite).
  static Marginal uniform(double min, double max);
  /// Throws DomainError unless rate > 0 (finite).
  static Marginal exponential(double rate);

  /// Parses `uniform:a:b` or `exp:rate`. Throws ParseError.
  static Marginal parse(std::string_view text);

  double cdf(double x) const;
  /// Inverse CDF. Exponential quantile(1) is +inf. Throws DomainError for p outside [0, 1].
  double quantile(double p) const;
  Support support() const;

  bool is_uniform() const { return std::holds_alternative<Uniform>(kind_); }
  bool is_exponential() const { return std::holds_alternative<Exponential>(kind_); }
  const Uniform& as_uniform() const { return std::get<Uniform>(kind_); }
  const Exponential& as_exponential() const { return std::get<Exponential>(kind_); }

  /// Round-trippable text form, e.g. `uniform:1:3`.
  std::string to_string() const;

private:
  explicit Marginal(std::variant<Uniform, Exponential> kind) : kind_(kind) {}
  std::variant<Uniform, Exponential> kind_;
};

}  // namespace copula_outage

#endif
