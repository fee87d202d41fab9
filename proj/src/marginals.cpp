#include "copula_outage/marginals.hpp"

#include "copula_outage/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

namespace copula_outage {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

double parse_number(std::string_view token, std::string_view whole) {
  double value = 0.0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || token.empty()) {
    throw ParseError("bad number '" + std::string(token) + "' in marginal '" + std::string(whole) +
                     "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::string format_number(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

Marginal Marginal::uniform(double min, double max) {
  if (!std::isfinite(min) || !std::isfinite(max) || !(min < max)) {
    throw DomainError("uniform marginal requires finite min < max");
  }
  return Marginal(Uniform{min, max});
}

Marginal Marginal::exponential(double rate) {
  if (!std::isfinite(rate) || !(rate > 0.0)) {
    throw DomainError("exponential marginal requires rate > 0");
  }
  return Marginal(Exponential{rate});
}

Marginal Marginal::parse(std::string_view text) {
  const auto parts = split(text, ':');
  try {
    if (parts[0] == "uniform" && parts.size() == 3) {
      return uniform(parse_number(parts[1], text), parse_number(parts[2], text));
    }
    if ((parts[0] == "exp" || parts[0] == "exponential") && parts.size() == 2) {
      return exponential(parse_number(parts[1], text));
    }
  } catch (const DomainError& e) {
    throw ParseError(std::string(text) + ": " + e.what());
  }
  throw ParseError("unrecognized marginal '" + std::string(text) +
                   "' (expected uniform:a:b or exp:rate)");
}

double Marginal::cdf(double x) const {
  return std::visit(overloaded{
                        [x](const Uniform& u) {
                          return std::clamp((x - u.min) / (u.max - u.min), 0.0, 1.0);
                        },
                        [x](const Exponential& e) {
                          if (x <= 0.0) return 0.0;
                          return -std::expm1(-e.rate * x);
                        },
                    },
                    kind_);
}

double Marginal::quantile(double p) const {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("quantile: probability outside [0, 1]");
  return std::visit(overloaded{
                        [p](const Uniform& u) {
                          if (p == 1.0) return u.max;
                          return u.min + p * (u.max - u.min);
                        },
                        [p](const Exponential& e) {
                          if (p == 1.0) return std::numeric_limits<double>::infinity();
                          return -std::log1p(-p) / e.rate;
                        },
                    },
                    kind_);
}

Support Marginal::support() const {
  return std::visit(overloaded{
                        [](const Uniform& u) { return Support{u.min, u.max}; },
                        [](const Exponential&) {
                          return Support{0.0, std::numeric_limits<double>::infinity()};
                        },
                    },
                    kind_);
}

std::string Marginal::to_string() const {
  return std::visit(overloaded{
                        [](const Uniform& u) {
                          return "uniform:" + format_number(u.min) + ":" + format_number(u.max);
                        },
                        [](const Exponential& e) { return "exp:" + format_number(e.rate); },
                    },
                    kind_);
}

}  // namespace copula_outage
