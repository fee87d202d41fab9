#include "copula_outage/errors.hpp"
#include "copula_outage/numerics.hpp"

#include <cmath>
#include <numbers>

namespace copula_outage {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

RandomSource::RandomSource(std::uint64_t seed) : seed_(seed), engine_(seed) {}

std::uint64_t RandomSource::next_u64() { return engine_(); }

double RandomSource::next_uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double RandomSource::next_gaussian(double mean, double var) {
  if (var < 0.0) throw DomainError("next_gaussian: variance must be non-negative");
  double z;
  if (has_cached_) {
    z = cached_;
    has_cached_ = false;
  } else {
    // u1 in (0, 1] keeps the logarithm finite.
    const double u1 = 1.0 - next_uniform();
    const double u2 = next_uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    z = r * std::cos(theta);
    cached_ = r * std::sin(theta);
    has_cached_ = true;
  }
  if (var == 0.0) return mean;
  return mean + std::sqrt(var) * z;
}

}  // namespace copula_outage
