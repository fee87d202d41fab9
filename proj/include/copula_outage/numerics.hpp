#ifndef COPULA_OUTAGE_NUMERICS_HPP
#define COPULA_OUTAGE_NUMERICS_HPP

#include <cstdint>
#include <functional>
#include <random>

namespace copula_outage {

/// Convergence controls shared by the root finder and the scalar optimizer.
struct Tolerance {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  int max_iter = 200;

  /// Throws DomainError unless abs_tol > 0, rel_tol > 0 and max_iter >= 1.
  void validate() const;
};

using ScalarFunction = std::function<double(double)>;

struct ScalarOptimum {
  double arg;
  double value;
};

/// Brent's method on a sign-changing bracket [lo, hi].
///
/// Falls back to bisection whenever the interpolation step leaves the bracket
/// or fails to halve it, so convergence is guaranteed for continuous f.
/// Throws NoBracket when f(lo) and f(hi) have the same strict sign and
/// MaxIterExceeded when tol.max_iter iterations do not reach the tolerance.
double find_root(const ScalarFunction& f, double lo, double hi, const Tolerance& tol = {});

/// Maximizes f over [lo, hi]: a uniform grid of grid_n points locates the best
/// cell, which is then refined by golden-section search. The returned value is
/// never below the best grid value.
ScalarOptimum maximize_scalar(const ScalarFunction& f, double lo, double hi,
                              const Tolerance& tol = {}, int grid_n = 257);

/// Minimization as maximization of -f.
ScalarOptimum minimize_scalar(const ScalarFunction& f, double lo, double hi,
                              const Tolerance& tol = {}, int grid_n = 257);

/// Modified Bessel function of the second kind, order one.
///
/// Ascending series with the logarithmic term for x <= 2, Steed's continued
/// fraction (exponentially scaled) above. Relative error below 1e-10 on
/// (0, 700]. Throws DomainError for x <= 0.
double bessel_k1(double x);

namespace detail {
double bessel_k1_series(double x);
double bessel_k1_continued_fraction(double x);
}  // namespace detail

/// splitmix64 finalizer; used to derive independent stream seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

/// Seedable pseudo-random stream, bit-exact for a given seed on every platform.
///
/// The engine is std::mt19937_64 (its output sequence is fixed by the
/// standard). Uniforms take the top 53 bits; Gaussians use the Box-Muller
/// transform and cache the second variate of each pair.
class RandomSource {
public:
  explicit RandomSource(std::uint64_t seed);

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_u64();
  /// Uniform on [0, 1).
  double next_uniform();
  /// Normal with the given mean and variance (var >= 0). var == 0 returns mean.
  double next_gaussian(double mean, double var);

private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  double cached_ = 0.0;
  bool has_cached_ = false;
};

}  // namespace copula_outage

#endif
