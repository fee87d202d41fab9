#ifndef COPULA_OUTAGE_KERNELS_HPP
#define COPULA_OUTAGE_KERNELS_HPP

// Data-parallel kernels. Every kernel exists twice: `serial` is the reference
// implementation used by the tests, `parallel` is the OpenMP version. Both
// produce bit-identical results for the same inputs regardless of thread count:
// Monte Carlo work is cut into fixed-size blocks, block b draws from
// RandomSource(mix_seed(base_seed, b)), and counts are integer sums.

#include "copula_outage/numerics.hpp"

#include <algorithm>
#include <cstdint>
#include <exception>
#include <optional>
#include <span>
#include <type_traits>
#include <vector>

namespace copula_outage::kernels {

inline constexpr std::uint64_t kBlockSize = 1u << 14;

inline std::uint64_t block_count(std::uint64_t n) { return (n + kBlockSize - 1) / kBlockSize; }

inline std::uint64_t block_begin(std::uint64_t b) { return b * kBlockSize; }

inline std::uint64_t block_end(std::uint64_t b, std::uint64_t n) {
  return std::min(n, (b + 1) * kBlockSize);
}

/// Caps the OpenMP team size from COPULA_OUTAGE_THREADS when set to a positive
/// integer. Returns the cap applied, or 0 when the variable is absent.
int configure_threads_from_env();

/// Number of threads the parallel kernels will use.
int max_threads();

namespace serial {

/// Number of trials out of n for which trial(rng) returns true.
template <class Trial>
std::uint64_t count_hits(std::uint64_t n, std::uint64_t base_seed, const Trial& trial) {
  std::uint64_t hits = 0;
  for (std::uint64_t b = 0; b < block_count(n); ++b) {
    RandomSource rng(mix_seed(base_seed, b));
    for (std::uint64_t i = block_begin(b); i < block_end(b, n); ++i) {
      if (trial(rng)) ++hits;
    }
  }
  return hits;
}

/// out[i] = draw(rng) with the same block seeding as count_hits.
template <class T, class Draw>
void fill(std::span<T> out, std::uint64_t base_seed, const Draw& draw) {
  const std::uint64_t n = out.size();
  for (std::uint64_t b = 0; b < block_count(n); ++b) {
    RandomSource rng(mix_seed(base_seed, b));
    for (std::uint64_t i = block_begin(b); i < block_end(b, n); ++i) out[i] = draw(rng);
  }
}

/// fn applied to every value, in order.
template <class Fn>
auto map(std::span<const double> values, const Fn& fn) {
  using R = std::invoke_result_t<const Fn&, double>;
  std::vector<R> out;
  out.reserve(values.size());
  for (double v : values) out.push_back(fn(v));
  return out;
}

}  // namespace serial

namespace parallel {

template <class Trial>
std::uint64_t count_hits(std::uint64_t n, std::uint64_t base_seed, const Trial& trial) {
  const auto blocks = static_cast<std::int64_t>(block_count(n));
  std::uint64_t hits = 0;
#pragma omp parallel for reduction(+ : hits) schedule(static)
  for (std::int64_t b = 0; b < blocks; ++b) {
    const auto ub = static_cast<std::uint64_t>(b);
    RandomSource rng(mix_seed(base_seed, ub));
    std::uint64_t local = 0;
    for (std::uint64_t i = block_begin(ub); i < block_end(ub, n); ++i) {
      if (trial(rng)) ++local;
    }
    hits += local;
  }
  return hits;
}

template <class T, class Draw>
void fill(std::span<T> out, std::uint64_t base_seed, const Draw& draw) {
  const std::uint64_t n = out.size();
  const auto blocks = static_cast<std::int64_t>(block_count(n));
#pragma omp parallel for schedule(static)
  for (std::int64_t b = 0; b < blocks; ++b) {
    const auto ub = static_cast<std::uint64_t>(b);
    RandomSource rng(mix_seed(base_seed, ub));
    for (std::uint64_t i = block_begin(ub); i < block_end(ub, n); ++i) out[i] = draw(rng);
  }
}

/// fn applied to every value; element order matches the input. The first
/// exception thrown by fn (lowest index) is rethrown after the loop.
template <class Fn>
auto map(std::span<const double> values, const Fn& fn) {
  using R = std::invoke_result_t<const Fn&, double>;
  const auto n = static_cast<std::int64_t>(values.size());
  std::vector<std::optional<R>> slots(values.size());
  std::vector<std::exception_ptr> errors(values.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      slots[i].emplace(fn(values[i]));
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<R> out;
  out.reserve(values.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace parallel

}  // namespace copula_outage::kernels

#endif
