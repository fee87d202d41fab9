// Serial reference vs OpenMP kernels on the two hot loops: threshold sweeps of
// the level-curve optimizer and blocked Monte Carlo.

#include "copula_outage/bounds.hpp"
#include "copula_outage/kernels.hpp"
#include "copula_outage/outage.hpp"
#include "copula_outage/worstcase.hpp"

#include <benchmark/benchmark.h>

#include <span>
#include <vector>

namespace co = copula_outage;

namespace {

std::vector<double> threshold_grid(int n) {
  std::vector<double> s(n);
  for (int i = 0; i < n; ++i) s[i] = 0.01 + 20.0 * i / (n - 1);
  return s;
}

template <bool Parallel>
void BM_ProductSweep(benchmark::State& state) {
  const auto grid = threshold_grid(static_cast<int>(state.range(0)));
  const auto fx = co::Marginal::exponential(1.0);
  const auto fy = co::Marginal::exponential(2.0);
  const auto op = co::BinaryOp::product();
  const auto fn = [&](double s) { return co::numerical_bounds(fx, fy, op, s); };
  for (auto _ : state) {
    if constexpr (Parallel) {
      benchmark::DoNotOptimize(co::kernels::parallel::map(std::span<const double>(grid), fn));
    } else {
      benchmark::DoNotOptimize(co::kernels::serial::map(std::span<const double>(grid), fn));
    }
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <bool Parallel>
void BM_AttainingMonteCarlo(benchmark::State& state) {
  const auto j = co::AttainingJoint::lower(co::Marginal::exponential(1.0),
                                           co::Marginal::exponential(1.0),
                                           co::BinaryOp::sum(), 3.0);
  const auto n = static_cast<std::uint64_t>(state.range(0));
  const auto trial = [&j](co::RandomSource& r) {
    const co::Point p = co::sample_attaining(j, r);
    return p.x + p.y < 3.0;
  };
  for (auto _ : state) {
    if constexpr (Parallel) {
      benchmark::DoNotOptimize(co::kernels::parallel::count_hits(n, 42, trial));
    } else {
      benchmark::DoNotOptimize(co::kernels::serial::count_hits(n, 42, trial));
    }
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_ProductSweep<false>)->Name("product_sweep/serial")->Arg(200);
BENCHMARK(BM_ProductSweep<true>)->Name("product_sweep/parallel")->Arg(200);
BENCHMARK(BM_AttainingMonteCarlo<false>)->Name("attaining_mc/serial")->Arg(1 << 20);
BENCHMARK(BM_AttainingMonteCarlo<true>)->Name("attaining_mc/parallel")->Arg(1 << 20);

BENCHMARK_MAIN();
