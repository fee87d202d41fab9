#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "copula_outage/bounds.hpp"
#include "copula_outage/kernels.hpp"

#include <omp.h>

#include <stdexcept>
#include <vector>

using namespace copula_outage;

namespace {

bool trial(RandomSource& r) { return r.next_gaussian(0.0, 1.0) < 0.3; }

struct ThreadGuard {
  int saved = omp_get_max_threads();
  ~ThreadGuard() { omp_set_num_threads(saved); }
};

}  // namespace

TEST_CASE("block layout") {
  CHECK(kernels::block_count(0) == 0);
  CHECK(kernels::block_count(1) == 1);
  CHECK(kernels::block_count(kernels::kBlockSize) == 1);
  CHECK(kernels::block_count(kernels::kBlockSize + 1) == 2);
  CHECK(kernels::block_end(1, kernels::kBlockSize + 5) == kernels::kBlockSize + 5);
}

TEST_CASE("count_hits matches the serial reference for any thread count") {
  ThreadGuard guard;
  for (std::uint64_t n : {1ull, 100ull, 16384ull, 16385ull, 300001ull}) {
    const std::uint64_t ref = kernels::serial::count_hits(n, 77, trial);
    for (int threads : {1, 2, 3, 8}) {
      omp_set_num_threads(threads);
      CHECK(kernels::parallel::count_hits(n, 77, trial) == ref);
    }
  }
}

TEST_CASE("fill is bit-identical to the serial reference") {
  ThreadGuard guard;
  std::vector<double> ref(100000);
  kernels::serial::fill(std::span<double>(ref), 5, [](RandomSource& r) { return r.next_uniform(); });
  for (int threads : {1, 4, 7}) {
    omp_set_num_threads(threads);
    std::vector<double> got(ref.size());
    kernels::parallel::fill(std::span<double>(got), 5,
                            [](RandomSource& r) { return r.next_uniform(); });
    CHECK(got == ref);
  }
}

TEST_CASE("map preserves order and values") {
  std::vector<double> s;
  for (int i = 0; i < 150; ++i) s.push_back(0.1 * i);
  const auto fn = [](double v) {
    return numerical_bounds(Marginal::exponential(1), Marginal::exponential(2), BinaryOp::product(), v)
        .lower;
  };
  const auto a = kernels::serial::map(std::span<const double>(s), fn);
  const auto b = kernels::parallel::map(std::span<const double>(s), fn);
  CHECK(a == b);
}

TEST_CASE("map rethrows the first failing element") {
  std::vector<double> s{1, 2, 3, 4, 5, 6, 7, 8};
  const auto fn = [](double v) -> double {
    if (v >= 3) throw std::runtime_error(std::to_string(static_cast<int>(v)));
    return v;
  };
  try {
    kernels::parallel::map(std::span<const double>(s), fn);
    FAIL("expected an exception");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()) == "3");
  }
}
