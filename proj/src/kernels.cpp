#include "copula_outage/kernels.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace copula_outage::kernels {

int configure_threads_from_env() {
  const char* raw = std::getenv("COPULA_OUTAGE_THREADS");
  if (raw == nullptr) return 0;
  int value = 0;
  const auto [ptr, ec] = std::from_chars(raw, raw + std::strlen(raw), value);
  if (ec != std::errc() || *ptr != '\0' || value < 1) return 0;
#ifdef _OPENMP
  omp_set_num_threads(value);
#endif
  return value;
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace copula_outage::kernels
