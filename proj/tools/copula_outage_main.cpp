#include "copula_outage/cli.hpp"
#include "copula_outage/kernels.hpp"

#include <iostream>
#include <string>
#include <vector>

int main(int argc, char** argv) {
  copula_outage::kernels::configure_threads_from_env();
  const std::vector<std::string> args(argv + 1, argv + argc);
  return copula_outage::cli::run(args, std::cout, std::cerr);
}
