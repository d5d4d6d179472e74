// Runs the eight acceptance criteria at the default sweep bounds and prints
// one line per criterion.
#include <iostream>

#include "negacycl/selftest.hpp"

int main() {
  const negacycl::SelftestConfig cfg;  // q <= 27, n <= 200, code lengths <= 24, exhaustive divisors
  const auto outcome = negacycl::run_selftest(cfg);
  for (const auto& c : outcome.criteria) std::cout << negacycl::format_result(c) << '\n';
  std::cout << (outcome.all_passed() ? "ALL PASS" : "FAILURES") << std::endl;
  return outcome.all_passed() ? 0 : 1;
}
