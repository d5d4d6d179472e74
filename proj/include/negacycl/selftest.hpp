// The acceptance sweep: eight criteria, each an exact comparison between an
// arithmetic prediction and an independent computation. Shared by the CLI
// `selftest` subcommand and the acceptance test binary.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "negacycl/json_io.hpp"

namespace negacycl {

struct SelftestConfig {
  std::uint64_t q_max = 27;      // field orders from {3,5,7,9,11,13,25,27}
  std::uint64_t n_max = 200;     // lengths for the factorization grid
  std::uint64_t d_max = 500;     // integers for the good-integer check
  std::uint64_t coset_max = 400; // even coset moduli 2^{m+1} n'
  std::uint64_t code_n_max = 24; // code lengths for the dual / LCD sweep
  // Divisor lattices of x^n + 1 larger than this are sampled.
  std::uint64_t divisor_cap = std::uint64_t{1} << 20;
  unsigned threads = 0;          // 0: NEGACYCL_THREADS or hardware concurrency
};

struct CriterionResult {
  int id = 0;
  std::string name;
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  std::string first_failure;
  double seconds = 0.0;

  bool passed() const { return failures == 0 && checks > 0; }
};

struct SuiteRun {
  std::vector<CriterionResult> criteria;  // ids 1..7
  Json artifact;                          // deterministic, no timings
};

/// Criteria 1..7 once.
SuiteRun run_suite(const SelftestConfig& config);

struct SelftestOutcome {
  std::vector<CriterionResult> criteria;  // ids 1..8
  Json artifact;                          // from the first run
  bool all_passed() const;
};

/// Criteria 1..7, then a second full run compared byte-for-byte (criterion 8).
SelftestOutcome run_selftest(const SelftestConfig& config);

/// One line per criterion: "PASS  3  closed-form counts ...".
std::string format_result(const CriterionResult& c);

/// Worker count: config value, else NEGACYCL_THREADS, else hardware threads.
unsigned resolve_threads(unsigned requested);

}  // namespace negacycl
