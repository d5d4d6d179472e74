// Closed-form and recursive counts of self-reciprocal (SRIM) and
// self-conjugate-reciprocal (SCRIM) irreducible factors of x^n - 1 and
// x^n + 1, plus the extreme-case classifiers and two-prime counts.
//
// Every count here is pure integer arithmetic; ground truth comes from
// factor_xn in factorization.hpp.
#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace negacycl {

struct CountTerm {
  std::uint64_t d = 1;        // divisor of n (cyclic) or n' (negacyclic)
  bool member = false;        // the tested integer lies in G_(q,1) / OG_(q,1)
  std::uint64_t phi = 0;      // phi of the tested integer
  std::uint64_t ord = 0;      // its multiplicative order of q or q^2
  std::uint64_t contribution = 0;
};

struct CountBreakdown {
  std::uint64_t q = 0;
  unsigned m = 0;
  std::uint64_t n_prime = 1;
  unsigned nu = 0;
  std::vector<CountTerm> terms;
  std::uint64_t total = 0;
};

// Cyclic counts sum over d | n; the breakdown records m and n' of n = 2^m n'.
CountBreakdown count_srim_cyclic(std::uint64_t q, std::uint64_t n);
CountBreakdown count_scrim_cyclic(std::uint64_t q, std::uint64_t n);
// Negacyclic counts for x^{2^m n'} + 1 sum over d | n' with 2^{m+1} d tested.
CountBreakdown count_srim_negacyclic(std::uint64_t q, unsigned m, std::uint64_t n_prime);
CountBreakdown count_scrim_negacyclic(std::uint64_t q, unsigned m, std::uint64_t n_prime);

enum class CountKind { Srim, Scrim };

/// count(x^n + 1) == count(x^{2n} - 1) - count(x^n - 1) for the given kind.
bool lem2_check(std::uint64_t q, std::uint64_t n, CountKind kind);

// Recursions in m from the odd-part counts A = |SRIM_{q,n'}(1)|,
// B = |SRIM_{q^2,n'}(1)| and C = |SCRIM_{q^2,n'}(1)|.
std::uint64_t count_srim_cyclic_recursive(std::uint64_t q, unsigned m, std::uint64_t n_prime);
std::uint64_t count_srim_negacyclic_recursive(std::uint64_t q, unsigned m, std::uint64_t n_prime);
std::uint64_t count_scrim_cyclic_recursive(std::uint64_t q, unsigned m, std::uint64_t n_prime);
std::uint64_t count_scrim_negacyclic_recursive(std::uint64_t q, unsigned m, std::uint64_t n_prime);

// The two SRIM recursions in their uncorrected form. They disagree with the
// direct counts once m >= 1 and nu >= 2, e.g. 5 instead of 3 for x^4 - 1
// over F_3; kept for display only.
std::uint64_t count_srim_cyclic_as_printed(std::uint64_t q, unsigned m, std::uint64_t n_prime);
std::uint64_t count_srim_negacyclic_as_printed(std::uint64_t q, unsigned m, std::uint64_t n_prime);

enum class ExtremeClass { AllSelf, OnlyXPlusOne, Mixed };

std::string_view to_string(ExtremeClass c);

/// For odd n coprime to q. n = 1 reports AllSelf.
ExtremeClass classify_extreme_srim(std::uint64_t q, std::uint64_t n);
ExtremeClass classify_extreme_scrim(std::uint64_t q, std::uint64_t n);

/// |SRIM_{q, l1^r1 l2^r2}(-1)| by the case split on the 2-adic valuations of
/// ord_{l1}(q) and ord_{l2}(q).
std::uint64_t count_two_prime_srim(std::uint64_t q, std::uint64_t l1, unsigned r1, std::uint64_t l2,
                                   unsigned r2);
/// |SCRIM_{q^2, l1^r1 l2^r2}(-1)|, same shape.
std::uint64_t count_two_prime_scrim(std::uint64_t q, std::uint64_t l1, unsigned r1, std::uint64_t l2,
                                    unsigned r2);

}  // namespace negacycl
