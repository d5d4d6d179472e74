// Integer arithmetic used throughout: factorization, totient, orders and the
// good / oddly-good predicates with respect to (q, 1).
//
// Inputs are capped at 2^32 so that products modulo n fit in 64 bits.
#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace negacycl::nt {

inline constexpr std::uint64_t kInputCap = std::uint64_t{1} << 32;

struct PrimePower {
  std::uint64_t p = 0;
  unsigned e = 0;
  std::uint64_t q = 0;

  /// Throws std::invalid_argument unless p is prime and e >= 1.
  static PrimePower make(std::uint64_t p, unsigned e);
};

struct FactoredInt {
  std::uint64_t value = 1;
  std::vector<std::pair<std::uint64_t, unsigned>> factors;  // ascending primes

  std::vector<std::uint64_t> primes() const;
};

bool is_prime(std::uint64_t n);
FactoredInt factorize(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);  // ascending

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm(std::uint64_t a, std::uint64_t b);
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t n);
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t k, std::uint64_t n);
/// Exact integer power; throws std::overflow_error past 2^64.
std::uint64_t ipow(std::uint64_t a, unsigned k);

std::uint64_t euler_phi(std::uint64_t n);
/// Least k >= 1 with a^k = 1 (mod n). Requires gcd(a, n) = 1.
std::uint64_t mult_ord(std::uint64_t a, std::uint64_t n);
/// n / gcd(i, n).
std::uint64_t additive_ord(std::uint64_t i, std::uint64_t n);
/// The i with p^i || j.
unsigned exact_divide(std::uint64_t p, std::uint64_t j);
/// nu with 2^nu || (q + 1).
unsigned two_adic_nu(std::uint64_t q);

/// q = p^e with p prime, or nullopt.
std::optional<PrimePower> as_prime_power(std::uint64_t q);

// Membership in G_(q,1) and OG_(q,1), decided from the multiplicative
// orders of q modulo the prime divisors of d (no search).
bool is_good(std::uint64_t d, std::uint64_t q);
bool is_oddly_good(std::uint64_t d, std::uint64_t q);

// Brute-force definitions: scan q^k mod d for k = 1 .. 2 ord_d(q).
bool is_good_oracle(std::uint64_t d, std::uint64_t q);
bool is_oddly_good_oracle(std::uint64_t d, std::uint64_t q);

}  // namespace negacycl::nt
