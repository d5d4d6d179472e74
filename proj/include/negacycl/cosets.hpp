// Cyclotomic cosets Cl_{q,n}(i) and the arithmetic classification of the
// factors of x^n +- 1 they index.
#pragma once

#include <cstdint>
#include <map>
#include <vector>

namespace negacycl {

struct CyclotomicCoset {
  std::uint64_t q = 0;
  std::uint64_t n = 1;
  std::uint64_t rep = 0;
  std::vector<std::uint64_t> elements;  // sorted ascending, rep = front()

  std::size_t size() const { return elements.size(); }
  friend bool operator==(const CyclotomicCoset&, const CyclotomicCoset&) = default;
};

/// Orbit of i under multiplication by q modulo n. Requires gcd(q, n) = 1.
CyclotomicCoset coset(std::uint64_t q, std::uint64_t n, std::uint64_t i);

/// All cosets of q modulo n, ordered by representative.
std::vector<CyclotomicCoset> representatives(std::uint64_t q, std::uint64_t n);

/// Whether all members share one parity (always true for odd q, even n).
bool same_parity(const CyclotomicCoset& c);

/// f_i divides x^{2^m n'} + 1, i.e. i is odd; also checks that this matches
/// 2^{m+1} | o^+(i) modulo 2^{m+1} n'.
bool divides_xn_plus1(std::uint64_t q, unsigned m, std::uint64_t n_prime, std::uint64_t i);

/// Cl_{q,N}(i) == Cl_{q,N}(-i), cross-checked against is_good(o^+(i), q).
bool is_srim_coset(std::uint64_t q, std::uint64_t modulus, std::uint64_t i);

/// Cl_{q^2,N}(i) == Cl_{q^2,N}(-q i), cross-checked against is_oddly_good(o^+(i), q).
bool is_scrim_coset(std::uint64_t q, std::uint64_t modulus, std::uint64_t i);

/// Cosets of q_mult modulo N grouped by the additive order of their members;
/// with odd_only, only cosets of odd residues are kept.
std::map<std::uint64_t, std::vector<CyclotomicCoset>> partition_by_additive_order(
    std::uint64_t q_mult, std::uint64_t modulus, bool odd_only);

}  // namespace negacycl
