#include "negacycl/cosets.hpp"

#include <algorithm>
#include <stdexcept>

#include "negacycl/numtheory.hpp"

namespace negacycl {

CyclotomicCoset coset(std::uint64_t q, std::uint64_t n, std::uint64_t i) {
  if (n == 0) throw std::invalid_argument("coset: modulus must be positive");
  if (nt::gcd(q % n, n) != 1 && n > 1) throw std::invalid_argument("coset: gcd(q, n) != 1");
  if (i >= n) throw std::invalid_argument("coset: residue out of range");
  CyclotomicCoset c{q, n, i, {}};
  std::uint64_t x = i;
  do {
    c.elements.push_back(x);
    x = nt::mul_mod(x, q % n, n);
  } while (x != i);
  std::sort(c.elements.begin(), c.elements.end());
  c.rep = c.elements.front();
  return c;
}

std::vector<CyclotomicCoset> representatives(std::uint64_t q, std::uint64_t n) {
  std::vector<CyclotomicCoset> out;
  std::vector<bool> seen(n, false);
  for (std::uint64_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    out.push_back(coset(q, n, i));
    for (const auto x : out.back().elements) seen[x] = true;
  }
  return out;
}

bool same_parity(const CyclotomicCoset& c) {
  return std::all_of(c.elements.begin(), c.elements.end(),
                     [&](std::uint64_t x) { return x % 2 == c.rep % 2; });
}

bool divides_xn_plus1(std::uint64_t q, unsigned m, std::uint64_t n_prime, std::uint64_t i) {
  const std::uint64_t two_m1 = std::uint64_t{1} << (m + 1);
  const std::uint64_t modulus = two_m1 * n_prime;
  if (n_prime % 2 == 0) throw std::invalid_argument("divides_xn_plus1: n' must be odd");
  if (q % 2 == 0 || nt::gcd(q, modulus) != 1) {
    throw std::invalid_argument("divides_xn_plus1: q must be odd and coprime to 2^{m+1} n'");
  }
  if (i >= modulus) throw std::invalid_argument("divides_xn_plus1: residue out of range");
  const bool odd = i % 2 == 1;
  const bool order_test = nt::additive_ord(i, modulus) % two_m1 == 0;
  if (odd != order_test) throw std::logic_error("divides_xn_plus1: parity and additive-order tests disagree");
  return odd;
}

bool is_srim_coset(std::uint64_t q, std::uint64_t modulus, std::uint64_t i) {
  const auto c = coset(q, modulus, i);
  const bool equal = c.elements == coset(q, modulus, (modulus - i) % modulus).elements;
  if (q % 2 == 1 && equal != nt::is_good(nt::additive_ord(i, modulus), q)) {
    throw std::logic_error("is_srim_coset: coset test disagrees with the good-integer test");
  }
  return equal;
}

bool is_scrim_coset(std::uint64_t q, std::uint64_t modulus, std::uint64_t i) {
  const std::uint64_t q2 = nt::mul_mod(q % modulus, q % modulus, modulus);
  const auto c = coset(q2, modulus, i);
  const std::uint64_t partner = (modulus - nt::mul_mod(q % modulus, i, modulus)) % modulus;
  const bool equal = c.elements == coset(q2, modulus, partner).elements;
  if (q % 2 == 1 && equal != nt::is_oddly_good(nt::additive_ord(i, modulus), q)) {
    throw std::logic_error("is_scrim_coset: coset test disagrees with the oddly-good test");
  }
  return equal;
}

std::map<std::uint64_t, std::vector<CyclotomicCoset>> partition_by_additive_order(
    std::uint64_t q_mult, std::uint64_t modulus, bool odd_only) {
  std::map<std::uint64_t, std::vector<CyclotomicCoset>> groups;
  for (auto& c : representatives(q_mult, modulus)) {
    if (odd_only && c.rep % 2 == 0) continue;
    const std::uint64_t order = nt::additive_ord(c.rep, modulus);
    groups[order].push_back(std::move(c));
  }
  return groups;
}

}  // namespace negacycl
