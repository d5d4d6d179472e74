#include "negacycl/numtheory.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace negacycl::nt {

namespace {

void require_capped(std::uint64_t n, const char* what) {
  if (n > kInputCap) {
    throw std::invalid_argument(std::string(what) + ": input exceeds 2^32");
  }
}

void require_odd_coprime(std::uint64_t d, std::uint64_t q) {
  if (d == 0) throw std::invalid_argument("good-integer test: d must be positive");
  if (q % 2 == 0) throw std::invalid_argument("good-integer test: q must be odd");
  if (gcd(d, q) != 1) throw std::invalid_argument("good-integer test: gcd(d, q) != 1");
}

}  // namespace

PrimePower PrimePower::make(std::uint64_t p, unsigned e) {
  if (!is_prime(p)) throw std::invalid_argument("PrimePower: p is not prime");
  if (e == 0) throw std::invalid_argument("PrimePower: exponent must be >= 1");
  return PrimePower{p, e, ipow(p, e)};
}

std::vector<std::uint64_t> FactoredInt::primes() const {
  std::vector<std::uint64_t> out;
  out.reserve(factors.size());
  for (const auto& [prime, exp] : factors) out.push_back(prime);
  return out;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

FactoredInt factorize(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("factorize: n must be positive");
  FactoredInt out;
  out.value = n;
  for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    unsigned k = 0;
    while (n % d == 0) {
      n /= d;
      ++k;
    }
    if (k > 0) out.factors.emplace_back(d, k);
  }
  if (n > 1) out.factors.emplace_back(n, 1);
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out{1};
  for (const auto& [prime, exp] : factorize(n).factors) {
    const std::size_t base = out.size();
    std::uint64_t pk = 1;
    for (unsigned k = 1; k <= exp; ++k) {
      pk *= prime;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

std::uint64_t lcm(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a / gcd(a, b) * b;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t k, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("pow_mod: modulus must be positive");
  std::uint64_t result = 1 % n;
  a %= n;
  while (k > 0) {
    if (k & 1U) result = mul_mod(result, a, n);
    a = mul_mod(a, a, n);
    k >>= 1U;
  }
  return result;
}

std::uint64_t ipow(std::uint64_t a, unsigned k) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (a != 0 && r > std::numeric_limits<std::uint64_t>::max() / a) {
      throw std::overflow_error("ipow: result exceeds 64 bits");
    }
    r *= a;
  }
  return r;
}

std::uint64_t euler_phi(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("euler_phi: n must be positive");
  std::uint64_t phi = n;
  for (const auto& [prime, exp] : factorize(n).factors) phi = phi / prime * (prime - 1);
  return phi;
}

std::uint64_t mult_ord(std::uint64_t a, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("mult_ord: n must be positive");
  require_capped(n, "mult_ord");
  if (n == 1) return 1;
  if (gcd(a % n, n) != 1) throw std::invalid_argument("mult_ord: gcd(a, n) != 1");
  // The order divides phi(n); strip prime factors while a^k stays 1.
  std::uint64_t k = euler_phi(n);
  for (const auto& [prime, exp] : factorize(k).factors) {
    for (unsigned i = 0; i < exp && k % prime == 0; ++i) {
      if (pow_mod(a, k / prime, n) != 1) break;
      k /= prime;
    }
  }
  return k;
}

std::uint64_t additive_ord(std::uint64_t i, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("additive_ord: n must be positive");
  return n / gcd(i % n, n);
}

unsigned exact_divide(std::uint64_t p, std::uint64_t j) {
  if (j == 0) throw std::invalid_argument("exact_divide: j must be positive");
  if (p < 2) throw std::invalid_argument("exact_divide: p must be prime");
  unsigned i = 0;
  while (j % p == 0) {
    j /= p;
    ++i;
  }
  return i;
}

unsigned two_adic_nu(std::uint64_t q) { return exact_divide(2, q + 1); }

std::optional<PrimePower> as_prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  const auto f = factorize(q);
  if (f.factors.size() != 1) return std::nullopt;
  return PrimePower{f.factors[0].first, f.factors[0].second, q};
}

bool is_good(std::uint64_t d, std::uint64_t q) {
  require_odd_coprime(d, q);
  require_capped(d, "is_good");
  if (d == 1) return true;
  const unsigned beta = exact_divide(2, d);
  const std::uint64_t odd = d >> beta;
  if (beta == 0) {
    // One common s >= 1 with 2^s || ord_l(q) for every prime l | d.
    std::optional<unsigned> common;
    for (const auto l : factorize(odd).primes()) {
      const unsigned s = exact_divide(2, mult_ord(q, l));
      if (s == 0) return false;
      if (common && *common != s) return false;
      common = s;
    }
    return true;
  }
  if (beta == 1) return odd == 1 || is_good(odd, q);
  if ((q + 1) % (std::uint64_t{1} << beta) != 0) return false;
  for (const auto l : factorize(odd).primes()) {
    if (exact_divide(2, mult_ord(q, l)) != 1) return false;
  }
  return true;
}

bool is_oddly_good(std::uint64_t d, std::uint64_t q) {
  require_odd_coprime(d, q);
  require_capped(d, "is_oddly_good");
  if (d == 1) return true;
  const unsigned beta = exact_divide(2, d);
  const std::uint64_t odd = d >> beta;
  if (beta == 1) return odd == 1 || is_oddly_good(odd, q);
  if (beta >= 2 && (q + 1) % (std::uint64_t{1} << beta) != 0) return false;
  for (const auto l : factorize(odd).primes()) {
    if (exact_divide(2, mult_ord(q, l)) != 1) return false;
  }
  return true;
}

namespace {

// Residues q^k mod d repeat with period ord_d(q); two periods contain an odd
// index in every residue class.
template <class Accept>
bool scan_powers(std::uint64_t d, std::uint64_t q, Accept accept) {
  require_odd_coprime(d, q);
  require_capped(d, "good-integer oracle");
  const std::uint64_t bound = 2 * mult_ord(q, d);
  std::uint64_t power = 1 % d;
  for (std::uint64_t k = 1; k <= bound; ++k) {
    power = mul_mod(power, q % d, d);
    if (power == (d - 1) % d && accept(k)) return true;
  }
  return false;
}

}  // namespace

bool is_good_oracle(std::uint64_t d, std::uint64_t q) {
  return scan_powers(d, q, [](std::uint64_t) { return true; });
}

bool is_oddly_good_oracle(std::uint64_t d, std::uint64_t q) {
  return scan_powers(d, q, [](std::uint64_t k) { return k % 2 == 1; });
}

}  // namespace negacycl::nt
