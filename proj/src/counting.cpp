#include "negacycl/counting.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "negacycl/numtheory.hpp"

namespace negacycl {

namespace {

void require_odd_q(std::uint64_t q, const char* who) {
  if (q < 3 || q % 2 == 0 || !nt::as_prime_power(q)) {
    throw std::invalid_argument(std::string(who) + ": q must be an odd prime power");
  }
}

void require_odd_coprime(std::uint64_t q, std::uint64_t n_prime, const char* who) {
  if (n_prime == 0 || n_prime % 2 == 0) throw std::invalid_argument(std::string(who) + ": n' must be odd");
  if (nt::gcd(q, n_prime) != 1) throw std::invalid_argument(std::string(who) + ": gcd(n', q) != 1");
}

// One term phi(x)/ord(mult, x) when member, else zero.
CountTerm make_term(std::uint64_t d, std::uint64_t tested, bool member, std::uint64_t mult) {
  CountTerm t;
  t.d = d;
  t.member = member;
  t.phi = nt::euler_phi(tested);
  t.ord = nt::mult_ord(mult % tested, tested);
  if (member) {
    if (t.phi % t.ord != 0) throw std::logic_error("count term phi/ord is not an integer");
    t.contribution = t.phi / t.ord;
  }
  return t;
}

CountBreakdown cyclic_count(std::uint64_t q, std::uint64_t n, CountKind kind, const char* who) {
  require_odd_q(q, who);
  if (n == 0) throw std::invalid_argument(std::string(who) + ": n must be positive");
  if (nt::gcd(n, q) != 1) throw std::invalid_argument(std::string(who) + ": gcd(n, q) != 1");
  CountBreakdown b;
  b.q = q;
  b.nu = nt::two_adic_nu(q);
  b.m = nt::exact_divide(2, n);
  b.n_prime = n >> b.m;
  const std::uint64_t mult = kind == CountKind::Srim ? q : q * q;
  for (const auto d : nt::divisors(n)) {
    const bool member = kind == CountKind::Srim ? nt::is_good(d, q) : nt::is_oddly_good(d, q);
    b.terms.push_back(make_term(d, d, member, mult));
    b.total += b.terms.back().contribution;
  }
  return b;
}

CountBreakdown negacyclic_count(std::uint64_t q, unsigned m, std::uint64_t n_prime, CountKind kind,
                                const char* who) {
  require_odd_q(q, who);
  require_odd_coprime(q, n_prime, who);
  if (m > 40) throw std::invalid_argument(std::string(who) + ": m out of range");
  CountBreakdown b;
  b.q = q;
  b.m = m;
  b.n_prime = n_prime;
  b.nu = nt::two_adic_nu(q);
  const std::uint64_t mult = kind == CountKind::Srim ? q : q * q;
  const std::uint64_t two_m1 = std::uint64_t{1} << (m + 1);
  for (const auto d : nt::divisors(n_prime)) {
    const std::uint64_t tested = two_m1 * d;
    const bool member = kind == CountKind::Srim ? nt::is_good(tested, q) : nt::is_oddly_good(tested, q);
    b.terms.push_back(make_term(d, tested, member, mult));
    b.total += b.terms.back().contribution;
  }
  if (m >= b.nu && b.total != 0) throw std::logic_error("negacyclic count nonzero although m >= nu");
  return b;
}

struct OddPartCounts {
  std::uint64_t a = 0;  // |SRIM_{q,n'}(1)|
  std::uint64_t b = 0;  // |SRIM_{q^2,n'}(1)|
  unsigned nu = 0;
};

OddPartCounts odd_part(std::uint64_t q, std::uint64_t n_prime, const char* who) {
  require_odd_q(q, who);
  require_odd_coprime(q, n_prime, who);
  return {count_srim_cyclic(q, n_prime).total, count_srim_cyclic(q * q, n_prime).total, nt::two_adic_nu(q)};
}

std::uint64_t pow2(unsigned k) {
  if (k >= 63) throw std::overflow_error("2^k out of range");
  return std::uint64_t{1} << k;
}

}  // namespace

CountBreakdown count_srim_cyclic(std::uint64_t q, std::uint64_t n) {
  return cyclic_count(q, n, CountKind::Srim, "count_srim_cyclic");
}

CountBreakdown count_scrim_cyclic(std::uint64_t q, std::uint64_t n) {
  return cyclic_count(q, n, CountKind::Scrim, "count_scrim_cyclic");
}

CountBreakdown count_srim_negacyclic(std::uint64_t q, unsigned m, std::uint64_t n_prime) {
  return negacyclic_count(q, m, n_prime, CountKind::Srim, "count_srim_negacyclic");
}

CountBreakdown count_scrim_negacyclic(std::uint64_t q, unsigned m, std::uint64_t n_prime) {
  return negacyclic_count(q, m, n_prime, CountKind::Scrim, "count_scrim_negacyclic");
}

bool lem2_check(std::uint64_t q, std::uint64_t n, CountKind kind) {
  const unsigned m = nt::exact_divide(2, n);
  const std::uint64_t n_prime = n >> m;
  if (kind == CountKind::Srim) {
    return count_srim_negacyclic(q, m, n_prime).total + count_srim_cyclic(q, n).total ==
           count_srim_cyclic(q, 2 * n).total;
  }
  return count_scrim_negacyclic(q, m, n_prime).total + count_scrim_cyclic(q, n).total ==
         count_scrim_cyclic(q, 2 * n).total;
}

// Cosets of additive order 2^beta d (beta >= 2, d | n') contribute
// 2^{beta-2}(2A - B) SRIM factors when beta <= nu and none otherwise, which
// sums to (2^{min(m,nu)-1} - 1)(2A - B) above the 2A from beta <= 1.
std::uint64_t count_srim_cyclic_recursive(std::uint64_t q, unsigned m, std::uint64_t n_prime) {
  const auto c = odd_part(q, n_prime, "count_srim_cyclic_recursive");
  if (m == 0) return c.a;
  if (m == 1 || c.nu == 1) return 2 * c.a;
  return 2 * c.a + (pow2(std::min(m, c.nu) - 1) - 1) * (2 * c.a - c.b);
}

std::uint64_t count_srim_negacyclic_recursive(std::uint64_t q, unsigned m, std::uint64_t n_prime) {
  const auto c = odd_part(q, n_prime, "count_srim_negacyclic_recursive");
  if (m == 0) return c.a;
  if (m >= c.nu) return 0;
  return pow2(m - 1) * (2 * c.a - c.b);
}

std::uint64_t count_scrim_cyclic_recursive(std::uint64_t q, unsigned m, std::uint64_t n_prime) {
  require_odd_q(q, "count_scrim_cyclic_recursive");
  require_odd_coprime(q, n_prime, "count_scrim_cyclic_recursive");
  const std::uint64_t c = count_scrim_cyclic(q, n_prime).total;
  return pow2(std::min(m, nt::two_adic_nu(q))) * c;
}

std::uint64_t count_scrim_negacyclic_recursive(std::uint64_t q, unsigned m, std::uint64_t n_prime) {
  require_odd_q(q, "count_scrim_negacyclic_recursive");
  require_odd_coprime(q, n_prime, "count_scrim_negacyclic_recursive");
  if (m >= nt::two_adic_nu(q)) return 0;
  return pow2(m) * count_scrim_cyclic(q, n_prime).total;
}

std::uint64_t count_srim_cyclic_as_printed(std::uint64_t q, unsigned m, std::uint64_t n_prime) {
  const auto c = odd_part(q, n_prime, "count_srim_cyclic_as_printed");
  if (m == 0) return c.a;
  if (m == 1 || c.nu == 1) return 2 * c.a;
  return 2 * c.a + (pow2(std::min(m, c.nu)) - 1) * (2 * c.a - c.b);
}

std::uint64_t count_srim_negacyclic_as_printed(std::uint64_t q, unsigned m, std::uint64_t n_prime) {
  const auto c = odd_part(q, n_prime, "count_srim_negacyclic_as_printed");
  if (m == 0) return c.a;
  if (m >= c.nu) return 0;
  if (m == 1) return 3 * (2 * c.a - c.b);
  return pow2(m) * (2 * c.a - c.b);
}

std::string_view to_string(ExtremeClass c) {
  switch (c) {
    case ExtremeClass::AllSelf: return "all-self";
    case ExtremeClass::OnlyXPlusOne: return "only-x+1";
    case ExtremeClass::Mixed: return "mixed";
  }
  return "mixed";
}

namespace {

// 2-adic valuation of ord_l(q) for each prime l | n.
std::vector<unsigned> order_valuations(std::uint64_t q, std::uint64_t n, const char* who) {
  require_odd_q(q, who);
  require_odd_coprime(q, n, who);
  std::vector<unsigned> out;
  for (const auto l : nt::factorize(n).primes()) out.push_back(nt::exact_divide(2, nt::mult_ord(q % l, l)));
  return out;
}

}  // namespace

ExtremeClass classify_extreme_srim(std::uint64_t q, std::uint64_t n) {
  const auto s = order_valuations(q, n, "classify_extreme_srim");
  if (s.empty()) return ExtremeClass::AllSelf;
  if (s.front() >= 1 && std::all_of(s.begin(), s.end(), [&](unsigned v) { return v == s.front(); })) {
    return ExtremeClass::AllSelf;
  }
  if (std::all_of(s.begin(), s.end(), [](unsigned v) { return v == 0; })) return ExtremeClass::OnlyXPlusOne;
  return ExtremeClass::Mixed;
}

ExtremeClass classify_extreme_scrim(std::uint64_t q, std::uint64_t n) {
  const auto s = order_valuations(q, n, "classify_extreme_scrim");
  if (std::all_of(s.begin(), s.end(), [](unsigned v) { return v == 1; })) return ExtremeClass::AllSelf;
  if (std::none_of(s.begin(), s.end(), [](unsigned v) { return v == 1; })) return ExtremeClass::OnlyXPlusOne;
  return ExtremeClass::Mixed;
}

namespace {

struct TwoPrime {
  std::uint64_t l1, l2;
  unsigned r1, r2, s1, s2;
};

TwoPrime two_prime_setup(std::uint64_t q, std::uint64_t l1, unsigned r1, std::uint64_t l2, unsigned r2,
                         const char* who) {
  require_odd_q(q, who);
  if (l1 == l2) throw std::invalid_argument(std::string(who) + ": l1 and l2 must differ");
  for (const auto l : {l1, l2}) {
    if (l < 3 || !nt::is_prime(l) || q % l == 0) {
      throw std::invalid_argument(std::string(who) + ": l1, l2 must be odd primes not dividing q");
    }
  }
  if (r1 == 0 || r2 == 0) throw std::invalid_argument(std::string(who) + ": r1, r2 must be positive");
  return {l1, l2, r1, r2, nt::exact_divide(2, nt::mult_ord(q % l1, l1)),
          nt::exact_divide(2, nt::mult_ord(q % l2, l2))};
}

// sum_{i <= r1, j <= r2} phi(l1^i l2^j) / ord(mult, l1^i l2^j)
std::uint64_t double_sum(std::uint64_t mult, const TwoPrime& t) {
  std::uint64_t total = 0;
  for (unsigned i = 0; i <= t.r1; ++i) {
    for (unsigned j = 0; j <= t.r2; ++j) {
      const std::uint64_t d = nt::ipow(t.l1, i) * nt::ipow(t.l2, j);
      total += nt::euler_phi(d) / nt::mult_ord(mult % d, d);
    }
  }
  return total;
}

}  // namespace

std::uint64_t count_two_prime_srim(std::uint64_t q, std::uint64_t l1, unsigned r1, std::uint64_t l2,
                                   unsigned r2) {
  const auto t = two_prime_setup(q, l1, r1, l2, r2, "count_two_prime_srim");
  const auto single = [&](std::uint64_t l, unsigned r) { return count_srim_negacyclic(q, 0, nt::ipow(l, r)).total; };
  if (t.s1 == 0 && t.s2 == 0) return 1;
  if (t.s2 == 0) return single(t.l1, t.r1);
  if (t.s1 == 0) return single(t.l2, t.r2);
  if (t.s1 != t.s2) return single(t.l1, t.r1) + single(t.l2, t.r2) - 1;
  return double_sum(q, t);
}

std::uint64_t count_two_prime_scrim(std::uint64_t q, std::uint64_t l1, unsigned r1, std::uint64_t l2,
                                    unsigned r2) {
  const auto t = two_prime_setup(q, l1, r1, l2, r2, "count_two_prime_scrim");
  const auto single = [&](std::uint64_t l, unsigned r) {
    return count_scrim_negacyclic(q, 0, nt::ipow(l, r)).total;
  };
  if (t.s1 != 1 && t.s2 != 1) return 1;
  if (t.s2 != 1) return single(t.l1, t.r1);
  if (t.s1 != 1) return single(t.l2, t.r2);
  return double_sum(q * q, t);
}

}  // namespace negacycl
