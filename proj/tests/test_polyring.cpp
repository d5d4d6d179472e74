#include <random>
#include <stdexcept>

#include "doctest.h"
#include "negacycl/polyring.hpp"
#include "oracle.hpp"

using namespace negacycl;

namespace {

Poly from_codes(const FieldPtr& F, const oracle::P& a) {
  std::vector<Elem> c;
  for (const auto x : a) c.push_back(Elem{x});
  return Poly(F, c);
}

oracle::P codes(const Poly& f) {
  oracle::P out;
  for (const auto c : f.coeffs()) out.push_back(c.code);
  return out;
}

Poly random_poly(const FieldPtr& F, std::mt19937_64& rng, int deg) {
  std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(F->q() - 1));
  std::vector<Elem> c(deg + 1);
  for (auto& x : c) x = Elem{pick(rng)};
  if (c.back().is_zero()) c.back() = F->one();
  return Poly(F, c);
}

}  // namespace

TEST_CASE("division examples over F_3") {
  const auto F = FieldCtx::make(3, 1);
  const Poly f = Poly::binomial(F, 4, -1);  // x^4 + 1
  const Poly g = Poly::from_ints(F, {2, 1, 1});
  const auto [quot, rem] = divrem(f, g);
  CHECK(quot == Poly::from_ints(F, {2, 2, 1}));
  CHECK(rem.is_zero());
  CHECK(exact_div(f, g) == quot);
  CHECK_THROWS_AS(exact_div(f, Poly::from_ints(F, {1, 1})), std::domain_error);
  CHECK_THROWS_AS(divrem(f, Poly(F)), std::domain_error);
  CHECK(gcd(f, g) == g);
  CHECK(gcd(Poly(F), Poly(F)).is_zero());
  CHECK(gcd(Poly::binomial(F, 6, 1), Poly::binomial(F, 4, 1)) == Poly::binomial(F, 2, 1));
  CHECK(lcm(Poly::from_ints(F, {1, 1}), Poly::from_ints(F, {2, 1})) == Poly::binomial(F, 2, 1));
}

TEST_CASE("arithmetic matches the naive ring") {
  std::mt19937_64 rng(7);
  for (const auto [p, e] : {std::pair{3u, 1u}, {5u, 1u}, {3u, 2u}, {7u, 2u}}) {
    const auto F = FieldCtx::make(p, e);
    const oracle::Ring R{F};
    for (int k = 0; k < 60; ++k) {
      const Poly a = random_poly(F, rng, k % 9);
      const Poly b = random_poly(F, rng, 1 + k % 5).monic();
      CHECK(codes(a * b) == R.mul(codes(a), codes(b)));
      oracle::P quot;
      const oracle::P rem = R.rem(codes(a), codes(b), &quot);
      R.trim(quot);
      const auto dr = divrem(a, b);
      CHECK(codes(dr.rem) == rem);
      CHECK(codes(dr.quot) == quot);
      CHECK(dr.quot * b + dr.rem == a);
      const Poly m = random_poly(F, rng, 4).monic();
      CHECK(mul_mod(a, b, m) == (a * b) % m);
      CHECK(pow_mod(b, 5, m) == pow(b, 5) % m);
      const Poly g = gcd(a, b);
      CHECK((a % g).is_zero());
      CHECK((b % g).is_zero());
    }
  }
}

TEST_CASE("reciprocal and conjugate examples") {
  const auto F = FieldCtx::make(3, 1);
  CHECK(reciprocal_star(Poly::from_ints(F, {2, 1, 1})) == Poly::from_ints(F, {2, 2, 1}));
  CHECK(is_self_reciprocal(Poly::from_ints(F, {1, 1})));
  CHECK(is_self_reciprocal(Poly::from_ints(F, {1, 0, 1})));
  CHECK_FALSE(is_self_reciprocal(Poly::from_ints(F, {2, 1, 1})));
  CHECK_THROWS(reciprocal_star(Poly::from_ints(F, {0, 1})));

  const auto F9 = FieldCtx::make(3, 2);
  // The dagger of x - a is x - a^{-3}, so x - a is fixed exactly when a^4 = 1.
  for (std::uint32_t a = 1; a < 9; ++a) {
    const Poly f(F9, {F9->neg(Elem{a}), F9->one()});
    const bool expected = F9->pow(Elem{a}, 4) == F9->one();
    CHECK(is_self_conj_reciprocal(f, 3) == expected);
    const Poly d = dagger(f, 3);
    CHECK(d == Poly(F9, {F9->neg(F9->inv(F9->pow(Elem{a}, 3))), F9->one()}));
  }
}

TEST_CASE("involutions and multiplicativity") {
  std::mt19937_64 rng(99);
  for (const auto [p, e] : {std::pair{3u, 2u}, {5u, 2u}, {3u, 4u}}) {
    const auto F = FieldCtx::make(p, e);
    const oracle::Ring R{F};
    std::uint64_t half = 1;
    for (unsigned i = 0; i < e / 2; ++i) half *= p;
    for (int k = 0; k < 40; ++k) {
      Poly a = random_poly(F, rng, 1 + k % 7);
      Poly b = random_poly(F, rng, 1 + k % 4);
      if (a.coeff(0).is_zero()) a = a + Poly::constant(F, F->one());
      if (b.coeff(0).is_zero()) b = b + Poly::constant(F, F->one());
      CHECK(codes(reciprocal_star(a)) == R.star(codes(a)));
      CHECK(codes(conjugate(a, half)) == R.conj(codes(a), half));
      CHECK(reciprocal_star(reciprocal_star(a)) == a.monic());
      CHECK(conjugate(conjugate(a, half), half) == a);
      CHECK(dagger(dagger(a, half), half) == a.monic());
      CHECK(reciprocal_star(a * b) == reciprocal_star(a) * reciprocal_star(b));
      CHECK(dagger(a * b, half) == dagger(a, half) * dagger(b, half));
      CHECK(conjugate(a * b, half) == conjugate(a, half) * conjugate(b, half));
    }
  }
}

TEST_CASE("irreducibility against trial division by the naive ring") {
  for (const auto [p, e, dmax] : {std::tuple{3u, 1u, 6u}, {5u, 1u, 4u}, {3u, 2u, 3u}}) {
    const auto F = FieldCtx::make(p, e);
    const oracle::Ring R{F};
    for (std::size_t d = 1; d <= dmax; ++d) {
      std::size_t irreducible = 0;
      R.each_monic(d, [&](const oracle::P& a) {
        const Poly f = from_codes(F, a);
        const bool truth = R.factor(a).size() == 1;
        CHECK(is_irreducible(f) == truth);
        CHECK(is_irreducible_trial(f) == truth);
        irreducible += truth;
        return true;
      });
      // Necklace count: (1/d) sum_{k | d} mu(d/k) Q^k, computed independently.
      long long total = 0;
      const long long Q = static_cast<long long>(F->q());
      for (std::size_t k = 1; k <= d; ++k) {
        if (d % k) continue;
        std::size_t r = d / k, sq = 0;
        int sign = 1;
        for (std::size_t l = 2; l <= r; ++l) {
          if (r % l) continue;
          r /= l;
          sign = -sign;
          if (r % l == 0) sq = 1;
          while (r % l == 0) r /= l;
        }
        if (sq) continue;
        long long pw = 1;
        for (std::size_t i = 0; i < k; ++i) pw *= Q;
        total += sign * pw;
      }
      CHECK(irreducible == static_cast<std::size_t>(total) / d);
    }
  }
}

TEST_CASE("text round trip") {
  const auto F9 = FieldCtx::make(3, 2);
  const Poly f = parse_poly(F9, "[1 2],0,2,1");
  CHECK(f.degree() == 3);
  CHECK(to_string(f) == "[1 2],[0 0],[2 0],[1 0]");
  CHECK(parse_poly(F9, to_string(f)) == f);
  const auto F3 = FieldCtx::make(3, 1);
  CHECK(to_string(Poly::binomial(F3, 4, -1)) == "1,0,0,0,1");
  CHECK(parse_poly(F3, "1,0,0,0,1") == Poly::binomial(F3, 4, -1));
  CHECK_THROWS_AS(parse_poly(F3, "1,,2"), std::invalid_argument);
  CHECK(canonical_less(Poly::from_ints(F3, {2, 1}), Poly::from_ints(F3, {1, 0, 1})));
  CHECK(canonical_less(Poly::from_ints(F3, {1, 1}), Poly::from_ints(F3, {2, 1})));
}
