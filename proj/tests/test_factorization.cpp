#include <algorithm>
#include <stdexcept>

#include "doctest.h"
#include "negacycl/factorization.hpp"
#include "oracle.hpp"

using namespace negacycl;

namespace {

oracle::P codes(const Poly& f) {
  oracle::P out;
  for (const auto c : f.coeffs()) out.push_back(c.code);
  return out;
}

// Factors with multiplicity plus the number of distinct factors fixed by the
// reciprocal map (Euclidean) or the conjugate-reciprocal map (Hermitian).
struct Truth {
  std::vector<oracle::P> factors;
  std::size_t self = 0;
};

Truth brute(const FieldPtr& F, std::size_t n, int sign, std::uint64_t conj_base) {
  const oracle::Ring R{F};
  Truth t;
  t.factors = R.factor(R.binomial(n, sign));
  std::sort(t.factors.begin(), t.factors.end());
  for (std::size_t i = 0; i < t.factors.size(); ++i) {
    if (i > 0 && t.factors[i] == t.factors[i - 1]) continue;
    oracle::P image = R.star(t.factors[i]);
    if (conj_base > 1) image = R.conj(image, conj_base);
    t.self += image == t.factors[i];
  }
  return t;
}

void compare(const FactorizationReport& rep, const Truth& truth) {
  std::vector<oracle::P> got;
  std::size_t self = 0;
  for (const auto& rec : rep.records) {
    for (std::uint64_t k = 0; k < rec.multiplicity; ++k) got.push_back(codes(rec.poly));
    self += rec.self_paired();
  }
  std::sort(got.begin(), got.end());
  CHECK(got == truth.factors);
  CHECK(self == truth.self);
  CHECK(rep.s == self);
  CHECK(rep.r == rep.records.size());
  CHECK(rep.s + 2 * rep.t == rep.r);
}

}  // namespace

TEST_CASE("length decomposition") {
  CHECK(decompose_length(12, 3) == LengthDecomposition{1, 2, 1});
  CHECK(decompose_length(1, 5) == LengthDecomposition{0, 0, 1});
  CHECK(decompose_length(360, 5) == LengthDecomposition{1, 3, 9});
  CHECK_THROWS_AS(decompose_length(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(decompose_length(4, 2), std::invalid_argument);
}

TEST_CASE("mode names") {
  CHECK(parse_mode("euclidean") == Mode::Euclidean);
  CHECK(parse_mode("hermitian") == Mode::Hermitian);
  CHECK(to_string(Mode::Hermitian) == "hermitian");
  CHECK_THROWS_AS(parse_mode("symplectic"), std::invalid_argument);
}

TEST_CASE("x^4 + 1 over F_3") {
  const auto F = FieldCtx::make(3, 1);
  const auto rep = factor_xn(F, 4, -1, Mode::Euclidean);
  REQUIRE(rep.records.size() == 2);
  CHECK(rep.records[0].poly == Poly::from_ints(F, {2, 1, 1}));
  CHECK(rep.records[1].poly == Poly::from_ints(F, {2, 2, 1}));
  CHECK(rep.records[0].partner == std::optional<std::size_t>{1});
  CHECK(rep.records[1].partner == std::optional<std::size_t>{0});
  CHECK(rep.r == 2);
  CHECK(rep.s == 0);
  CHECK(rep.t == 1);
  CHECK(rep.coset_modulus == 8);
  CHECK(verify_report(rep));
}

TEST_CASE("small Euclidean and Hermitian examples") {
  const auto F3 = FieldCtx::make(3, 1);
  const auto one = factor_xn(F3, 1, -1, Mode::Euclidean);
  REQUIRE(one.records.size() == 1);
  CHECK(one.records[0].poly == Poly::from_ints(F3, {1, 1}));
  CHECK(one.records[0].self_paired());

  const auto h2 = factor_xn(F3, 2, -1, Mode::Hermitian);
  CHECK(h2.field->q() == 9);
  CHECK(h2.r == 2);
  CHECK(h2.s == 2);
  CHECK(to_string(h2.records[0].poly) == "[0 1],[1 0]");
  CHECK(to_string(h2.records[1].poly) == "[0 2],[1 0]");

  const auto h7 = factor_xn(F3, 7, -1, Mode::Hermitian);
  CHECK(h7.s == 3);
  CHECK(verify_report(h7));

  const auto rep = factor_xn(F3, 9, -1, Mode::Euclidean);  // (x + 1)^9
  REQUIRE(rep.records.size() == 1);
  CHECK(rep.records[0].multiplicity == 9);
  CHECK_THROWS_AS(factor_xn(FieldCtx::make(3, 1), 0, -1, Mode::Euclidean), std::invalid_argument);
}

TEST_CASE("Euclidean factorizations match trial factoring") {
  for (const std::uint32_t p : {3u, 5u, 7u}) {
    const auto F = FieldCtx::make(p, 1);
    for (std::size_t n = 1; n <= 14; ++n) {
      for (const int sign : {1, -1}) {
        INFO("p=" << p << " n=" << n << " sign=" << sign);
        const auto rep = factor_xn(F, n, sign, Mode::Euclidean);
        CHECK(verify_report(rep));
        compare(rep, brute(F, n, sign, 1));
      }
    }
  }
}

TEST_CASE("Hermitian factorizations over F_9 match trial factoring") {
  const auto F3 = FieldCtx::make(3, 1);
  const auto F9 = FieldCtx::make(3, 2);
  for (std::size_t n = 1; n <= 8; ++n) {
    for (const int sign : {1, -1}) {
      INFO("n=" << n << " sign=" << sign);
      const auto rep = factor_xn(F3, n, sign, Mode::Hermitian);
      CHECK(verify_report(rep));
      compare(rep, brute(F9, n, sign, 3));
    }
  }
}

TEST_CASE("verification rejects mutated reports") {
  const auto F = FieldCtx::make(3, 1);
  const auto good = factor_xn(F, 8, -1, Mode::Euclidean);
  REQUIRE(verify_report(good));

  auto perturbed = good;
  auto c = std::vector<Elem>(perturbed.records[0].poly.coeffs().begin(), perturbed.records[0].poly.coeffs().end());
  c[0] = F->add(c[0], F->one());
  perturbed.records[0].poly = Poly(F, c);
  CHECK_FALSE(verify_report(perturbed));

  const auto h = factor_xn(F, 13, -1, Mode::Euclidean);  // x + 1 and two paired cubics
  auto swapped = h;
  std::size_t self = 0;
  while (self < swapped.records.size() && !swapped.records[self].self_paired()) ++self;
  REQUIRE(self < swapped.records.size());
  std::size_t paired = 0;
  while (paired < swapped.records.size() && swapped.records[paired].self_paired()) ++paired;
  REQUIRE(paired < swapped.records.size());
  swapped.records[paired].partner.reset();
  const auto v = verify_report(swapped);
  CHECK_FALSE(v.ok);
  CHECK_FALSE(v.detail.empty());

  auto recount = good;
  ++recount.r;
  CHECK_FALSE(verify_report(recount));
}
