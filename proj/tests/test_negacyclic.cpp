#include <algorithm>
#include <stdexcept>

#include "doctest.h"
#include "negacycl/negacyclic.hpp"
#include "oracle.hpp"

using namespace negacycl;

namespace {

Poly from_codes(const FieldPtr& F, const oracle::P& a) {
  std::vector<Elem> c;
  for (const auto x : a) c.push_back(Elem{x});
  return Poly(F, c);
}

// Every monic divisor of x^n + 1, found by trial division.
std::vector<oracle::P> divisors(const oracle::Ring& R, std::size_t n) {
  const oracle::P f = R.binomial(n, -1);
  std::vector<oracle::P> out;
  for (std::size_t d = 0; d <= n; ++d) {
    R.each_monic(d, [&](const oracle::P& g) {
      if (R.rem(f, g).empty()) out.push_back(g);
      return true;
    });
  }
  return out;
}

// Dual by exhaustive search over all vectors: the least-degree monic vector
// orthogonal to every shift x^i g, and the size of the orthogonal space.
struct DenseDual {
  oracle::P gen;
  std::uint64_t size = 0;
};

DenseDual exhaustive_dual(const oracle::Ring& R, std::size_t n, const oracle::P& g, std::uint64_t conj_base) {
  const auto& F = *R.F;
  std::vector<oracle::P> rows;
  const oracle::P mod = R.binomial(n, -1);
  for (std::size_t i = 0; i + g.size() <= n; ++i) {
    oracle::P s(i, 0);
    s.insert(s.end(), g.begin(), g.end());
    s = R.rem(s, mod);
    s.resize(n, 0);
    rows.push_back(s);
  }
  DenseDual out;
  std::size_t best = n + 1;
  const std::uint32_t q = static_cast<std::uint32_t>(F.q());
  oracle::P v(n, 0);
  for (;;) {
    bool orthogonal = true;
    for (const auto& row : rows) {
      Elem acc{};
      for (std::size_t i = 0; i < n; ++i) {
        Elem y{v[i]};
        if (conj_base > 1) y = F.pow(y, conj_base);
        acc = F.add(acc, F.mul(Elem{row[i]}, y));
      }
      if (!acc.is_zero()) {
        orthogonal = false;
        break;
      }
    }
    if (orthogonal) {
      ++out.size;
      oracle::P t = v;
      R.trim(t);
      if (!t.empty() && t.back() == 1 && t.size() - 1 < best) {
        best = t.size() - 1;
        out.gen = t;
      }
    }
    std::size_t i = 0;
    while (i < n && v[i] == q - 1) v[i++] = 0;
    if (i == n) break;
    ++v[i];
  }
  if (out.size == 1) out.gen = mod;  // zero code
  return out;
}

}  // namespace

TEST_CASE("code construction") {
  const auto F = FieldCtx::make(3, 1);
  CHECK(make_code(F, 4, Poly::from_ints(F, {1})).dim == 4);
  CHECK(make_code(F, 4, Poly::from_ints(F, {2, 1, 1})).dim == 2);
  CHECK(make_code(F, 3, pow(Poly::from_ints(F, {1, 1}), 3)).dim == 0);
  CHECK_THROWS_AS(make_code(F, 4, Poly::from_ints(F, {1, 1})), std::invalid_argument);
  CHECK_THROWS_AS(make_code(F, 4, Poly::from_ints(F, {1, 2})), std::invalid_argument);
  const auto rows = generator_matrix(make_code(F, 4, Poly::from_ints(F, {2, 1, 1})));
  REQUIRE(rows.size() == 2);
  CHECK(rows[1] == std::vector<Elem>{Elem{0}, Elem{2}, Elem{1}, Elem{1}});
}

TEST_CASE("dual generator examples") {
  const auto F = FieldCtx::make(3, 1);
  const auto c = make_code(F, 4, Poly::from_ints(F, {2, 1, 1}));
  CHECK(check_polynomial(c) == Poly::from_ints(F, {2, 2, 1}));
  CHECK(dual_generator(c, Mode::Euclidean) == Poly::from_ints(F, {2, 1, 1}));
  CHECK_FALSE(is_lcd(c, Mode::Euclidean));
  CHECK(intersection_dim(c, dual_code(c, Mode::Euclidean)) == 2);
  CHECK(brute_dual(c, Mode::Euclidean).gen == c.gen);

  const auto full = make_code(F, 4, Poly::from_ints(F, {1}));
  CHECK(dual_generator(full, Mode::Euclidean) == Poly::binomial(F, 4, -1));
  CHECK(is_lcd(full, Mode::Euclidean));
  CHECK(brute_dual(full, Mode::Euclidean).dim == 0);

  const auto c7 = make_code(F, 7, Poly::from_ints(F, {1, 1}));
  CHECK(is_lcd(c7, Mode::Euclidean));
  CHECK(intersection_dim(c7, dual_code(c7, Mode::Euclidean)) == 0);

  const auto F9 = FieldCtx::make(3, 2);
  const Elem alpha = F9->from_coeffs(std::vector<std::uint32_t>{0, 1});
  const auto h = make_code(F9, 2, Poly(F9, {F9->neg(alpha), F9->one()}));
  CHECK(dual_generator(h, Mode::Hermitian) == dagger(Poly(F9, {alpha, F9->one()}), 3));
  CHECK(brute_dual(h, Mode::Hermitian).gen == dual_generator(h, Mode::Hermitian));
  CHECK_THROWS_AS(dual_generator(c, Mode::Hermitian), std::invalid_argument);
}

TEST_CASE("duals agree with exhaustive search") {
  struct Case {
    std::uint32_t p;
    unsigned e;
    std::size_t n_max;
    Mode mode;
  };
  for (const auto& cs : {Case{3, 1, 6, Mode::Euclidean}, Case{5, 1, 4, Mode::Euclidean},
                         Case{3, 2, 3, Mode::Euclidean}, Case{3, 2, 3, Mode::Hermitian}}) {
    const auto F = FieldCtx::make(cs.p, cs.e);
    const oracle::Ring R{F};
    const std::uint64_t conj = cs.mode == Mode::Hermitian ? cs.p : 1;
    for (std::size_t n = 1; n <= cs.n_max; ++n) {
      for (const auto& g : divisors(R, n)) {
        const auto code = make_code(F, n, from_codes(F, g));
        INFO("p=" << cs.p << " e=" << cs.e << " n=" << n << " g=" << to_string(code.gen));
        const auto truth = exhaustive_dual(R, n, g, conj);
        const Poly dg = dual_generator(code, cs.mode);
        CHECK(dg == from_codes(F, truth.gen));
        std::uint64_t size = 1;
        for (std::size_t i = 0; i < n - static_cast<std::size_t>(dg.degree()); ++i) size *= F->q();
        CHECK(size == truth.size);
        CHECK(brute_dual(code, cs.mode).gen == dg);
        const auto dual = dual_code(code, cs.mode);
        CHECK(dual.dim + code.dim == n);
        CHECK(dual_code(dual, cs.mode).gen == code.gen);
        CHECK(intersection_dim(code, dual) == intersection_dim_dense(code, dual));
        CHECK(is_lcd(code, cs.mode) == (intersection_dim(code, dual) == 0));
      }
    }
  }
}

TEST_CASE("LCD census examples") {
  const auto F3 = FieldCtx::make(3, 1);
  const auto c4 = enumerate_lcd(F3, 4, Mode::Euclidean);
  REQUIRE(c4.generators.has_value());
  CHECK(c4.count() == "2");
  CHECK(c4.generators->size() == 2);
  CHECK(c4.generators->front() == Poly::from_ints(F3, {1}));
  CHECK(c4.generators->back() == Poly::binomial(F3, 4, -1));

  const auto c7 = enumerate_lcd(F3, 7, Mode::Euclidean);
  REQUIRE(c7.generators.has_value());
  CHECK(c7.r == 2);
  CHECK(c7.s == 2);
  CHECK(c7.count() == "4");
  CHECK(std::count(c7.generators->begin(), c7.generators->end(), Poly::from_ints(F3, {1, 1})) == 1);

  const auto h2 = enumerate_lcd(F3, 2, Mode::Hermitian);
  REQUIRE(h2.generators.has_value());
  CHECK(h2.count() == "4");
  const auto F9 = FieldCtx::make(3, 2);
  CHECK(std::count(h2.generators->begin(), h2.generators->end(), Poly::binomial(F9, 2, -1)) == 1);

  CHECK(count_lcd(3, 4, Mode::Euclidean).count() == "2");
  CHECK(count_lcd(3, 3, Mode::Euclidean).count() == "2");
  CHECK(count_lcd(3, 7, Mode::Euclidean).count() == "4");
  const auto c3 = enumerate_lcd(F3, 3, Mode::Euclidean);
  CHECK(c3.generators->back() == Poly::from_ints(F3, {1, 0, 0, 1}));
}

TEST_CASE("census membership matches the LCD predicate") {
  for (const auto [p, e, n_max] : {std::tuple{3u, 1u, 7u}, {5u, 1u, 5u}}) {
    const auto F = FieldCtx::make(p, e);
    const oracle::Ring R{F};
    for (std::size_t n = 1; n <= n_max; ++n) {
      const auto census = enumerate_lcd(F, n, Mode::Euclidean);
      std::uint64_t lcd = 0;
      for (const auto& g : divisors(R, n)) {
        const Poly gen = from_codes(F, g);
        const bool member = std::find(census.generators->begin(), census.generators->end(), gen) !=
                            census.generators->end();
        CHECK(is_lcd(make_code(F, n, gen), Mode::Euclidean) == member);
        lcd += member;
      }
      CHECK(lcd == census.generators->size());
      CHECK(census.count() == count_lcd(F->q(), n, Mode::Euclidean).count());
    }
  }
}

TEST_CASE("count does not depend on the p-power part of n") {
  for (const std::uint64_t base : {1u, 2u, 4u, 7u, 8u, 10u}) {
    const auto a = count_lcd(5, base, Mode::Euclidean);
    CHECK(count_lcd(5, 5 * base, Mode::Euclidean).count() == a.count());
    CHECK(count_lcd(5, 25 * base, Mode::Euclidean).count() == a.count());
    CHECK(count_lcd(5, 25 * base, Mode::Hermitian).count() == count_lcd(5, base, Mode::Hermitian).count());
  }
}

TEST_CASE("powers of two in decimal") {
  CHECK(pow2_decimal(0) == "1");
  CHECK(pow2_decimal(10) == "1024");
  CHECK(pow2_decimal(64) == "18446744073709551616");
  CHECK(pow2_decimal(100) == "1267650600228229401496703205376");
}
