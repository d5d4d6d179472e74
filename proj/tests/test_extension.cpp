#include <algorithm>

#include "doctest.h"
#include "negacycl/extension.hpp"
#include "negacycl/factorization.hpp"
#include "oracle.hpp"

using namespace negacycl;

TEST_CASE("cyclotomic polynomials over F_3") {
  const auto F = FieldCtx::make(3, 1);
  CHECK(cyclotomic_poly(F, 1) == Poly::from_ints(F, {-1, 1}));
  CHECK(cyclotomic_poly(F, 2) == Poly::from_ints(F, {1, 1}));
  CHECK(cyclotomic_poly(F, 4) == Poly::from_ints(F, {1, 0, 1}));
  CHECK(cyclotomic_poly(F, 8) == Poly::from_ints(F, {1, 0, 0, 0, 1}));
  CHECK(cyclotomic_poly(F, 10) == Poly::from_ints(F, {1, -1, 1, -1, 1}));
}

TEST_CASE("x^N - 1 is the product of Phi_d over d | N") {
  for (const auto [p, e] : {std::pair{3u, 1u}, {5u, 1u}, {3u, 2u}}) {
    const auto F = FieldCtx::make(p, e);
    for (std::uint64_t N = 1; N <= 60; ++N) {
      if (N % p == 0) continue;
      Poly prod = Poly::constant(F, F->one());
      for (std::uint64_t d = 1; d <= N; ++d) {
        if (N % d == 0) prod = prod * cyclotomic_poly(F, d);
      }
      CHECK(prod == Poly::binomial(F, N, 1));
    }
  }
}

TEST_CASE("equal-degree factorization of Phi_8 over F_3") {
  const auto F = FieldCtx::make(3, 1);
  const auto parts = equal_degree_factorization(cyclotomic_poly(F, 8), 2);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0] == Poly::from_ints(F, {2, 1, 1}));
  CHECK(parts[1] == Poly::from_ints(F, {2, 2, 1}));
}

TEST_CASE("equal-degree factorization matches trial factoring") {
  for (const auto [p, e] : {std::pair{3u, 1u}, {5u, 1u}, {7u, 1u}, {3u, 2u}}) {
    const auto F = FieldCtx::make(p, e);
    const oracle::Ring R{F};
    for (std::uint64_t N = 2; N <= 40; ++N) {
      if (N % p == 0) continue;
      const Poly phi = cyclotomic_poly(F, N);
      if (phi.degree() > 12) continue;
      std::uint64_t d = 1, x = F->q() % N;
      while (x != 1 % N) {
        x = x * (F->q() % N) % N;
        ++d;
      }
      const auto parts = equal_degree_factorization(phi, static_cast<unsigned>(d));
      std::vector<oracle::P> got;
      for (const auto& f : parts) {
        CHECK(f.degree() == static_cast<int>(d));
        oracle::P c;
        for (const auto a : f.coeffs()) c.push_back(a.code);
        got.push_back(c);
      }
      oracle::P phic;
      for (const auto a : phi.coeffs()) phic.push_back(a.code);
      auto truth = R.factor(phic);
      std::sort(truth.begin(), truth.end());
      std::sort(got.begin(), got.end());
      CHECK(got == truth);
    }
  }
}

TEST_CASE("cyclotomic roots have exact order and minimal polynomials agree") {
  for (const auto [p, e] : {std::pair{3u, 1u}, {5u, 1u}, {3u, 2u}, {7u, 1u}}) {
    const auto F = FieldCtx::make(p, e);
    for (const std::uint64_t N : {1u, 2u, 4u, 8u, 10u, 13u, 16u, 22u, 28u}) {
      if (N % p == 0) continue;
      INFO("p=" << p << " e=" << e << " N=" << N);
      const auto root = cyclotomic_root(F, N);
      const auto& K = *root.field;
      CHECK(K.pow(root.value(), N) == K.one());
      for (std::uint64_t l = 2; l <= N; ++l) {
        if (N % l == 0 && oracle::phi(l) + 1 == l) CHECK(K.pow(root.value(), N / l) != K.one());
      }
      CHECK(K.degree() == oracle::ord(F->q(), N));
      CHECK(cyclotomic_root(F, N).field == root.field);
      for (const auto& c : representatives(F->q(), N)) {
        const Poly a = minimal_poly_from_coset(c, root);
        const Poly b = minimal_poly_by_dependency(c, root);
        CHECK(a == b);
        CHECK(a.degree() == static_cast<int>(c.size()));
        CHECK(minimal_polynomial(K, root.power(c.rep)) == a);
        CHECK((Poly::binomial(F, N, 1) % a).is_zero());
      }
    }
  }
}

TEST_CASE("extension frobenius fixes exactly the base field") {
  const auto F = FieldCtx::make(3, 1);
  const auto root = cyclotomic_root(F, 8);
  const auto& K = *root.field;
  CHECK(K.degree() == 2);
  CHECK(K.in_base_field(K.one()));
  CHECK_FALSE(K.in_base_field(root.value()));
  CHECK(K.frobenius(root.value()) == root.power(3));
}
