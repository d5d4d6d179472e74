#include <stdexcept>

#include "doctest.h"
#include "negacycl/counting.hpp"
#include "negacycl/factorization.hpp"
#include "oracle.hpp"

using namespace negacycl;

namespace {

// Number of self-paired factors from an explicit factorization.
std::uint64_t tagged(std::uint64_t p, unsigned e, std::uint64_t n, int sign, Mode mode) {
  return factor_xn(FieldCtx::make(p, e), n, sign, mode).s;
}

}  // namespace

TEST_CASE("cyclic closed forms") {
  CHECK(count_srim_cyclic(3, 8).total == 3);
  CHECK(count_srim_cyclic(3, 7).total == 2);
  CHECK(count_srim_cyclic(5, 1).total == 1);
  CHECK(count_scrim_cyclic(3, 1).total == 1);
  CHECK(count_scrim_cyclic(3, 7).total == 3);
  // x^8 - 1 splits over F_9; x - z^i is fixed by the dagger iff 4i = 0 mod 8.
  CHECK(count_scrim_cyclic(3, 8).total == 4);
  CHECK_THROWS_AS(count_srim_cyclic(3, 6), std::invalid_argument);

  const auto b = count_srim_cyclic(3, 7);
  REQUIRE(b.terms.size() == 2);
  CHECK(b.terms[1].d == 7);
  CHECK(b.terms[1].member);
  CHECK(b.terms[1].phi == 6);
  CHECK(b.terms[1].ord == 6);
  CHECK(b.terms[1].contribution == 1);
}

TEST_CASE("negacyclic closed forms") {
  CHECK(count_srim_negacyclic(3, 0, 7).total == 2);
  CHECK(count_srim_negacyclic(3, 2, 1).total == 0);
  CHECK(count_srim_negacyclic(3, 1, 1).total == 1);
  CHECK(count_scrim_negacyclic(3, 1, 1).total == 2);
  CHECK(count_scrim_negacyclic(3, 0, 7).total == 3);
  CHECK(count_scrim_negacyclic(3, 2, 1).total == 0);
  CHECK(count_srim_negacyclic(3, 1, 1).nu == 2);
  CHECK_THROWS_AS(count_srim_negacyclic(4, 0, 1), std::invalid_argument);
}

TEST_CASE("closed forms match tagged factorizations") {
  for (const auto [p, e] : {std::pair{3u, 1u}, {5u, 1u}, {7u, 1u}, {3u, 2u}}) {
    const std::uint64_t q = FieldCtx::make(p, e)->q();
    for (std::uint64_t n = 1; n <= 40; ++n) {
      if (n % p == 0) continue;
      INFO("q=" << q << " n=" << n);
      CHECK(count_srim_cyclic(q, n).total == tagged(p, e, n, 1, Mode::Euclidean));
      CHECK(count_scrim_cyclic(q, n).total == tagged(p, e, n, 1, Mode::Hermitian));
      unsigned m = 0;
      std::uint64_t np = n;
      while (np % 2 == 0) {
        np /= 2;
        ++m;
      }
      CHECK(count_srim_negacyclic(q, m, np).total == tagged(p, e, n, -1, Mode::Euclidean));
      CHECK(count_scrim_negacyclic(q, m, np).total == tagged(p, e, n, -1, Mode::Hermitian));
    }
  }
}

TEST_CASE("contributions are exact quotients") {
  for (const std::uint64_t q : {3u, 5u, 9u, 25u, 27u}) {
    for (std::uint64_t np = 1; np <= 99; np += 2) {
      if (oracle::gcd(np, q) != 1) continue;
      for (unsigned m = 0; m <= 3; ++m) {
        for (const auto& b : {count_srim_negacyclic(q, m, np), count_scrim_negacyclic(q, m, np)}) {
          std::uint64_t sum = 0;
          for (const auto& t : b.terms) {
            if (t.member) {
              CHECK(t.phi % t.ord == 0);
              CHECK(t.contribution == t.phi / t.ord);
            } else {
              CHECK(t.contribution == 0);
            }
            sum += t.contribution;
          }
          CHECK(sum == b.total);
        }
      }
    }
  }
}

TEST_CASE("difference identities") {
  CHECK(lem2_check(3, 2, CountKind::Srim));
  CHECK(lem2_check(3, 7, CountKind::Srim));
  for (const std::uint64_t q : {3u, 5u, 7u, 9u, 11u, 13u, 25u, 27u}) {
    for (std::uint64_t n = 1; n <= 100; ++n) {
      if (oracle::gcd(n, q) != 1) continue;
      CHECK(lem2_check(q, n, CountKind::Srim));
      CHECK(lem2_check(q, n, CountKind::Scrim));
    }
  }
}

TEST_CASE("recursions") {
  CHECK(count_srim_cyclic_recursive(3, 2, 1) == 3);
  CHECK(count_srim_cyclic_recursive(7, 3, 1) == 5);
  CHECK(count_srim_cyclic_recursive(3, 1, 7) == 4);
  CHECK(count_srim_negacyclic_recursive(3, 0, 7) == 2);
  CHECK(count_srim_negacyclic_recursive(3, 1, 7) == 3);
  CHECK(count_srim_negacyclic_recursive(3, 1, 1) == 1);
  CHECK(count_scrim_cyclic_recursive(3, 1, 1) == 2);
  CHECK(count_scrim_cyclic_recursive(3, 3, 1) == 4);
  CHECK(count_scrim_cyclic_recursive(3, 0, 7) == count_scrim_cyclic(3, 7).total);
  CHECK(count_scrim_negacyclic_recursive(3, 1, 1) == 2);
  CHECK(count_scrim_negacyclic_recursive(3, 2, 1) == 0);
  CHECK(count_scrim_negacyclic_recursive(3, 0, 7) == 3);

  for (const std::uint64_t q : {3u, 5u, 7u, 9u, 11u, 23u, 25u, 27u, 31u}) {
    for (std::uint64_t np = 1; np <= 45; np += 2) {
      if (oracle::gcd(np, q) != 1) continue;
      for (unsigned m = 0; m <= 6; ++m) {
        INFO("q=" << q << " m=" << m << " n'=" << np);
        const std::uint64_t n = (std::uint64_t{1} << m) * np;
        CHECK(count_srim_cyclic_recursive(q, m, np) == count_srim_cyclic(q, n).total);
        CHECK(count_scrim_cyclic_recursive(q, m, np) == count_scrim_cyclic(q, n).total);
        CHECK(count_srim_negacyclic_recursive(q, m, np) == count_srim_negacyclic(q, m, np).total);
        CHECK(count_scrim_negacyclic_recursive(q, m, np) == count_scrim_negacyclic(q, m, np).total);
      }
    }
  }
}

TEST_CASE("uncorrected recursions differ at the pinned points") {
  // True values from explicit factorizations, then the uncorrected recursions.
  CHECK(tagged(3, 1, 4, 1, Mode::Euclidean) == 3);
  CHECK(tagged(3, 1, 2, -1, Mode::Euclidean) == 1);
  CHECK(tagged(7, 1, 8, 1, Mode::Euclidean) == 5);
  CHECK(count_srim_cyclic_as_printed(3, 2, 1) == 5);
  CHECK(count_srim_negacyclic_as_printed(3, 1, 1) == 3);
  CHECK(count_srim_cyclic_as_printed(7, 3, 1) == 9);
  // Where nu = 1 or m <= 1 the two forms coincide.
  CHECK(count_srim_cyclic_as_printed(5, 3, 3) == count_srim_cyclic_recursive(5, 3, 3));
  CHECK(count_srim_cyclic_as_printed(3, 1, 7) == count_srim_cyclic_recursive(3, 1, 7));
}

TEST_CASE("extreme classes") {
  CHECK(classify_extreme_srim(3, 7) == ExtremeClass::AllSelf);
  CHECK(classify_extreme_srim(5, 1) == ExtremeClass::AllSelf);
  CHECK(classify_extreme_srim(3, 35) == ExtremeClass::Mixed);
  CHECK(classify_extreme_srim(3, 13) == ExtremeClass::OnlyXPlusOne);
  CHECK(classify_extreme_scrim(3, 7) == ExtremeClass::AllSelf);
  CHECK(classify_extreme_scrim(3, 5) == ExtremeClass::OnlyXPlusOne);
  CHECK(classify_extreme_scrim(3, 35) == ExtremeClass::Mixed);
  CHECK(to_string(ExtremeClass::OnlyXPlusOne) == "only-x+1");
  CHECK_THROWS_AS(classify_extreme_srim(3, 14), std::invalid_argument);

  for (const auto [p, e] : {std::pair{3u, 1u}, {5u, 1u}, {3u, 2u}}) {
    const std::uint64_t q = FieldCtx::make(p, e)->q();
    for (std::uint64_t n = 1; n <= 75; n += 2) {
      if (n % p == 0) continue;
      INFO("q=" << q << " n=" << n);
      for (const Mode mode : {Mode::Euclidean, Mode::Hermitian}) {
        const auto rep = factor_xn(FieldCtx::make(p, e), n, -1, mode);
        const ExtremeClass c = mode == Mode::Euclidean ? classify_extreme_srim(q, n) : classify_extreme_scrim(q, n);
        if (c == ExtremeClass::AllSelf) CHECK(rep.s == rep.r);
        if (c == ExtremeClass::OnlyXPlusOne) CHECK(rep.s == 1);
        if (c == ExtremeClass::Mixed) CHECK((rep.s > 1 && rep.s < rep.r));
      }
    }
  }
}

TEST_CASE("two-prime counts") {
  // x^7 + 1 and x^5 + 1 each have two self-reciprocal factors, sharing x + 1.
  CHECK(count_two_prime_srim(3, 7, 1, 5, 1) == 3);
  CHECK(count_two_prime_srim(3, 5, 1, 7, 1) == 3);
  CHECK(count_srim_negacyclic(3, 0, 5).total == 2);
  CHECK(count_two_prime_srim(3, 7, 1, 13, 1) == count_srim_negacyclic(3, 0, 7).total);
  CHECK(count_two_prime_srim(3, 7, 2, 13, 1) == count_srim_negacyclic(3, 0, 49).total);
  CHECK(count_two_prime_scrim(3, 5, 1, 13, 1) == 1);
  CHECK(count_two_prime_scrim(3, 7, 1, 5, 1) == count_scrim_negacyclic(3, 0, 7).total);
  CHECK(count_two_prime_scrim(3, 7, 1, 11, 1) == 3);
  CHECK_THROWS_AS(count_two_prime_srim(3, 7, 1, 7, 1), std::invalid_argument);

  const std::uint64_t primes[] = {5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
  for (const std::uint64_t q : {5u, 9u, 3u}) {
    for (const auto l1 : primes) {
      for (const auto l2 : primes) {
        if (l1 == l2 || q % l1 == 0 || q % l2 == 0) continue;
        std::uint64_t a = l1;
        for (unsigned r1 = 1; a * l2 <= 200; ++r1, a *= l1) {
          std::uint64_t n = a * l2;
          for (unsigned r2 = 1; n <= 200; ++r2, n *= l2) {
            INFO("q=" << q << " " << l1 << "^" << r1 << " " << l2 << "^" << r2);
            CHECK(count_two_prime_srim(q, l1, r1, l2, r2) == count_srim_negacyclic(q, 0, n).total);
            CHECK(count_two_prime_scrim(q, l1, r1, l2, r2) == count_scrim_negacyclic(q, 0, n).total);
          }
        }
      }
    }
  }
}
