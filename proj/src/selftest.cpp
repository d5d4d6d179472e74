#include "negacycl/selftest.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <thread>
#include <tuple>

#include "negacycl/cosets.hpp"
#include "negacycl/counting.hpp"
#include "negacycl/factorization.hpp"
#include "negacycl/negacyclic.hpp"
#include "negacycl/numtheory.hpp"

namespace negacycl {

namespace {

constexpr std::uint64_t kGridQ[] = {3, 5, 7, 9, 11, 13, 25, 27};
constexpr std::uint64_t kSmallQ[] = {3, 5, 9};

using Clock = std::chrono::steady_clock;

// Tallies checks and keeps the first failure message.
class Tally {
 public:
  explicit Tally(CriterionResult& r) : r_(r) {}

  void check(bool ok, const std::function<std::string()>& what) {
    ++r_.checks;
    if (!ok) fail(what());
  }
  void fail(const std::string& what) {
    if (r_.failures++ == 0) r_.first_failure = what;
  }
  void absorb(std::uint64_t checks, const std::vector<std::string>& failures) {
    r_.checks += checks;
    for (const auto& f : failures) fail(f);
  }

 private:
  CriterionResult& r_;
};

// Per-item check log for work done on worker threads.
struct Log {
  std::uint64_t checks = 0;
  std::vector<std::string> failures;

  void check(bool ok, const std::function<std::string()>& what) {
    ++checks;
    if (!ok) failures.push_back(what());
  }
};

void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) body(i);
    });
  }
  for (auto& th : pool) th.join();
}

std::vector<std::uint64_t> grid_qs(const SelftestConfig& c) {
  std::vector<std::uint64_t> out;
  for (const auto q : kGridQ) {
    if (q <= c.q_max) out.push_back(q);
  }
  return out;
}

std::vector<std::uint64_t> small_qs(const SelftestConfig& c) {
  std::vector<std::uint64_t> out;
  for (const auto q : kSmallQ) {
    if (q <= c.q_max) out.push_back(q);
  }
  return out;
}

FieldPtr field_of(std::uint64_t q) {
  const auto pp = nt::as_prime_power(q);
  return FieldCtx::make(pp->p, pp->e);
}

std::string where(std::uint64_t q, std::uint64_t n, int sign, Mode mode) {
  std::ostringstream os;
  os << "q=" << q << " n=" << n << " sign=" << (sign == 1 ? "+1" : "-1") << " mode=" << to_string(mode);
  return os.str();
}

// ---------------------------------------------------------------------------
// 1. Good and oddly-good integers against the brute-force definitions.

void criterion_good_integers(const SelftestConfig& cfg, CriterionResult& res, Json& art) {
  Tally tally(res);
  Json rows = Json::array();
  for (const auto q : grid_qs(cfg)) {
    std::uint64_t good = 0;
    std::uint64_t oddly = 0;
    for (std::uint64_t d = 1; d <= cfg.d_max; ++d) {
      if (nt::gcd(d, q) != 1) continue;
      const bool g = nt::is_good(d, q);
      const bool og = nt::is_oddly_good(d, q);
      good += g;
      oddly += og;
      tally.check(g == nt::is_good_oracle(d, q), [&] { return "is_good(" + std::to_string(d) + ", " + std::to_string(q) + ") differs from the oracle"; });
      tally.check(og == nt::is_oddly_good_oracle(d, q), [&] { return "is_oddly_good(" + std::to_string(d) + ", " + std::to_string(q) + ") differs from the oracle"; });
      tally.check(!og || g, [&] { return "oddly-good but not good: d=" + std::to_string(d) + " q=" + std::to_string(q); });
      if (d % 2 == 1 && 2 * d <= cfg.d_max) {
        tally.check(g == nt::is_good(2 * d, q) && og == nt::is_oddly_good(2 * d, q),
                    [&] { return "d and 2d disagree: d=" + std::to_string(d) + " q=" + std::to_string(q); });
      }
      if (d > 1 && (d & (d - 1)) == 0) {
        const bool divides = (q + 1) % d == 0;
        tally.check(g == divides && og == divides,
                    [&] { return "2-power rule fails: d=" + std::to_string(d) + " q=" + std::to_string(q); });
      }
    }
    rows.push_back(Json{{"q", q}, {"good", good}, {"oddly_good", oddly}});
  }
  art["good_integers"] = std::move(rows);
}

// ---------------------------------------------------------------------------
// 2. Coset characterizations, computed from coset ids rather than the
// library predicates.

void criterion_cosets(const SelftestConfig& cfg, CriterionResult& res, Json& art) {
  Tally tally(res);
  Json rows = Json::array();
  for (const auto q : grid_qs(cfg)) {
    std::uint64_t srim = 0;
    std::uint64_t scrim = 0;
    for (std::uint64_t N = 2; N <= cfg.coset_max; N += 2) {
      if (nt::gcd(N, q) != 1) continue;
      const unsigned m = nt::exact_divide(2, N) - 1;
      const std::uint64_t two_m1 = std::uint64_t{1} << (m + 1);
      const std::uint64_t q2 = nt::mul_mod(q % N, q % N, N);
      std::vector<std::size_t> id(N), id2(N);
      const auto cq = representatives(q, N);
      const auto cq2 = representatives(q2, N);
      for (std::size_t k = 0; k < cq.size(); ++k) {
        for (const auto x : cq[k].elements) id[x] = k;
        tally.check(same_parity(cq[k]), [&] { return "coset of mixed parity: " + where(q, N, 1, Mode::Euclidean); });
      }
      for (std::size_t k = 0; k < cq2.size(); ++k) {
        for (const auto x : cq2[k].elements) id2[x] = k;
      }
      for (std::uint64_t i = 0; i < N; ++i) {
        const std::uint64_t o = nt::additive_ord(i, N);
        const bool self = id[i] == id[(N - i) % N];
        const bool cself = id2[i] == id2[(N - nt::mul_mod(q % N, i, N)) % N];
        srim += self && i == cq[id[i]].rep;
        scrim += cself && i == cq2[id2[i]].rep;
        tally.check(self == nt::is_good(o, q), [&] {
          return "Cl(i) = Cl(-i) disagrees with the good test: q=" + std::to_string(q) + " N=" + std::to_string(N) + " i=" + std::to_string(i);
        });
        tally.check(cself == nt::is_oddly_good(o, q), [&] {
          return "Cl(i) = Cl(-qi) disagrees with the oddly-good test: q=" + std::to_string(q) + " N=" + std::to_string(N) + " i=" + std::to_string(i);
        });
        tally.check((i % 2 == 1) == (o % two_m1 == 0), [&] {
          return "odd i versus 2^{m+1} | o(i) fails: q=" + std::to_string(q) + " N=" + std::to_string(N) + " i=" + std::to_string(i);
        });
        tally.check((i % 2 == 1) == divides_xn_plus1(q, m, N / two_m1, i), [&] {
          return "divides_xn_plus1 disagrees with parity: q=" + std::to_string(q) + " N=" + std::to_string(N) + " i=" + std::to_string(i);
        });
        tally.check(self == is_srim_coset(q, N, i) && cself == is_scrim_coset(q, N, i), [&] {
          return "coset predicates disagree with coset ids: q=" + std::to_string(q) + " N=" + std::to_string(N) + " i=" + std::to_string(i);
        });
      }
    }
    rows.push_back(Json{{"q", q}, {"self_reciprocal_cosets", srim}, {"self_conjugate_cosets", scrim}});
  }
  art["cosets"] = std::move(rows);
}

// ---------------------------------------------------------------------------
// Factorization grid shared by criteria 3 through 6.

struct Truth {
  std::uint64_t r = 0;
  std::uint64_t s = 0;
  std::vector<std::string> self_polys;  // canonical order
};

using TruthKey = std::tuple<std::uint64_t, std::uint64_t, int, Mode>;  // q, n, sign, mode
using TruthTable = std::map<TruthKey, Truth>;

struct GridOut {
  Log log;
  Json reports = Json::array();
  std::vector<std::pair<TruthKey, Truth>> truths;
};

constexpr std::pair<int, Mode> kVariants[] = {
    {1, Mode::Euclidean}, {1, Mode::Hermitian}, {-1, Mode::Euclidean}, {-1, Mode::Hermitian}};

std::uint64_t closed_form(std::uint64_t q, std::uint64_t n, int sign, Mode mode) {
  if (sign == 1) return mode == Mode::Euclidean ? count_srim_cyclic(q, n).total : count_scrim_cyclic(q, n).total;
  const unsigned m = nt::exact_divide(2, n);
  return mode == Mode::Euclidean ? count_srim_negacyclic(q, m, n >> m).total
                                 : count_scrim_negacyclic(q, m, n >> m).total;
}

void grid_point(std::uint64_t q, std::uint64_t n, GridOut& out) {
  const FieldPtr base = field_of(q);
  const std::uint64_t p = base->p();
  for (const auto& [sign, mode] : kVariants) {
    const std::string at = where(q, n, sign, mode);
    try {
      const FactorizationReport rep = factor_xn(base, n, sign, mode);
      const Verdict v = verify_report(rep);
      out.log.check(v.ok, [&] { return at + ": " + v.detail; });
      out.reports.push_back(to_json(rep));

      const std::uint64_t mu_power = nt::ipow(p, rep.length.mu);
      const std::uint64_t core = n / mu_power;
      out.log.check(std::all_of(rep.records.begin(), rep.records.end(),
                                [&](const FactorRecord& f) { return f.multiplicity == mu_power; }),
                    [&] { return at + ": multiplicity differs from p^mu"; });
      out.log.check(closed_form(q, core, sign, mode) == rep.s, [&] {
        return at + ": closed-form count " + std::to_string(closed_form(q, core, sign, mode)) + " but " +
               std::to_string(rep.s) + " self-paired factors";
      });

      // Records per additive-order class against phi / ord.
      const std::uint64_t mult = mode == Mode::Euclidean ? q : q * q;
      std::map<std::uint64_t, std::uint64_t> seen;
      for (const auto& f : rep.records) ++seen[f.additive_order];
      std::map<std::uint64_t, std::uint64_t> expected;
      if (sign == 1) {
        for (const auto d : nt::divisors(core)) expected[d] = nt::euler_phi(d) / nt::mult_ord(mult % d, d);
      } else {
        const std::uint64_t two_m1 = std::uint64_t{2} << rep.length.m;
        for (const auto d : nt::divisors(rep.length.n_prime)) {
          const std::uint64_t k = two_m1 * d;
          expected[k] = nt::euler_phi(k) / nt::mult_ord(mult % k, k);
        }
        out.log.check(count_lcd(q, n, mode).r == rep.r, [&] { return at + ": divisor-sum r differs from the factor count"; });
      }
      out.log.check(seen == expected, [&] { return at + ": factors per additive-order class differ from phi/ord"; });
      if (sign == -1 && n % 2 == 1) {
        const Poly x_plus_1 = Poly::from_ints(rep.field, {1, 1});
        const bool found = std::any_of(rep.records.begin(), rep.records.end(), [&](const FactorRecord& f) {
          return f.poly == x_plus_1 && f.self_paired();
        });
        out.log.check(found, [&] { return at + ": x + 1 is not a self-paired factor"; });
      }

      Truth t;
      t.r = rep.r;
      t.s = rep.s;
      for (const auto& f : rep.records) {
        if (f.self_paired()) t.self_polys.push_back(to_string(f.poly));
      }
      out.truths.emplace_back(TruthKey{q, n, sign, mode}, std::move(t));
    } catch (const std::exception& ex) {
      out.log.check(false, [&] { return at + ": " + ex.what(); });
    }
  }
}

TruthTable criterion_factor_counts(const SelftestConfig& cfg, unsigned threads, CriterionResult& res, Json& art) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> items;
  for (const auto q : grid_qs(cfg)) {
    for (std::uint64_t n = 1; n <= cfg.n_max; ++n) items.emplace_back(q, n);
  }
  std::vector<GridOut> outs(items.size());
  parallel_for(items.size(), threads, [&](std::size_t i) { grid_point(items[i].first, items[i].second, outs[i]); });

  Tally tally(res);
  TruthTable table;
  Json reports = Json::array();
  for (auto& o : outs) {
    tally.absorb(o.log.checks, o.log.failures);
    for (auto& r : o.reports) reports.push_back(std::move(r));
    for (auto& [k, t] : o.truths) table.emplace(k, std::move(t));
  }
  art["factorizations"] = std::move(reports);
  return table;
}

const Truth* lookup(const TruthTable& t, std::uint64_t q, std::uint64_t n, int sign, Mode mode) {
  const auto it = t.find(TruthKey{q, n, sign, mode});
  return it == t.end() ? nullptr : &it->second;
}

// ---------------------------------------------------------------------------
// 4. count(x^n + 1) = count(x^{2n} - 1) - count(x^n - 1).

void criterion_difference(const SelftestConfig& cfg, const TruthTable& truth, CriterionResult& res, Json& art) {
  Tally tally(res);
  std::uint64_t factor_level = 0;
  for (const auto q : grid_qs(cfg)) {
    for (std::uint64_t n = 1; n <= cfg.n_max; ++n) {
      if (nt::gcd(n, q) != 1) continue;
      for (const auto kind : {CountKind::Srim, CountKind::Scrim}) {
        tally.check(lem2_check(q, n, kind), [&] { return "closed-form difference identity fails: q=" + std::to_string(q) + " n=" + std::to_string(n); });
      }
      for (const auto mode : {Mode::Euclidean, Mode::Hermitian}) {
        const Truth* neg = lookup(truth, q, n, -1, mode);
        const Truth* cyc = lookup(truth, q, n, 1, mode);
        const Truth* cyc2 = lookup(truth, q, 2 * n, 1, mode);
        if (!neg || !cyc || !cyc2) continue;
        ++factor_level;
        tally.check(neg->s + cyc->s == cyc2->s, [&] { return "factor-level difference identity fails: " + where(q, n, -1, mode); });
      }
    }
  }
  art["difference_identity"] = Json{{"factor_level_checks", factor_level}};
}

// ---------------------------------------------------------------------------
// 5. Recursions in m against the closed forms, the factorizations and the
// uncorrected recursion values at the points where those are wrong.

void criterion_recursions(const SelftestConfig& cfg, const TruthTable& truth, CriterionResult& res, Json& art) {
  Tally tally(res);
  for (const auto q : grid_qs(cfg)) {
    for (std::uint64_t n = 1; n <= cfg.n_max; ++n) {
      if (nt::gcd(n, q) != 1) continue;
      const unsigned m = nt::exact_divide(2, n);
      const std::uint64_t np = n >> m;
      const std::uint64_t values[4] = {count_srim_cyclic_recursive(q, m, np), count_scrim_cyclic_recursive(q, m, np),
                                       count_srim_negacyclic_recursive(q, m, np),
                                       count_scrim_negacyclic_recursive(q, m, np)};
      for (std::size_t k = 0; k < 4; ++k) {
        const auto [sign, mode] = kVariants[k];
        tally.check(values[k] == closed_form(q, n, sign, mode), [&] { return "recursion differs from the closed form: " + where(q, n, sign, mode); });
        if (const Truth* t = lookup(truth, q, n, sign, mode)) {
          tally.check(values[k] == t->s, [&] { return "recursion differs from the factorization: " + where(q, n, sign, mode); });
        }
      }
    }
  }

  // Pinned true values, recomputed from explicit factorizations.
  const auto srim_count = [](std::uint64_t q, std::uint64_t n, int sign) {
    return factor_xn(field_of(q), n, sign, Mode::Euclidean).s;
  };
  Json pins = Json::array();
  struct Pin {
    std::uint64_t q;
    unsigned m;
    int sign;
    std::uint64_t truth;
    std::uint64_t printed;
  };
  const Pin points[] = {{3, 2, 1, 3, 5}, {3, 1, -1, 1, 3}, {7, 3, 1, 5, 9}};
  for (const auto& pin : points) {
    const std::uint64_t n = std::uint64_t{1} << pin.m;
    const std::uint64_t fact = srim_count(pin.q, n, pin.sign);
    const std::uint64_t rec = pin.sign == 1 ? count_srim_cyclic_recursive(pin.q, pin.m, 1)
                                            : count_srim_negacyclic_recursive(pin.q, pin.m, 1);
    const std::uint64_t printed = pin.sign == 1 ? count_srim_cyclic_as_printed(pin.q, pin.m, 1)
                                                : count_srim_negacyclic_as_printed(pin.q, pin.m, 1);
    const std::string at = where(pin.q, n, pin.sign, Mode::Euclidean);
    tally.check(fact == pin.truth, [&] { return at + ": factorization gives " + std::to_string(fact); });
    tally.check(rec == pin.truth, [&] { return at + ": recursion gives " + std::to_string(rec); });
    tally.check(printed == pin.printed, [&] { return at + ": uncorrected recursion evaluates to " + std::to_string(printed); });
    pins.push_back(Json{{"q", pin.q}, {"n", n}, {"sign", pin.sign == 1 ? "+1" : "-1"}, {"true", fact}, {"as_printed", printed}});
  }
  const std::pair<std::uint64_t, unsigned> sweep[] = {{3, 1}, {3, 2}, {3, 3}, {7, 2}, {7, 3}};
  for (const auto& [q, m] : sweep) {
    const std::uint64_t n = std::uint64_t{1} << m;
    for (const int sign : {1, -1}) {
      const std::uint64_t fact = srim_count(q, n, sign);
      const std::uint64_t rec = sign == 1 ? count_srim_cyclic_recursive(q, m, 1) : count_srim_negacyclic_recursive(q, m, 1);
      tally.check(fact == rec, [&] { return "pinned recursion value differs: " + where(q, n, sign, Mode::Euclidean); });
    }
  }
  art["recursion_pins"] = std::move(pins);
}

// ---------------------------------------------------------------------------
// 6. Extreme cases, prime-power dichotomy, product rules and two-prime counts.

ExtremeClass truth_class(const Truth& t) {
  if (t.s == t.r) return ExtremeClass::AllSelf;
  if (t.s == 1) return ExtremeClass::OnlyXPlusOne;
  return ExtremeClass::Mixed;
}

bool is_prime_power(std::uint64_t n) { return n > 1 && nt::factorize(n).factors.size() == 1; }

void criterion_extremes(const SelftestConfig& cfg, const TruthTable& truth, CriterionResult& res, Json& art) {
  Tally tally(res);
  const std::uint64_t limit = std::min<std::uint64_t>(199, cfg.n_max);
  Json verdicts = Json::array();
  for (const auto q : small_qs(cfg)) {
    const auto classify = [&](std::uint64_t n, Mode mode) {
      return mode == Mode::Euclidean ? classify_extreme_srim(q, n) : classify_extreme_scrim(q, n);
    };
    for (std::uint64_t n = 1; n <= limit; n += 2) {
      if (nt::gcd(n, q) != 1) continue;
      for (const auto mode : {Mode::Euclidean, Mode::Hermitian}) {
        const Truth* t = lookup(truth, q, n, -1, mode);
        if (!t) continue;
        const ExtremeClass c = classify(n, mode);
        tally.check(c == truth_class(*t), [&] { return "extreme-case verdict differs: " + where(q, n, -1, mode); });
        if (is_prime_power(n)) {
          tally.check(c != ExtremeClass::Mixed, [&] { return "prime power classified mixed: " + where(q, n, -1, mode); });
        }
        verdicts.push_back(Json{{"q", q}, {"n", n}, {"mode", std::string(to_string(mode))}, {"verdict", std::string(to_string(c))}});
      }
    }

    // Product rules over coprime odd pairs n1, n2 >= 3.
    for (std::uint64_t n1 = 3; n1 <= limit; n1 += 2) {
      for (std::uint64_t n2 = 3; n1 * n2 <= limit; n2 += 2) {
        if (n1 == n2 || nt::gcd(n1, n2) != 1 || nt::gcd(n1 * n2, q) != 1) continue;
        for (const auto mode : {Mode::Euclidean, Mode::Hermitian}) {
          const Truth* a = lookup(truth, q, n1, -1, mode);
          const Truth* b = lookup(truth, q, n2, -1, mode);
          const Truth* ab = lookup(truth, q, n1 * n2, -1, mode);
          if (!a || !b || !ab) continue;
          const auto ca = truth_class(*a);
          const auto cb = truth_class(*b);
          const auto cab = truth_class(*ab);
          const std::string at = where(q, n1 * n2, -1, mode) + " n1=" + std::to_string(n1) + " n2=" + std::to_string(n2);
          if (ca == ExtremeClass::OnlyXPlusOne && cb == ExtremeClass::OnlyXPlusOne) {
            tally.check(cab == ExtremeClass::OnlyXPlusOne, [&] { return at + ": only-x+1 not preserved by the product"; });
          }
          if (ca == ExtremeClass::AllSelf && cb == ExtremeClass::OnlyXPlusOne) {
            tally.check(ab->self_polys == a->self_polys, [&] { return at + ": self-paired factor set differs from the n1 side"; });
          }
          if (ca == ExtremeClass::AllSelf && cb == ExtremeClass::AllSelf) {
            if (mode == Mode::Euclidean) {
              const unsigned s1 = nt::exact_divide(2, nt::mult_ord(q % n1, n1));
              const unsigned s2 = nt::exact_divide(2, nt::mult_ord(q % n2, n2));
              tally.check((cab == ExtremeClass::AllSelf) == (s1 == s2 && s1 >= 1),
                          [&] { return at + ": all-self product does not follow the common 2-adic order rule"; });
            } else {
              tally.check(cab == ExtremeClass::AllSelf, [&] { return at + ": all-self not preserved by the product"; });
            }
          }
        }
      }
    }

    // Two-prime counts, both orders of (l1, l2).
    std::vector<std::uint64_t> primes;
    for (std::uint64_t l = 3; l <= limit; l += 2) {
      if (nt::is_prime(l) && q % l != 0) primes.push_back(l);
    }
    for (const auto l1 : primes) {
      for (const auto l2 : primes) {
        if (l1 == l2) continue;
        for (unsigned r1 = 1; nt::ipow(l1, r1) * l2 <= limit; ++r1) {
          for (unsigned r2 = 1; nt::ipow(l1, r1) * nt::ipow(l2, r2) <= limit; ++r2) {
            const std::uint64_t n = nt::ipow(l1, r1) * nt::ipow(l2, r2);
            const std::string at = "q=" + std::to_string(q) + " l1=" + std::to_string(l1) + "^" + std::to_string(r1) +
                                   " l2=" + std::to_string(l2) + "^" + std::to_string(r2);
            if (const Truth* t = lookup(truth, q, n, -1, Mode::Euclidean)) {
              tally.check(count_two_prime_srim(q, l1, r1, l2, r2) == t->s, [&] { return at + ": two-prime SRIM count differs"; });
            }
            if (const Truth* t = lookup(truth, q, n, -1, Mode::Hermitian)) {
              tally.check(count_two_prime_scrim(q, l1, r1, l2, r2) == t->s, [&] { return at + ": two-prime SCRIM count differs"; });
            }
          }
        }
      }
    }
  }
  art["extreme_verdicts"] = std::move(verdicts);
}

// ---------------------------------------------------------------------------
// 7. Duals, LCD predicate and census over the divisors of x^n + 1.

struct CodeOut {
  Log log;
  Json summary;
};

void code_point(std::uint64_t q, std::uint64_t n, Mode mode, std::uint64_t cap, CodeOut& out) {
  const std::string at = where(q, n, -1, mode);
  try {
    const FieldPtr base = field_of(q);
    const FactorizationReport rep = factor_xn(base, n, -1, mode);
    const FieldPtr W = rep.field;
    const LcdCensus census = enumerate_lcd(base, n, mode);
    const LcdCensus formula = count_lcd(q, n, mode);
    const auto& gens = *census.generators;
    const std::uint64_t mu_power = nt::ipow(base->p(), rep.length.mu);

    out.log.check(census.log2_count() < 63 && gens.size() == (std::uint64_t{1} << census.log2_count()),
                  [&] { return at + ": census lists " + std::to_string(gens.size()) + " codes, expected 2^" + std::to_string(census.log2_count()); });
    out.log.check(formula.r == rep.r && formula.s == rep.s && formula.count() == census.count(),
                  [&] { return at + ": counting formula differs from the enumerated census"; });

    std::set<std::string> members;
    for (const auto& g : gens) {
      members.insert(to_string(g));
      const Poly image = mode == Mode::Euclidean ? reciprocal_star(g) : dagger(g, q);
      out.log.check(image == g, [&] { return at + ": LCD generator " + to_string(g) + " is not fixed"; });
      bool exponents_ok = true;
      for (const auto& f : rep.records) {
        Poly rest = g;
        std::uint64_t k = 0;
        while (rest.degree() >= f.poly.degree()) {
          auto [quot, rem] = divrem(rest, f.poly);
          if (!rem.is_zero()) break;
          rest = std::move(quot);
          ++k;
        }
        exponents_ok = exponents_ok && (k == 0 || k == mu_power);
      }
      out.log.check(exponents_ok, [&] { return at + ": LCD generator " + to_string(g) + " has an exponent outside {0, p^mu}"; });
      out.log.check(is_lcd(make_code(W, n, g), mode), [&] { return at + ": listed generator " + to_string(g) + " fails is_lcd"; });
    }

    // Divisors as exponent vectors over the distinct factors.
    const std::size_t r = rep.records.size();
    std::vector<std::vector<Poly>> powers(r);
    for (std::size_t i = 0; i < r; ++i) {
      powers[i].push_back(Poly::constant(W, W->one()));
      for (std::uint64_t a = 1; a <= mu_power; ++a) powers[i].push_back(powers[i].back() * rep.records[i].poly);
    }
    long double lattice = 1;
    for (std::size_t i = 0; i < r; ++i) lattice *= static_cast<long double>(mu_power + 1);
    const bool exhaustive = lattice <= static_cast<long double>(cap);
    std::vector<std::vector<std::uint64_t>> exponents;
    if (exhaustive) {
      std::vector<std::uint64_t> e(r, 0);
      for (;;) {
        exponents.push_back(e);
        std::size_t i = 0;
        while (i < r && e[i] == mu_power) e[i++] = 0;
        if (i == r) break;
        ++e[i];
      }
    } else {
      std::mt19937_64 rng(0x6c6364u ^ (q << 32) ^ (n << 8) ^ static_cast<std::uint64_t>(mode == Mode::Hermitian));
      std::uniform_int_distribution<std::uint64_t> pick(0, mu_power);
      exponents.emplace_back(r, 0);
      exponents.emplace_back(r, mu_power);
      while (exponents.size() < cap) {
        std::vector<std::uint64_t> e(r);
        for (auto& x : e) x = pick(rng);
        exponents.push_back(std::move(e));
      }
      // Every LCD generator is tested as well.
      for (const auto& g : gens) {
        std::vector<std::uint64_t> e(r, 0);
        for (std::size_t i = 0; i < r; ++i) {
          if ((g % powers[i][1]).is_zero()) e[i] = mu_power;
        }
        exponents.push_back(std::move(e));
      }
    }

    std::uint64_t lcd_count = 0;
    for (const auto& e : exponents) {
      Poly g = Poly::constant(W, W->one());
      for (std::size_t i = 0; i < r; ++i) {
        if (e[i]) g = g * powers[i][e[i]];
      }
      const NegacyclicCode code = make_code(W, n, g);
      const std::string cat = at + " g=" + to_string(g);
      const Poly dual_gen = dual_generator(code, mode);
      const NegacyclicCode brute = brute_dual(code, mode);
      out.log.check(brute.gen == dual_gen, [&] { return cat + ": null-space dual generator " + to_string(brute.gen) + " differs from " + to_string(dual_gen); });
      out.log.check(brute.dim == n - code.dim, [&] { return cat + ": dual dimension is not n - k"; });
      const NegacyclicCode dual = make_code(W, n, dual_gen);
      out.log.check(dual_generator(dual, mode) == g, [&] { return cat + ": dual of the dual differs"; });
      const bool lcd = is_lcd(code, mode);
      const std::uint64_t meet = intersection_dim(code, dual);
      const std::uint64_t meet_dense = intersection_dim_dense(code, dual);
      out.log.check(meet == meet_dense, [&] { return cat + ": algebraic and dense intersection dimensions differ"; });
      out.log.check(lcd == (meet == 0), [&] { return cat + ": is_lcd disagrees with the intersection dimension"; });
      out.log.check(lcd == (members.count(to_string(g)) == 1), [&] { return cat + ": is_lcd disagrees with census membership"; });
      if (exhaustive) lcd_count += lcd;
    }
    if (exhaustive) {
      out.log.check(lcd_count == gens.size(), [&] { return at + ": number of LCD divisors differs from the census"; });
    }
    out.summary = to_json(census);
    out.summary["divisors_tested"] = exponents.size();
    out.summary["exhaustive"] = exhaustive;
  } catch (const std::exception& ex) {
    out.log.check(false, [&] { return at + ": " + ex.what(); });
  }
}

void criterion_codes(const SelftestConfig& cfg, unsigned threads, CriterionResult& res, Json& art) {
  std::vector<std::tuple<std::uint64_t, std::uint64_t, Mode>> items;
  for (const auto q : small_qs(cfg)) {
    for (std::uint64_t n = 1; n <= cfg.code_n_max; ++n) {
      for (const auto mode : {Mode::Euclidean, Mode::Hermitian}) items.emplace_back(q, n, mode);
    }
  }
  std::vector<CodeOut> outs(items.size());
  parallel_for(items.size(), threads, [&](std::size_t i) {
    const auto& [q, n, mode] = items[i];
    code_point(q, n, mode, cfg.divisor_cap, outs[i]);
  });
  Tally tally(res);
  Json censuses = Json::array();
  for (auto& o : outs) {
    tally.absorb(o.log.checks, o.log.failures);
    censuses.push_back(std::move(o.summary));
  }

  // The census size depends only on the part of n prime to p.
  Json mu_rows = Json::array();
  for (const auto q : small_qs(cfg)) {
    const std::uint64_t p = nt::as_prime_power(q)->p;
    for (std::uint64_t n0 = 1; n0 <= cfg.code_n_max; ++n0) {
      if (n0 % p == 0) continue;
      for (const auto mode : {Mode::Euclidean, Mode::Hermitian}) {
        const std::string base_count = count_lcd(q, n0, mode).count();
        for (unsigned mu = 1; mu <= 2; ++mu) {
          const std::uint64_t n = n0 * nt::ipow(p, mu);
          tally.check(count_lcd(q, n, mode).count() == base_count,
                      [&] { return where(q, n, -1, mode) + ": LCD count depends on mu"; });
        }
        mu_rows.push_back(Json{{"q", q}, {"n0", n0}, {"mode", std::string(to_string(mode))}, {"count", base_count}});
      }
    }
  }
  art["lcd_censuses"] = std::move(censuses);
  art["lcd_mu_independence"] = std::move(mu_rows);
}

template <class Fn>
void timed(CriterionResult& res, Fn&& fn) {
  const auto t0 = Clock::now();
  try {
    fn();
  } catch (const std::exception& ex) {
    Tally(res).fail(std::string("exception: ") + ex.what());
  }
  res.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
}

}  // namespace

unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("NEGACYCL_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

SuiteRun run_suite(const SelftestConfig& cfg) {
  const unsigned threads = resolve_threads(cfg.threads);
  SuiteRun run;
  run.criteria.resize(7);
  const char* names[] = {"good-integer predicates match brute force",
                         "coset characterizations match integer tests",
                         "closed-form counts match explicit factorizations",
                         "difference identities",
                         "recursive counts and pinned values",
                         "extreme cases, product rules, two-prime counts",
                         "duals, LCD predicate and census"};
  for (int i = 0; i < 7; ++i) {
    run.criteria[i].id = i + 1;
    run.criteria[i].name = names[i];
  }
  Json& art = run.artifact;
  art["config"] = Json{{"q_max", cfg.q_max}, {"n_max", cfg.n_max}, {"d_max", cfg.d_max},
                       {"coset_max", cfg.coset_max}, {"code_n_max", cfg.code_n_max}, {"divisor_cap", cfg.divisor_cap}};
  timed(run.criteria[0], [&] { criterion_good_integers(cfg, run.criteria[0], art); });
  timed(run.criteria[1], [&] { criterion_cosets(cfg, run.criteria[1], art); });
  TruthTable truth;
  timed(run.criteria[2], [&] { truth = criterion_factor_counts(cfg, threads, run.criteria[2], art); });
  timed(run.criteria[3], [&] { criterion_difference(cfg, truth, run.criteria[3], art); });
  timed(run.criteria[4], [&] { criterion_recursions(cfg, truth, run.criteria[4], art); });
  timed(run.criteria[5], [&] { criterion_extremes(cfg, truth, run.criteria[5], art); });
  timed(run.criteria[6], [&] { criterion_codes(cfg, threads, run.criteria[6], art); });
  return run;
}

bool SelftestOutcome::all_passed() const {
  return !criteria.empty() && std::all_of(criteria.begin(), criteria.end(), [](const auto& c) { return c.passed(); });
}

SelftestOutcome run_selftest(const SelftestConfig& cfg) {
  SuiteRun first = run_suite(cfg);
  CriterionResult det;
  det.id = 8;
  det.name = "two full runs give byte-identical JSON";
  SuiteRun second;
  timed(det, [&] {
    second = run_suite(cfg);
    const std::string a = first.artifact.dump();
    const std::string b = second.artifact.dump();
    Tally tally(det);
    tally.check(a == b, [&] {
      const auto diff = std::mismatch(a.begin(), a.end(), b.begin(), b.end());
      return "artifacts differ at byte " + std::to_string(diff.first - a.begin());
    });
    for (std::size_t i = 0; i < first.criteria.size(); ++i) {
      tally.check(first.criteria[i].checks == second.criteria[i].checks &&
                      first.criteria[i].failures == second.criteria[i].failures,
                  [&] { return "criterion " + std::to_string(i + 1) + " tallies differ between runs"; });
    }
  });
  SelftestOutcome out;
  out.criteria = std::move(first.criteria);
  out.criteria.push_back(std::move(det));
  out.artifact = std::move(first.artifact);
  return out;
}

std::string format_result(const CriterionResult& c) {
  std::ostringstream os;
  os << (c.passed() ? "PASS" : "FAIL") << "  " << c.id << "  " << c.name << ": " << c.checks << " checks, "
     << c.failures << " failures";
  os.setf(std::ios::fixed);
  os.precision(1);
  os << " (" << c.seconds << " s)";
  if (!c.passed() && !c.first_failure.empty()) os << "\n      first failure: " << c.first_failure;
  return os.str();
}

}  // namespace negacycl
