// negacycl: factor x^n +- 1, count self-reciprocal factors, classify extreme
// cases, enumerate LCD negacyclic codes and run the acceptance sweep.
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "negacycl/counting.hpp"
#include "negacycl/factorization.hpp"
#include "negacycl/json_io.hpp"
#include "negacycl/negacyclic.hpp"
#include "negacycl/numtheory.hpp"
#include "negacycl/selftest.hpp"

using namespace negacycl;

namespace {

struct Options {
  std::uint64_t p = 3;
  unsigned e = 1;
  std::uint64_t n = 1;
  std::string sign = "-1";
  std::string mode = "euclidean";
  std::string format = "text";
  bool verbose = false;
  std::uint64_t q_max = 27;
  std::uint64_t n_max = 200;
  std::string artifact;
};

int parse_sign(const std::string& s) {
  if (s == "+1" || s == "1") return 1;
  if (s == "-1") return -1;
  throw std::invalid_argument("--sign must be +1 or -1");
}

FieldPtr base_field(const Options& o) {
  if (!nt::is_prime(o.p) || o.p == 2) throw std::invalid_argument("--p must be an odd prime");
  if (o.e == 0) throw std::invalid_argument("--e must be positive");
  return FieldCtx::make(o.p, o.e);
}

std::string binomial_name(std::uint64_t n, int sign) {
  return "x^" + std::to_string(n) + (sign == 1 ? " - 1" : " + 1");
}

std::string field_name(const FieldPtr& f) { return "F_" + std::to_string(f->q()); }

int cmd_factor(const Options& o) {
  const FieldPtr base = base_field(o);
  const int sign = parse_sign(o.sign);
  const FactorizationReport rep = factor_xn(base, o.n, sign, parse_mode(o.mode));
  const Verdict v = verify_report(rep);
  if (o.format == "json") {
    std::cout << to_json(rep).dump(2) << "\n";
  } else {
    std::cout << binomial_name(o.n, sign) << " over " << field_name(rep.field) << " (" << to_string(rep.mode)
              << "), n = " << o.p << "^" << rep.length.mu << " * 2^" << rep.length.m << " * " << rep.length.n_prime
              << "\n";
    std::cout << "r = " << rep.r << ", s = " << rep.s << ", t = " << rep.t << "\n";
    for (std::size_t i = 0; i < rep.records.size(); ++i) {
      const auto& f = rep.records[i];
      std::cout << "  [" << i << "] " << to_string(f.poly) << "  mult " << f.multiplicity << "  coset " << f.coset_rep;
      if (f.self_paired()) {
        std::cout << "  self\n";
      } else {
        std::cout << "  paired with [" << *f.partner << "]\n";
      }
    }
  }
  if (!v.ok) {
    std::cerr << "verification failed: " << v.detail << "\n";
    return 1;
  }
  return 0;
}

int cmd_count(const Options& o) {
  const FieldPtr base = base_field(o);
  const int sign = parse_sign(o.sign);
  const Mode mode = parse_mode(o.mode);
  const std::uint64_t q = base->q();
  const LengthDecomposition len = decompose_length(o.n, o.p);
  const std::uint64_t core = o.n / nt::ipow(o.p, len.mu);
  const bool srim = mode == Mode::Euclidean;

  CountBreakdown b;
  std::uint64_t recursive = 0;
  std::optional<std::uint64_t> printed;
  if (sign == 1) {
    b = srim ? count_srim_cyclic(q, core) : count_scrim_cyclic(q, core);
    recursive = srim ? count_srim_cyclic_recursive(q, len.m, len.n_prime)
                     : count_scrim_cyclic_recursive(q, len.m, len.n_prime);
    if (srim) printed = count_srim_cyclic_as_printed(q, len.m, len.n_prime);
  } else {
    b = srim ? count_srim_negacyclic(q, len.m, len.n_prime) : count_scrim_negacyclic(q, len.m, len.n_prime);
    recursive = srim ? count_srim_negacyclic_recursive(q, len.m, len.n_prime)
                     : count_scrim_negacyclic_recursive(q, len.m, len.n_prime);
    if (srim) printed = count_srim_negacyclic_as_printed(q, len.m, len.n_prime);
  }
  const std::uint64_t oracle = factor_xn(base, o.n, sign, mode).s;
  const bool printed_differs = printed && *printed != recursive;

  if (o.format == "json") {
    Json j;
    j["n"] = o.n;
    j["sign"] = sign == 1 ? "+1" : "-1";
    j["mode"] = std::string(to_string(mode));
    j["closed"] = b.total;
    j["recursive"] = recursive;
    j["oracle"] = oracle;
    if (o.verbose && printed) j["as_printed"] = *printed;
    j["breakdown"] = to_json(b);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << (srim ? "self-reciprocal" : "self-conjugate-reciprocal") << " factors of "
              << binomial_name(o.n, sign) << " over F_" << (srim ? q : q * q) << "\n";
    std::cout << "closed=" << b.total << " recursive=" << recursive << " oracle=" << oracle;
    if (o.verbose && printed) {
      std::cout << " as-printed=" << *printed << (printed_differs ? " (differs)" : "");
    }
    std::cout << "\n";
    if (o.verbose) {
      std::cout << "nu=" << b.nu << " m=" << b.m << " n'=" << b.n_prime << "\n";
      for (const auto& t : b.terms) {
        std::cout << "  d=" << t.d << (t.member ? " member" : " -") << " phi=" << t.phi << " ord=" << t.ord
                  << " contributes " << t.contribution << "\n";
      }
    }
  }
  return b.total == recursive && recursive == oracle ? 0 : 1;
}

int cmd_classify(const Options& o) {
  const FieldPtr base = base_field(o);
  const Mode mode = parse_mode(o.mode);
  const std::uint64_t q = base->q();
  if (o.n % 2 == 0) throw std::invalid_argument("classify needs odd --n");
  const ExtremeClass c = mode == Mode::Euclidean ? classify_extreme_srim(q, o.n) : classify_extreme_scrim(q, o.n);
  const FactorizationReport rep = factor_xn(base, o.n, -1, mode);
  if (o.format == "json") {
    Json j;
    j["q"] = q;
    j["n"] = o.n;
    j["mode"] = std::string(to_string(mode));
    j["verdict"] = std::string(to_string(c));
    Json primes = Json::array();
    for (const auto l : nt::factorize(o.n).primes()) {
      const std::uint64_t ord = nt::mult_ord(q % l, l);
      primes.push_back(Json{{"l", l}, {"ord", ord}, {"two_adic", nt::exact_divide(2, ord)}});
    }
    j["primes"] = std::move(primes);
    j["r"] = rep.r;
    j["s"] = rep.s;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << binomial_name(o.n, -1) << " over " << field_name(rep.field) << ": " << to_string(c) << " (r = " << rep.r
              << ", s = " << rep.s << ")\n";
    for (const auto l : nt::factorize(o.n).primes()) {
      const std::uint64_t ord = nt::mult_ord(q % l, l);
      std::cout << "  ord_" << l << "(" << q << ") = " << ord << ", 2-adic valuation " << nt::exact_divide(2, ord) << "\n";
    }
  }
  return 0;
}

int cmd_codes(const Options& o) {
  const FieldPtr base = base_field(o);
  const Mode mode = parse_mode(o.mode);
  LcdCensus census = count_lcd(base->q(), o.n, mode);
  if (census.log2_count() <= 12) {
    LcdCensus listed = enumerate_lcd(base, o.n, mode);
    if (listed.r != census.r || listed.s != census.s) {
      std::cerr << "census from the factorization differs from the counting formula\n";
      return 1;
    }
    census = std::move(listed);
  }
  if (o.format == "json") {
    std::cout << to_json(census).dump(2) << "\n";
  } else {
    std::cout << "LCD " << to_string(mode) << " negacyclic codes of length " << o.n << " over F_"
              << (mode == Mode::Euclidean ? base->q() : base->q() * base->q()) << "\n";
    std::cout << "mu=" << census.length.mu << " m=" << census.length.m << " n'=" << census.length.n_prime
              << " r=" << census.r << " s=" << census.s << " t=" << census.t << "\n";
    std::cout << "count = 2^" << census.log2_count() << " = " << census.count() << "\n";
    if (census.generators) {
      for (const auto& g : *census.generators) std::cout << "  " << to_string(g) << "\n";
    }
  }
  return 0;
}

int cmd_selftest(const Options& o) {
  SelftestConfig cfg;
  cfg.q_max = o.q_max;
  cfg.n_max = o.n_max;
  // Code lengths shrink with the grid so reduced sweeps stay quick.
  cfg.code_n_max = std::min<std::uint64_t>(cfg.code_n_max, o.n_max / 4);
  const SelftestOutcome out = run_selftest(cfg);
  if (o.format == "json") {
    Json j;
    Json rows = Json::array();
    for (const auto& c : out.criteria) {
      rows.push_back(Json{{"id", c.id}, {"name", c.name}, {"checks", c.checks}, {"failures", c.failures},
                          {"passed", c.passed()}, {"first_failure", c.first_failure}});
    }
    j["criteria"] = std::move(rows);
    j["passed"] = out.all_passed();
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& c : out.criteria) std::cout << format_result(c) << "\n";
    std::cout << (out.all_passed() ? "all criteria passed" : "some criteria FAILED") << "\n";
  }
  if (!o.artifact.empty()) {
    std::ofstream f(o.artifact);
    f << out.artifact.dump(1) << "\n";
    if (!f) throw std::runtime_error("cannot write " + o.artifact);
  }
  return out.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Self-reciprocal factors of x^n +- 1 and LCD negacyclic codes over odd-characteristic fields"};
  app.require_subcommand(1);
  Options o;

  const auto add_field = [&](CLI::App* sub) {
    sub->add_option("--p", o.p, "field characteristic (odd prime)")->required();
    sub->add_option("--e", o.e, "extension degree, q = p^e")->default_val(1);
  };
  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--mode", o.mode, "euclidean (F_q) or hermitian (F_{q^2})")
        ->check(CLI::IsMember({"euclidean", "hermitian"}))
        ->default_val("euclidean");
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}))->default_val("text");
    sub->add_flag("--verbose", o.verbose, "show per-divisor terms and uncorrected recursion values");
  };

  auto* factor = app.add_subcommand("factor", "factor x^n - 1 or x^n + 1 and tag self-reciprocal factors");
  add_field(factor);
  factor->add_option("--n", o.n, "length")->required()->check(CLI::PositiveNumber);
  factor->add_option("--sign", o.sign, "+1 for x^n - 1, -1 for x^n + 1")->check(CLI::IsMember({"+1", "1", "-1"}))->default_val("-1");
  add_common(factor);

  auto* count = app.add_subcommand("count", "closed-form, recursive and factorization counts");
  add_field(count);
  count->add_option("--n", o.n, "length")->required()->check(CLI::PositiveNumber);
  count->add_option("--sign", o.sign, "+1 for x^n - 1, -1 for x^n + 1")->check(CLI::IsMember({"+1", "1", "-1"}))->default_val("-1");
  add_common(count);

  auto* classify = app.add_subcommand("classify", "all-self / only-x+1 / mixed verdict for x^n + 1, n odd");
  add_field(classify);
  classify->add_option("--n", o.n, "odd length")->required()->check(CLI::PositiveNumber);
  add_common(classify);

  auto* codes = app.add_subcommand("codes", "count and list LCD negacyclic codes");
  add_field(codes);
  codes->add_option("--n", o.n, "length")->required()->check(CLI::PositiveNumber);
  add_common(codes);

  auto* selftest = app.add_subcommand("selftest", "run the acceptance sweep");
  selftest->add_option("--q-max", o.q_max, "largest field order in the grid")->default_val(27);
  selftest->add_option("--n-max", o.n_max, "largest length in the factorization grid")->default_val(200);
  selftest->add_option("--artifact", o.artifact, "write the JSON artifact of the first run here");
  add_common(selftest);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*factor) return cmd_factor(o);
    if (*count) return cmd_count(o);
    if (*classify) return cmd_classify(o);
    if (*codes) return cmd_codes(o);
    if (*selftest) return cmd_selftest(o);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
