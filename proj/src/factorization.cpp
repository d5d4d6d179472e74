#include "negacycl/factorization.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "negacycl/numtheory.hpp"

namespace negacycl {

std::string_view to_string(Mode mode) { return mode == Mode::Euclidean ? "euclidean" : "hermitian"; }

Mode parse_mode(std::string_view text) {
  if (text == "euclidean") return Mode::Euclidean;
  if (text == "hermitian") return Mode::Hermitian;
  throw std::invalid_argument("mode must be 'euclidean' or 'hermitian'");
}

LengthDecomposition decompose_length(std::uint64_t n, std::uint64_t p) {
  if (n == 0) throw std::invalid_argument("decompose_length: n must be positive");
  if (p < 3 || !nt::is_prime(p)) throw std::invalid_argument("decompose_length: p must be an odd prime");
  LengthDecomposition d;
  while (n % p == 0) {
    n /= p;
    ++d.mu;
  }
  while (n % 2 == 0) {
    n /= 2;
    ++d.m;
  }
  d.n_prime = n;
  return d;
}

namespace {

void require_coset_matches(const CyclotomicCoset& coset, const CyclotomicRoot& alpha) {
  if (coset.n != alpha.order) throw std::invalid_argument("coset modulus differs from the root order");
  const std::uint64_t Q = alpha.field->base()->q();
  if (coset.q % coset.n != Q % coset.n) {
    throw std::invalid_argument("coset multiplier differs from the base field order");
  }
}

Poly partner_of(const Poly& f, Mode mode, std::uint64_t q) {
  return mode == Mode::Euclidean ? reciprocal_star(f) : dagger(f, q);
}

}  // namespace

Poly minimal_poly_from_coset(const CyclotomicCoset& coset, const CyclotomicRoot& alpha) {
  require_coset_matches(coset, alpha);
  const ExtensionField& K = *alpha.field;
  // Coefficients of the product in K[x], ascending.
  std::vector<Poly> prod{K.one()};
  for (const auto j : coset.elements) {
    const Poly root = alpha.power(j);
    std::vector<Poly> next(prod.size() + 1, Poly(K.base()));
    for (std::size_t i = 0; i < prod.size(); ++i) {
      next[i + 1] = next[i + 1] + prod[i];
      next[i] = next[i] - K.mul(root, prod[i]);
    }
    prod = std::move(next);
  }
  std::vector<Elem> coeffs;
  coeffs.reserve(prod.size());
  for (const auto& c : prod) {
    if (!K.in_base_field(c) || c.degree() > 0) {
      throw std::logic_error("minimal_poly_from_coset: coefficient outside the base field");
    }
    coeffs.push_back(c.coeff(0));
  }
  return Poly(K.base(), std::move(coeffs));
}

Poly minimal_poly_by_dependency(const CyclotomicCoset& coset, const CyclotomicRoot& alpha) {
  require_coset_matches(coset, alpha);
  Poly f = minimal_polynomial(*alpha.field, alpha.power(coset.rep));
  if (f.degree() != static_cast<int>(coset.size())) {
    throw std::logic_error("minimal_poly_by_dependency: degree differs from the coset size");
  }
  return f;
}

FactorizationReport factor_xn(const FieldPtr& base, std::uint64_t n, int sign, Mode mode) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("factor_xn: sign must be +1 or -1");
  if (base->p() == 2) throw std::invalid_argument("factor_xn: odd characteristic only");
  if (n == 0) throw std::invalid_argument("factor_xn: n must be positive");

  FactorizationReport rep;
  rep.p = base->p();
  rep.e = base->e();
  rep.q = base->q();
  rep.n = n;
  rep.sign = sign;
  rep.mode = mode;
  rep.length = decompose_length(n, rep.p);
  rep.field = mode == Mode::Euclidean ? base : FieldCtx::make(rep.p, 2 * rep.e);

  const std::uint64_t core = (std::uint64_t{1} << rep.length.m) * rep.length.n_prime;
  const std::uint64_t N = sign == -1 ? 2 * core : core;
  rep.coset_modulus = N;
  const std::uint64_t multiplicity = nt::ipow(rep.p, rep.length.mu);
  const std::uint64_t Q = rep.field->q();
  const CyclotomicRoot alpha = cyclotomic_root(rep.field, N);

  struct Raw {
    FactorRecord record;
    bool self;
  };
  std::vector<Raw> raw;
  for (const auto& c : representatives(Q, N)) {
    if (sign == -1 && !divides_xn_plus1(rep.q, rep.length.m, rep.length.n_prime, c.rep)) continue;
    FactorRecord rec;
    rec.poly = minimal_poly_by_dependency(c, alpha);
    rec.multiplicity = multiplicity;
    rec.coset_rep = c.rep;
    rec.additive_order = nt::additive_ord(c.rep, N);
    const bool self = mode == Mode::Euclidean ? is_srim_coset(rep.q, N, c.rep) : is_scrim_coset(rep.q, N, c.rep);
    raw.push_back(Raw{std::move(rec), self});
  }
  std::sort(raw.begin(), raw.end(),
            [](const Raw& a, const Raw& b) { return canonical_less(a.record.poly, b.record.poly); });

  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i].self || raw[i].record.partner) continue;
    const Poly target = partner_of(raw[i].record.poly, mode, rep.q);
    const auto it = std::find_if(raw.begin(), raw.end(), [&](const Raw& x) { return x.record.poly == target; });
    if (it == raw.end() || it->self || it->record.partner || static_cast<std::size_t>(it - raw.begin()) == i) {
      throw std::logic_error("factor_xn: no reciprocal partner for a non-self factor");
    }
    const auto j = static_cast<std::size_t>(it - raw.begin());
    // The partner must come from Cl(-i) (Euclidean) or Cl(-q i) (Hermitian).
    const std::uint64_t scale = mode == Mode::Euclidean ? 1 : rep.q % N;
    const std::uint64_t image = (N - nt::mul_mod(scale, raw[i].record.coset_rep, N)) % N;
    if (coset(Q, N, image).rep != raw[j].record.coset_rep) {
      throw std::logic_error("factor_xn: polynomial partner and coset partner disagree");
    }
    raw[i].record.partner = j;
    raw[j].record.partner = i;
  }

  for (auto& x : raw) {
    if (x.self) ++rep.s;
    rep.records.push_back(std::move(x.record));
  }
  rep.r = rep.records.size();
  rep.t = (rep.r - rep.s) / 2;

  Poly product = Poly::constant(rep.field, rep.field->one());
  for (const auto& rec : rep.records) product = product * pow(rec.poly, rec.multiplicity);
  if (product != Poly::binomial(rep.field, n, sign)) {
    throw std::logic_error("factor_xn: product of factors differs from x^n - sign");
  }
  return rep;
}

Verdict verify_report(const FactorizationReport& report) {
  const auto fail = [](std::string what) { return Verdict{false, std::move(what)}; };
  if (!report.field) return fail("report has no field");
  const std::uint64_t q = report.q;
  std::uint64_t self_count = 0;
  for (std::size_t i = 0; i < report.records.size(); ++i) {
    const auto& rec = report.records[i];
    const std::string where = "record " + std::to_string(i) + " (" + to_string(rec.poly) + ")";
    if (!rec.poly.is_monic() || rec.poly.degree() < 1) return fail(where + ": not monic of positive degree");
    if (rec.poly.coeff(0).is_zero()) return fail(where + ": zero constant term");
    if (!is_irreducible(rec.poly)) return fail(where + ": not irreducible");
    const Poly image = partner_of(rec.poly, report.mode, q);
    if (rec.self_paired()) {
      ++self_count;
      if (image != rec.poly) return fail(where + ": tagged self but differs from its reciprocal");
      continue;
    }
    const std::size_t j = *rec.partner;
    if (j >= report.records.size() || j == i) return fail(where + ": partner index out of range");
    if (report.records[j].partner != i) return fail(where + ": pairing is not symmetric");
    if (image != report.records[j].poly) return fail(where + ": partner is not its reciprocal");
    if (image == rec.poly) return fail(where + ": paired factor is self-reciprocal");
  }
  for (std::size_t i = 1; i < report.records.size(); ++i) {
    if (!canonical_less(report.records[i - 1].poly, report.records[i].poly)) {
      return fail("records are not in canonical order or repeat a factor");
    }
  }
  if (report.r != report.records.size()) return fail("r differs from the number of records");
  if (report.s != self_count) return fail("s differs from the number of self-paired records");
  if (report.r != report.s + 2 * report.t) return fail("r != s + 2t");

  Poly product = Poly::constant(report.field, report.field->one());
  for (const auto& rec : report.records) product = product * pow(rec.poly, rec.multiplicity);
  if (product != Poly::binomial(report.field, report.n, report.sign)) {
    return fail("product identity fails: factors do not multiply to x^n - sign");
  }
  return Verdict{};
}

}  // namespace negacycl
