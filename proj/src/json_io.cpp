#include "negacycl/json_io.hpp"

#include <stdexcept>

#include "negacycl/numtheory.hpp"

namespace negacycl {

namespace {

FieldPtr working_field(std::uint64_t p, unsigned e, Mode mode) {
  return FieldCtx::make(p, mode == Mode::Euclidean ? e : 2 * e);
}

}  // namespace

Json to_json(const FactorizationReport& report) {
  Json j;
  j["q"] = report.q;
  j["p"] = report.p;
  j["e"] = report.e;
  j["n"] = report.n;
  j["sign"] = report.sign == 1 ? "+1" : "-1";
  j["mode"] = std::string(to_string(report.mode));
  j["mu"] = report.length.mu;
  j["m"] = report.length.m;
  j["n_prime"] = report.length.n_prime;
  j["r"] = report.r;
  j["s"] = report.s;
  j["t"] = report.t;
  Json factors = Json::array();
  for (const auto& rec : report.records) {
    Json f;
    f["poly"] = to_string(rec.poly);
    f["mult"] = rec.multiplicity;
    f["coset_rep"] = rec.coset_rep;
    if (rec.self_paired()) {
      f["tag"] = "self";
    } else {
      f["tag"] = Json{{"paired", *rec.partner}};
    }
    factors.push_back(std::move(f));
  }
  j["factors"] = std::move(factors);
  return j;
}

FactorizationReport report_from_json(const Json& j) {
  FactorizationReport r;
  r.p = j.at("p").get<std::uint64_t>();
  r.e = j.at("e").get<unsigned>();
  r.q = j.at("q").get<std::uint64_t>();
  r.n = j.at("n").get<std::uint64_t>();
  const auto sign = j.at("sign").get<std::string>();
  if (sign != "+1" && sign != "-1") throw std::invalid_argument("report JSON: bad sign");
  r.sign = sign == "+1" ? 1 : -1;
  r.mode = parse_mode(j.at("mode").get<std::string>());
  r.length.mu = j.at("mu").get<unsigned>();
  r.length.m = j.at("m").get<unsigned>();
  r.length.n_prime = j.at("n_prime").get<std::uint64_t>();
  r.r = j.at("r").get<std::uint64_t>();
  r.s = j.at("s").get<std::uint64_t>();
  r.t = j.at("t").get<std::uint64_t>();
  r.field = working_field(r.p, r.e, r.mode);
  const std::uint64_t core = (std::uint64_t{1} << r.length.m) * r.length.n_prime;
  r.coset_modulus = r.sign == -1 ? 2 * core : core;
  for (const auto& f : j.at("factors")) {
    FactorRecord rec;
    rec.poly = parse_poly(r.field, f.at("poly").get<std::string>());
    rec.multiplicity = f.at("mult").get<std::uint64_t>();
    rec.coset_rep = f.at("coset_rep").get<std::uint64_t>();
    rec.additive_order = nt::additive_ord(rec.coset_rep, r.coset_modulus);
    const auto& tag = f.at("tag");
    if (tag.is_string()) {
      if (tag.get<std::string>() != "self") throw std::invalid_argument("report JSON: bad tag");
    } else {
      rec.partner = tag.at("paired").get<std::size_t>();
    }
    r.records.push_back(std::move(rec));
  }
  return r;
}

Json to_json(const CountBreakdown& b) {
  Json j;
  j["q"] = b.q;
  j["m"] = b.m;
  j["n_prime"] = b.n_prime;
  j["nu"] = b.nu;
  Json terms = Json::array();
  for (const auto& t : b.terms) {
    terms.push_back(Json{{"d", t.d}, {"member", t.member}, {"phi", t.phi}, {"ord", t.ord},
                         {"contribution", t.contribution}});
  }
  j["terms"] = std::move(terms);
  j["total"] = b.total;
  return j;
}

CountBreakdown breakdown_from_json(const Json& j) {
  CountBreakdown b;
  b.q = j.at("q").get<std::uint64_t>();
  b.m = j.at("m").get<unsigned>();
  b.n_prime = j.at("n_prime").get<std::uint64_t>();
  b.nu = j.at("nu").get<unsigned>();
  for (const auto& t : j.at("terms")) {
    b.terms.push_back(CountTerm{t.at("d").get<std::uint64_t>(), t.at("member").get<bool>(),
                                t.at("phi").get<std::uint64_t>(), t.at("ord").get<std::uint64_t>(),
                                t.at("contribution").get<std::uint64_t>()});
  }
  b.total = j.at("total").get<std::uint64_t>();
  return b;
}

Json to_json(const LcdCensus& census) {
  Json j;
  j["q"] = census.q;
  j["n"] = census.n;
  j["mode"] = std::string(to_string(census.mode));
  j["mu"] = census.length.mu;
  j["m"] = census.length.m;
  j["n_prime"] = census.length.n_prime;
  j["r"] = census.r;
  j["s"] = census.s;
  j["t"] = census.t;
  if (census.log2_count() < 64) {
    j["count"] = std::uint64_t{1} << census.log2_count();
  } else {
    j["count"] = census.count();
  }
  if (census.generators) {
    Json gens = Json::array();
    for (const auto& g : *census.generators) gens.push_back(to_string(g));
    j["generators"] = std::move(gens);
  }
  return j;
}

LcdCensus census_from_json(const Json& j) {
  LcdCensus c;
  c.q = j.at("q").get<std::uint64_t>();
  c.n = j.at("n").get<std::uint64_t>();
  c.mode = parse_mode(j.at("mode").get<std::string>());
  c.length.mu = j.at("mu").get<unsigned>();
  c.length.m = j.at("m").get<unsigned>();
  c.length.n_prime = j.at("n_prime").get<std::uint64_t>();
  c.r = j.at("r").get<std::uint64_t>();
  c.s = j.at("s").get<std::uint64_t>();
  c.t = j.at("t").get<std::uint64_t>();
  const auto& count = j.at("count");
  const std::string text = count.is_string() ? count.get<std::string>() : std::to_string(count.get<std::uint64_t>());
  if (text != c.count()) throw std::invalid_argument("census JSON: count differs from 2^{(r+s)/2}");
  if (j.contains("generators")) {
    const auto pp = nt::as_prime_power(c.q);
    if (!pp) throw std::invalid_argument("census JSON: q is not a prime power");
    const FieldPtr field = working_field(pp->p, pp->e, c.mode);
    std::vector<Poly> gens;
    for (const auto& g : j.at("generators")) gens.push_back(parse_poly(field, g.get<std::string>()));
    c.generators = std::move(gens);
  }
  return c;
}

bool same_report(const FactorizationReport& a, const FactorizationReport& b) {
  if (a.p != b.p || a.e != b.e || a.q != b.q || a.n != b.n || a.sign != b.sign || a.mode != b.mode ||
      !(a.length == b.length) || a.coset_modulus != b.coset_modulus || a.field != b.field || a.r != b.r ||
      a.s != b.s || a.t != b.t || a.records.size() != b.records.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    const auto& x = a.records[i];
    const auto& y = b.records[i];
    if (x.poly != y.poly || x.multiplicity != y.multiplicity || x.coset_rep != y.coset_rep ||
        x.additive_order != y.additive_order || x.partner != y.partner) {
      return false;
    }
  }
  return true;
}

bool same_breakdown(const CountBreakdown& a, const CountBreakdown& b) {
  if (a.q != b.q || a.m != b.m || a.n_prime != b.n_prime || a.nu != b.nu || a.total != b.total ||
      a.terms.size() != b.terms.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.terms.size(); ++i) {
    const auto& x = a.terms[i];
    const auto& y = b.terms[i];
    if (x.d != y.d || x.member != y.member || x.phi != y.phi || x.ord != y.ord || x.contribution != y.contribution) {
      return false;
    }
  }
  return true;
}

bool same_census(const LcdCensus& a, const LcdCensus& b) {
  if (a.q != b.q || a.n != b.n || a.mode != b.mode || !(a.length == b.length) || a.r != b.r || a.s != b.s ||
      a.t != b.t || a.generators.has_value() != b.generators.has_value()) {
    return false;
  }
  return !a.generators || *a.generators == *b.generators;
}

}  // namespace negacycl
