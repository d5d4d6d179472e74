#include "negacycl/polyring.hpp"

#include <algorithm>
#include <stdexcept>

#include "negacycl/numtheory.hpp"

namespace negacycl {

namespace {

void require_same_field(const Poly& a, const Poly& b) {
  if (!a.ctx() || !b.ctx() || a.field().q() != b.field().q() || a.field().p() != b.field().p()) {
    throw std::invalid_argument("polynomial operands belong to different fields");
  }
}

void require_degree_cap(std::size_t len) {
  if (len > static_cast<std::size_t>(Poly::kMaxDegree) + 1) {
    throw std::length_error("polynomial degree exceeds the dense cap");
  }
}

// Reduce `r` (ascending, modified in place) modulo the monic polynomial g and
// optionally record the quotient.
void reduce_monic(std::vector<Elem>& r, std::span<const Elem> g, std::vector<Elem>* quot,
                  const FieldCtx& F) {
  const std::size_t dg = g.size() - 1;
  if (r.size() <= dg) return;
  if (quot) quot->assign(r.size() - dg, Elem{});
  if (F.is_prime_field()) {
    const std::uint64_t p = F.p();
    for (std::size_t k = r.size(); k-- > dg;) {
      const std::uint64_t c = r[k].code;
      if (c == 0) continue;
      if (quot) (*quot)[k - dg] = Elem{static_cast<std::uint32_t>(c)};
      const std::uint64_t nc = p - c;
      const std::size_t base = k - dg;
      for (std::size_t i = 0; i < dg; ++i) {
        if (g[i].code == 0) continue;
        r[base + i].code = static_cast<std::uint32_t>((r[base + i].code + nc * g[i].code) % p);
      }
      r[k] = Elem{};
    }
  } else {
    for (std::size_t k = r.size(); k-- > dg;) {
      const Elem c = r[k];
      if (c.is_zero()) continue;
      if (quot) (*quot)[k - dg] = c;
      const Elem nc = F.neg(c);
      const std::size_t base = k - dg;
      for (std::size_t i = 0; i < dg; ++i) {
        if (g[i].is_zero()) continue;
        r[base + i] = F.add(r[base + i], F.mul(nc, g[i]));
      }
      r[k] = Elem{};
    }
  }
  r.resize(dg);
}

std::vector<Elem> raw_mul(std::span<const Elem> a, std::span<const Elem> b, const FieldCtx& F) {
  if (a.empty() || b.empty()) return {};
  std::vector<Elem> out(a.size() + b.size() - 1);
  if (F.is_prime_field()) {
    const std::uint64_t p = F.p();
    std::vector<std::uint64_t> acc(out.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      const std::uint64_t ai = a[i].code;
      if (ai == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] += ai * b[j].code;
      // Keep accumulators below 2^63 for large p.
      if ((i & 1023U) == 1023U) {
        for (auto& x : acc) x %= p;
      }
    }
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = Elem{static_cast<std::uint32_t>(acc[k] % p)};
  } else {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.size(); ++j) {
        if (b[j].is_zero()) continue;
        out[i + j] = F.add(out[i + j], F.mul(a[i], b[j]));
      }
    }
  }
  return out;
}

}  // namespace

Poly::Poly(FieldPtr ctx, std::vector<Elem> coeffs) : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
  for (const auto c : c_) {
    if (!ctx_->contains(c)) throw std::invalid_argument("Poly: coefficient outside the field");
  }
  normalize();
  require_degree_cap(c_.size());
}

void Poly::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::constant(FieldPtr ctx, Elem c) { return Poly(std::move(ctx), std::vector<Elem>{c}); }

Poly Poly::monomial(FieldPtr ctx, Elem c, std::size_t k) {
  require_degree_cap(k + 1);
  std::vector<Elem> v(k + 1);
  v[k] = c;
  return Poly(std::move(ctx), std::move(v));
}

Poly Poly::from_ints(FieldPtr ctx, std::initializer_list<std::int64_t> coeffs) {
  std::vector<Elem> v;
  v.reserve(coeffs.size());
  for (const auto c : coeffs) v.push_back(ctx->from_int(c));
  return Poly(std::move(ctx), std::move(v));
}

Poly Poly::binomial(FieldPtr ctx, std::size_t n, std::int64_t lambda) {
  require_degree_cap(n + 1);
  std::vector<Elem> v(n + 1);
  v[n] = ctx->one();
  v[0] = ctx->add(v[0], ctx->from_int(-lambda));
  return Poly(std::move(ctx), std::move(v));
}

Poly Poly::monic() const {
  if (is_zero() || is_monic()) return *this;
  return scaled(ctx_->inv(lead()));
}

Poly Poly::scaled(Elem c) const {
  std::vector<Elem> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = ctx_->mul(c_[i], c);
  return Poly(ctx_, std::move(v));
}

Elem Poly::eval(Elem x) const {
  Elem acc{};
  for (std::size_t i = c_.size(); i-- > 0;) acc = ctx_->add(ctx_->mul(acc, x), c_[i]);
  return acc;
}

Poly Poly::operator-() const {
  std::vector<Elem> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = ctx_->neg(c_[i]);
  return Poly(ctx_, std::move(v));
}

Poly operator+(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  const FieldCtx& F = a.field();
  std::vector<Elem> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = F.add(a.coeff(i), b.coeff(i));
  return Poly(a.ctx_, std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  const FieldCtx& F = a.field();
  std::vector<Elem> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = F.sub(a.coeff(i), b.coeff(i));
  return Poly(a.ctx_, std::move(v));
}

Poly operator*(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  require_degree_cap(a.c_.size() + b.c_.size());
  return Poly(a.ctx_, raw_mul(a.c_, b.c_, a.field()));
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.c_.size() != b.c_.size()) return false;
  if (a.c_.empty()) return true;
  return a.field().q() == b.field().q() && a.c_ == b.c_;
}

bool canonical_less(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const auto ca = a.coeffs();
  const auto cb = b.coeffs();
  return std::lexicographical_compare(ca.begin(), ca.end(), cb.begin(), cb.end());
}

DivRem divrem(const Poly& f, const Poly& g) {
  require_same_field(f, g);
  if (g.is_zero()) throw std::domain_error("divrem: division by the zero polynomial");
  const FieldCtx& F = f.field();
  const Poly gm = g.monic();
  std::vector<Elem> r(f.coeffs().begin(), f.coeffs().end());
  std::vector<Elem> quot;
  reduce_monic(r, gm.coeffs(), &quot, F);
  Poly q(f.ctx(), std::move(quot));
  if (!g.is_monic()) q = q.scaled(F.inv(g.lead()));
  return DivRem{std::move(q), Poly(f.ctx(), std::move(r))};
}

Poly operator%(const Poly& f, const Poly& g) { return divrem(f, g).rem; }

Poly exact_div(const Poly& f, const Poly& g) {
  auto [quot, rem] = divrem(f, g);
  if (!rem.is_zero()) throw std::domain_error("exact_div: nonzero remainder");
  return quot;
}

Poly gcd(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Poly lcm(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) throw std::domain_error("lcm: zero operand");
  return exact_div(a * b, gcd(a, b)).monic();
}

Poly pow(const Poly& f, std::uint64_t k) {
  Poly result = Poly::constant(f.ctx(), f.field().one());
  Poly base = f;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

Poly mul_mod(const Poly& a, const Poly& b, const Poly& m) {
  require_same_field(a, b);
  if (m.is_zero()) throw std::domain_error("mul_mod: zero modulus");
  std::vector<Elem> prod = raw_mul(a.coeffs(), b.coeffs(), a.field());
  if (m.is_monic()) {
    reduce_monic(prod, m.coeffs(), nullptr, a.field());
    return Poly(a.ctx(), std::move(prod));
  }
  return Poly(a.ctx(), std::move(prod)) % m;
}

Poly pow_mod(const Poly& f, std::uint64_t k, const Poly& m) {
  Poly result = Poly::constant(f.ctx(), f.field().one()) % m;
  Poly base = f % m;
  while (k > 0) {
    if (k & 1U) result = mul_mod(result, base, m);
    k >>= 1U;
    if (k > 0) base = mul_mod(base, base, m);
  }
  return result;
}

Poly reciprocal_star(const Poly& f) {
  if (f.is_zero()) throw std::invalid_argument("reciprocal_star: zero polynomial");
  if (f.coeff(0).is_zero()) throw std::invalid_argument("reciprocal_star: f(0) = 0");
  const FieldCtx& F = f.field();
  const Elem scale = F.inv(f.coeff(0));
  const auto c = f.coeffs();
  std::vector<Elem> v(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) v[i] = F.mul(c[c.size() - 1 - i], scale);
  return Poly(f.ctx(), std::move(v));
}

Poly conjugate(const Poly& f, std::uint64_t base_q) {
  const FieldCtx& F = f.field();
  unsigned b = 0;
  for (std::uint64_t t = base_q; t > 1 && t % F.p() == 0; t /= F.p()) ++b;
  if (base_q < 2 || nt::ipow(F.p(), b) != base_q || F.e() % (2 * b) != 0) {
    throw std::invalid_argument("conjugate: field must contain F_{base_q^2}");
  }
  std::vector<Elem> v(f.coeffs().begin(), f.coeffs().end());
  for (auto& c : v) c = F.frobenius(c, base_q);
  return Poly(f.ctx(), std::move(v));
}

Poly dagger(const Poly& f, std::uint64_t base_q) { return conjugate(reciprocal_star(f), base_q); }

bool is_self_reciprocal(const Poly& f) { return reciprocal_star(f) == f; }

bool is_self_conj_reciprocal(const Poly& f, std::uint64_t base_q) { return dagger(f, base_q) == f; }

FrobeniusMap::FrobeniusMap(const Poly& modulus) : modulus_(modulus) {
  if (!modulus.is_monic() || modulus.degree() < 1) {
    throw std::invalid_argument("FrobeniusMap: modulus must be monic of degree >= 1");
  }
  const auto d = static_cast<std::size_t>(modulus.degree());
  const Poly xq = pow_mod(Poly::x(modulus.ctx()), modulus.field().q(), modulus);
  columns_.reserve(d);
  Poly col = Poly::constant(modulus.ctx(), modulus.field().one());
  for (std::size_t j = 0; j < d; ++j) {
    std::vector<Elem> v(col.coeffs().begin(), col.coeffs().end());
    v.resize(d);
    columns_.push_back(std::move(v));
    if (j + 1 < d) col = mul_mod(col, xq, modulus);
  }
}

Poly FrobeniusMap::apply(const Poly& a) const {
  const FieldCtx& F = modulus_.field();
  const std::size_t d = columns_.size();
  const Poly r = a.degree() >= static_cast<int>(d) ? a % modulus_ : a;
  if (F.is_prime_field()) {
    const std::uint64_t p = F.p();
    std::vector<std::uint64_t> acc(d, 0);
    const auto rc = r.coeffs();
    for (std::size_t j = 0; j < rc.size(); ++j) {
      const std::uint64_t c = rc[j].code;
      if (c == 0) continue;
      const auto& col = columns_[j];
      for (std::size_t i = 0; i < d; ++i) acc[i] += c * col[i].code;
      if ((j & 1023U) == 1023U) {
        for (auto& x : acc) x %= p;
      }
    }
    std::vector<Elem> out(d);
    for (std::size_t i = 0; i < d; ++i) out[i] = Elem{static_cast<std::uint32_t>(acc[i] % p)};
    return Poly(modulus_.ctx(), std::move(out));
  }
  std::vector<Elem> out(d);
  const auto rc = r.coeffs();
  for (std::size_t j = 0; j < rc.size(); ++j) {
    if (rc[j].is_zero()) continue;
    const auto& col = columns_[j];
    for (std::size_t i = 0; i < d; ++i) {
      if (!col[i].is_zero()) out[i] = F.add(out[i], F.mul(rc[j], col[i]));
    }
  }
  return Poly(modulus_.ctx(), std::move(out));
}

bool is_irreducible(const Poly& f) {
  if (!f.is_monic()) throw std::invalid_argument("is_irreducible: polynomial must be monic");
  if (f.degree() < 1) throw std::invalid_argument("is_irreducible: degree must be >= 1");
  const auto d = static_cast<std::uint64_t>(f.degree());
  if (d == 1) return true;
  if (f.coeff(0).is_zero()) return false;
  const FrobeniusMap frob(f);
  const Poly x = Poly::x(f.ctx());
  const auto primes = nt::factorize(d).primes();
  // powers[k] = x^{q^k} mod f
  std::vector<Poly> powers;
  powers.reserve(d + 1);
  powers.push_back(x);
  for (std::uint64_t k = 1; k <= d; ++k) powers.push_back(frob.apply(powers.back()));
  if (powers[d] != x) return false;
  for (const auto l : primes) {
    if (!gcd(powers[d / l] - x, f).is_one()) return false;
  }
  return true;
}

bool is_irreducible_trial(const Poly& f) {
  if (!f.is_monic()) throw std::invalid_argument("is_irreducible_trial: polynomial must be monic");
  if (f.degree() < 1) throw std::invalid_argument("is_irreducible_trial: degree must be >= 1");
  const FieldCtx& F = f.field();
  const int half = f.degree() / 2;
  for (int k = 1; k <= half; ++k) {
    const std::uint64_t count = nt::ipow(F.q(), static_cast<unsigned>(k));
    for (std::uint64_t t = 0; t < count; ++t) {
      std::vector<Elem> c(static_cast<std::size_t>(k) + 1);
      std::uint64_t rest = t;
      for (int i = 0; i < k; ++i) {
        c[static_cast<std::size_t>(i)] = Elem{static_cast<std::uint32_t>(rest % F.q())};
        rest /= F.q();
      }
      c[static_cast<std::size_t>(k)] = F.one();
      if ((f % Poly(f.ctx(), std::move(c))).is_zero()) return false;
    }
  }
  return true;
}

std::string to_string(const Poly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (i > 0) out += ',';
    out += f.field().format(f.coeffs()[i]);
  }
  return out;
}

Poly parse_poly(const FieldPtr& ctx, std::string_view text) {
  std::vector<Elem> coeffs;
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size()) {
      if (text[i] == '[') ++depth;
      if (text[i] == ']') --depth;
      if (text[i] != ',' || depth != 0) continue;
    }
    coeffs.push_back(ctx->parse(text.substr(start, i - start)));
    start = i + 1;
  }
  return Poly(ctx, std::move(coeffs));
}

}  // namespace negacycl
