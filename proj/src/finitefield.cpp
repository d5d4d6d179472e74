#include "negacycl/finitefield.hpp"

#include <charconv>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "negacycl/numtheory.hpp"
#include "negacycl/polyring.hpp"

namespace negacycl {

namespace {

using Digits = std::vector<std::uint32_t>;

Digits to_digits(std::uint64_t code, std::uint64_t p, unsigned e) {
  Digits d(e);
  for (unsigned i = 0; i < e; ++i) {
    d[i] = static_cast<std::uint32_t>(code % p);
    code /= p;
  }
  return d;
}

std::uint32_t from_digits(const Digits& d, std::uint64_t p) {
  std::uint64_t code = 0;
  for (std::size_t i = d.size(); i-- > 0;) code = code * p + d[i];
  return static_cast<std::uint32_t>(code);
}

// Schoolbook product of two residues of F_p[z]/(modulus); only used while
// building the exp/log tables.
Digits mul_digits(const Digits& a, const Digits& b, const std::vector<std::uint32_t>& modulus,
                  std::uint64_t p) {
  const std::size_t e = a.size();
  std::vector<std::uint64_t> prod(2 * e - 1, 0);
  for (std::size_t i = 0; i < e; ++i) {
    for (std::size_t j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{a[i]} * b[j]) % p;
  }
  for (std::size_t k = prod.size(); k-- > e;) {
    const std::uint64_t c = prod[k];
    if (c == 0) continue;
    for (std::size_t i = 0; i < e; ++i) {
      prod[k - e + i] = (prod[k - e + i] + (p - c) * modulus[i]) % p;
    }
    prod[k] = 0;
  }
  Digits out(e);
  for (std::size_t i = 0; i < e; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
  return out;
}

Digits pow_digits(Digits a, std::uint64_t k, const std::vector<std::uint32_t>& modulus,
                  std::uint64_t p) {
  Digits r(a.size(), 0);
  r[0] = 1;
  while (k > 0) {
    if (k & 1U) r = mul_digits(r, a, modulus, p);
    a = mul_digits(a, a, modulus, p);
    k >>= 1U;
  }
  return r;
}

std::vector<std::uint32_t> lex_least_irreducible(std::uint64_t p, unsigned e) {
  const FieldPtr prime = FieldCtx::make(p, 1);
  const std::uint64_t count = nt::ipow(p, e);
  for (std::uint64_t t = 0; t < count; ++t) {
    std::vector<Elem> c(e + 1);
    std::uint64_t rest = t;
    for (unsigned i = e; i-- > 0;) {
      c[i] = Elem{static_cast<std::uint32_t>(rest % p)};
      rest /= p;
    }
    if (c[0].is_zero()) continue;
    c[e] = prime->one();
    const Poly f(prime, c);
    if (is_irreducible(f)) {
      std::vector<std::uint32_t> out(e + 1);
      for (unsigned i = 0; i <= e; ++i) out[i] = c[i].code;
      return out;
    }
  }
  throw std::logic_error("make_field: no irreducible polynomial found");
}

}  // namespace

FieldPtr FieldCtx::make(std::uint64_t p, unsigned e) {
  if (!nt::is_prime(p)) throw std::invalid_argument("make_field: p must be prime");
  if (e == 0) throw std::invalid_argument("make_field: degree must be >= 1");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) {
    q *= p;
    if (q > kMaxOrder) throw std::invalid_argument("make_field: field order exceeds 2^20");
  }

  static std::mutex mutex;
  static std::map<std::pair<std::uint64_t, unsigned>, FieldPtr> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find({p, e}); it != cache.end()) return it->second;
  }
  std::vector<std::uint32_t> modulus = e == 1 ? std::vector<std::uint32_t>{0, 1}
                                              : lex_least_irreducible(p, e);
  auto ctx = std::make_shared<const FieldCtx>(p, e, std::move(modulus));
  std::lock_guard lock(mutex);
  return cache.emplace(std::make_pair(p, e), std::move(ctx)).first->second;
}

FieldCtx::FieldCtx(std::uint64_t p, unsigned e, std::vector<std::uint32_t> modulus)
    : p_(p),
      e_(e),
      q_(nt::ipow(p, e)),
      p32_(static_cast<std::uint32_t>(p)),
      q32_(static_cast<std::uint32_t>(q_)),
      modulus_(std::move(modulus)) {
  const std::uint64_t units = q_ - 1;
  neg_.resize(q_);
  for (std::uint64_t c = 0; c < q_; ++c) {
    Digits d = to_digits(c, p_, e_);
    for (auto& x : d) x = x == 0 ? 0 : static_cast<std::uint32_t>(p_ - x);
    neg_[c] = from_digits(d, p_);
  }
  if (e_ > 1 && q_ <= 1024) {
    add_.resize(q_ * q_);
    for (std::uint64_t a = 0; a < q_; ++a) {
      for (std::uint64_t b = 0; b < q_; ++b) add_[a * q_ + b] = add_digits(Elem{std::uint32_t(a)}, Elem{std::uint32_t(b)}).code;
    }
  }

  // Primitive element: first code whose order is q - 1.
  const auto unit_primes = units > 1 ? nt::factorize(units).primes() : std::vector<std::uint64_t>{};
  std::uint32_t generator = 0;
  for (std::uint64_t c = 1; c < q_ && generator == 0; ++c) {
    const Digits g = to_digits(c, p_, e_);
    bool primitive = true;
    for (const auto l : unit_primes) {
      const Digits r = e_ == 1 ? Digits{static_cast<std::uint32_t>(nt::pow_mod(c, units / l, p_))}
                               : pow_digits(g, units / l, modulus_, p_);
      if (from_digits(r, p_) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) generator = static_cast<std::uint32_t>(c);
  }
  if (generator == 0) throw std::logic_error("FieldCtx: modulus is not irreducible");

  exp_.resize(2 * units);
  log_.assign(q_, 0);
  Digits cur(e_, 0);
  cur[0] = 1;
  const Digits g = to_digits(generator, p_, e_);
  for (std::uint64_t k = 0; k < units; ++k) {
    const std::uint32_t code = from_digits(cur, p_);
    if (k > 0 && code == 1) throw std::logic_error("FieldCtx: generator order too small");
    exp_[k] = exp_[k + units] = code;
    log_[code] = static_cast<std::uint32_t>(k);
    cur = e_ == 1 ? Digits{static_cast<std::uint32_t>(std::uint64_t{cur[0]} * generator % p_)}
                  : mul_digits(cur, g, modulus_, p_);
  }
}

Elem FieldCtx::add_digits(Elem a, Elem b) const {
  std::uint64_t x = a.code, y = b.code, out = 0, place = 1;
  for (unsigned i = 0; i < e_; ++i) {
    out += ((x % p_ + y % p_) % p_) * place;
    x /= p_;
    y /= p_;
    place *= p_;
  }
  return Elem{static_cast<std::uint32_t>(out)};
}

Elem FieldCtx::from_int(std::int64_t v) const {
  const auto p = static_cast<std::int64_t>(p_);
  return Elem{static_cast<std::uint32_t>(((v % p) + p) % p)};
}

Elem FieldCtx::from_coeffs(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() != e_) throw std::invalid_argument("from_coeffs: expected e coordinates");
  for (const auto c : coeffs) {
    if (c >= p_) throw std::invalid_argument("from_coeffs: coordinate out of range");
  }
  return Elem{from_digits(Digits(coeffs.begin(), coeffs.end()), p_)};
}

std::vector<std::uint32_t> FieldCtx::coeffs(Elem a) const { return to_digits(a.code, p_, e_); }

Elem FieldCtx::inv(Elem a) const {
  if (a.is_zero()) throw std::domain_error("inv: zero has no inverse");
  const std::uint64_t units = q_ - 1;
  return Elem{exp_[(units - log_[a.code]) % units]};
}

Elem FieldCtx::pow(Elem a, std::uint64_t k) const {
  if (k == 0) return one();
  if (a.is_zero()) return zero();
  const std::uint64_t units = q_ - 1;
  const auto idx = static_cast<std::uint64_t>(static_cast<unsigned __int128>(log_[a.code]) * k % units);
  return Elem{exp_[idx]};
}

Elem FieldCtx::frobenius(Elem a, std::uint64_t base_q) const {
  std::uint64_t b = base_q;
  if (b < p_) throw std::invalid_argument("frobenius: base_q must be a power of p");
  while (b % p_ == 0) b /= p_;
  if (b != 1) throw std::invalid_argument("frobenius: base_q must be a power of p");
  return pow(a, base_q);
}

std::uint64_t FieldCtx::order_of(Elem a) const {
  if (a.is_zero()) throw std::domain_error("order_of: zero has no multiplicative order");
  const std::uint64_t units = q_ - 1;
  return units / nt::gcd(log_[a.code], units);
}

Elem FieldCtx::lex_element(std::uint64_t index) const {
  if (index >= q_) throw std::out_of_range("lex_element: index out of range");
  Digits d(e_);
  for (unsigned i = e_; i-- > 0;) {
    d[i] = static_cast<std::uint32_t>(index % p_);
    index /= p_;
  }
  return Elem{from_digits(d, p_)};
}

std::string FieldCtx::format(Elem a) const {
  if (e_ == 1) return std::to_string(a.code);
  std::string out = "[";
  const Digits d = coeffs(a);
  for (unsigned i = 0; i < e_; ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(d[i]);
  }
  out += ']';
  return out;
}

Elem FieldCtx::parse(std::string_view text) const {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("parse element: empty text");
  if (text.front() != '[') {
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
      throw std::invalid_argument("parse element: bad integer '" + std::string(text) + "'");
    }
    return from_int(v);
  }
  if (text.back() != ']') throw std::invalid_argument("parse element: missing ']'");
  std::istringstream in(std::string(text.substr(1, text.size() - 2)));
  Digits d;
  std::int64_t v = 0;
  while (in >> v) {
    if (v < 0 || static_cast<std::uint64_t>(v) >= p_) {
      throw std::invalid_argument("parse element: coordinate out of range");
    }
    d.push_back(static_cast<std::uint32_t>(v));
  }
  if (!in.eof()) throw std::invalid_argument("parse element: bad coordinate");
  return from_coeffs(d);
}

bool has_exact_order(const FieldCtx& ctx, Elem value, std::uint64_t order) {
  if (order == 0 || value.is_zero()) return false;
  if (ctx.pow(value, order) != ctx.one()) return false;
  if (order == 1) return true;
  for (const auto l : nt::factorize(order).primes()) {
    if (ctx.pow(value, order / l) == ctx.one()) return false;
  }
  return true;
}

RootOfUnity primitive_root_of_unity(const FieldPtr& ctx, std::uint64_t order) {
  if (order == 0 || (ctx->q() - 1) % order != 0) {
    throw std::invalid_argument("primitive_root_of_unity: N must divide q - 1");
  }
  for (std::uint64_t i = 0; i < ctx->q(); ++i) {
    const Elem a = ctx->lex_element(i);
    if (!a.is_zero() && ctx->order_of(a) == order) {
      if (!has_exact_order(*ctx, a, order)) throw std::logic_error("primitive_root_of_unity: order mismatch");
      return RootOfUnity{ctx, a, order};
    }
  }
  throw std::logic_error("primitive_root_of_unity: no element of the requested order");
}

}  // namespace negacycl
