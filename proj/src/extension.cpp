#include "negacycl/extension.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>
#include <tuple>

#include "negacycl/numtheory.hpp"

namespace negacycl {

ExtensionField::ExtensionField(Poly modulus) : modulus_(std::move(modulus)) {
  if (!modulus_.is_monic() || modulus_.degree() < 1) {
    throw std::invalid_argument("ExtensionField: modulus must be monic of degree >= 1");
  }
}

Poly ExtensionField::frobenius(const Poly& a) const {
  std::call_once(frob_once_, [this] { frob_ = std::make_unique<const FrobeniusMap>(modulus_); });
  return frob_->apply(a);
}

Poly cyclotomic_poly(const FieldPtr& ctx, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("cyclotomic_poly: n must be positive");
  // Phi_n = prod_{d | n} (x^d - 1)^{mu(n/d)}
  Poly num = Poly::constant(ctx, ctx->one());
  Poly den = num;
  for (const auto d : nt::divisors(n)) {
    const auto f = nt::factorize(n / d);
    const bool squarefree = std::all_of(f.factors.begin(), f.factors.end(),
                                        [](const auto& pe) { return pe.second == 1; });
    if (!squarefree) continue;
    const Poly term = Poly::binomial(ctx, d, 1);
    if (f.factors.size() % 2 == 0) {
      num = num * term;
    } else {
      den = den * term;
    }
  }
  return exact_div(num, den);
}

namespace {

void split_equal_degree(const Poly& f, unsigned d, std::mt19937_64& rng, std::vector<Poly>& out) {
  const auto deg = static_cast<unsigned>(f.degree());
  if (deg == d) {
    out.push_back(f);
    return;
  }
  const FieldCtx& F = f.field();
  const FrobeniusMap frob(f);
  const Poly one = Poly::constant(f.ctx(), F.one());
  for (;;) {
    std::vector<Elem> c(deg);
    for (auto& x : c) x = Elem{static_cast<std::uint32_t>(rng() % F.q())};
    const Poly a(f.ctx(), std::move(c));
    if (a.degree() < 1) continue;
    // a^{(Q^d - 1)/2} = (a a^Q ... a^{Q^{d-1}})^{(Q - 1)/2}
    Poly norm = a;
    Poly conj = a;
    for (unsigned k = 1; k < d; ++k) {
      conj = frob.apply(conj);
      norm = mul_mod(norm, conj, f);
    }
    const Poly b = pow_mod(norm, (F.q() - 1) / 2, f);
    const Poly g = gcd(b - one, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      split_equal_degree(g, d, rng, out);
      split_equal_degree(exact_div(f, g), d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<Poly> equal_degree_factorization(const Poly& f, unsigned d) {
  if (!f.is_monic() || d == 0 || f.degree() % static_cast<int>(d) != 0) {
    throw std::invalid_argument("equal_degree_factorization: bad degree or non-monic input");
  }
  if (f.field().p() == 2) throw std::invalid_argument("equal_degree_factorization: odd characteristic only");
  std::mt19937_64 rng(0x6e656761u + static_cast<std::uint64_t>(f.degree()) * 1000003u + d);
  std::vector<Poly> out;
  split_equal_degree(f, d, rng, out);
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

CyclotomicRoot cyclotomic_root(const FieldPtr& base, std::uint64_t order) {
  if (order == 0 || nt::gcd(order, base->q()) != 1) {
    throw std::invalid_argument("cyclotomic_root: N must be positive and coprime to q");
  }
  using Key = std::tuple<std::uint64_t, unsigned, std::uint64_t>;
  static std::mutex mutex;
  static std::map<Key, ExtensionPtr> cache;
  const Key key{base->p(), base->e(), order};
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return CyclotomicRoot{it->second, order};
  }

  const auto e = static_cast<unsigned>(nt::mult_ord(base->q() % order, order));
  const Poly phi = cyclotomic_poly(base, order);
  Poly modulus = phi;
  if (phi.degree() != static_cast<int>(e)) modulus = equal_degree_factorization(phi, e).front();
  auto field = std::make_shared<const ExtensionField>(std::move(modulus));

  const Poly alpha = field->generator();
  if (field->pow(alpha, order) != field->one()) throw std::logic_error("cyclotomic_root: alpha^N != 1");
  if (order > 1) {
    for (const auto l : nt::factorize(order).primes()) {
      if (field->pow(alpha, order / l) == field->one()) {
        throw std::logic_error("cyclotomic_root: alpha has order smaller than N");
      }
    }
  }
  std::lock_guard lock(mutex);
  return CyclotomicRoot{cache.emplace(key, std::move(field)).first->second, order};
}

Poly minimal_polynomial(const ExtensionField& field, const Poly& beta) {
  const FieldCtx& F = *field.base();
  const unsigned e = field.degree();
  struct Row {
    std::vector<Elem> vec;   // coordinates, pivot entry normalized to 1
    std::vector<Elem> comb;  // vec = sum comb[i] beta^i
    unsigned pivot;
  };
  std::vector<Row> rows;
  Poly power = field.one();
  const Poly b = field.reduce(beta);
  for (unsigned k = 0; k <= e; ++k) {
    std::vector<Elem> vec(e);
    for (unsigned i = 0; i < e; ++i) vec[i] = power.coeff(i);
    std::vector<Elem> comb(k + 1);
    comb[k] = F.one();
    for (const Row& row : rows) {
      const Elem c = vec[row.pivot];
      if (c.is_zero()) continue;
      const Elem nc = F.neg(c);
      for (unsigned i = 0; i < e; ++i) {
        if (!row.vec[i].is_zero()) vec[i] = F.add(vec[i], F.mul(nc, row.vec[i]));
      }
      for (std::size_t i = 0; i < row.comb.size(); ++i) {
        if (!row.comb[i].is_zero()) comb[i] = F.add(comb[i], F.mul(nc, row.comb[i]));
      }
    }
    const auto nz = std::find_if(vec.begin(), vec.end(), [](Elem x) { return !x.is_zero(); });
    if (nz == vec.end()) return Poly(field.base(), std::move(comb));
    const auto pivot = static_cast<unsigned>(nz - vec.begin());
    const Elem inv = F.inv(vec[pivot]);
    for (auto& x : vec) x = F.mul(x, inv);
    for (auto& x : comb) x = F.mul(x, inv);
    // Rows stay sorted by pivot so each reduction leaves earlier pivots zero.
    const auto pos = std::find_if(rows.begin(), rows.end(), [&](const Row& r) { return r.pivot > pivot; });
    rows.insert(pos, Row{std::move(vec), std::move(comb), pivot});
    power = field.mul(power, b);
  }
  throw std::logic_error("minimal_polynomial: no dependency within the extension degree");
}

}  // namespace negacycl
