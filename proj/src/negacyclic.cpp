#include "negacycl/negacyclic.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "negacycl/counting.hpp"
#include "negacycl/numtheory.hpp"

namespace negacycl {

namespace {

using Matrix = std::vector<std::vector<Elem>>;

// In-place reduced row echelon form over ctx; returns the pivot column of
// each nonzero row, in row order.
std::vector<std::size_t> rref(const FieldCtx& F, Matrix& a) {
  std::vector<std::size_t> pivots;
  if (a.empty()) return pivots;
  const std::size_t cols = a.front().size();
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < a.size(); ++c) {
    std::size_t sel = row;
    while (sel < a.size() && a[sel][c].is_zero()) ++sel;
    if (sel == a.size()) continue;
    std::swap(a[row], a[sel]);
    const Elem scale = F.inv(a[row][c]);
    for (auto& x : a[row]) x = F.mul(x, scale);
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || a[r][c].is_zero()) continue;
      const Elem factor = a[r][c];
      for (std::size_t k = c; k < cols; ++k) a[r][k] = F.sub(a[r][k], F.mul(factor, a[row][k]));
    }
    pivots.push_back(c);
    ++row;
  }
  a.resize(row);
  return pivots;
}

std::size_t rank(const FieldCtx& F, Matrix a) { return rref(F, a).size(); }

// Basis of {v : a v = 0}.
Matrix null_space(const FieldCtx& F, Matrix a, std::size_t cols) {
  const auto pivots = rref(F, a);
  std::vector<bool> is_pivot(cols, false);
  for (const auto c : pivots) is_pivot[c] = true;
  Matrix basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Elem> v(cols, F.zero());
    v[f] = F.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = F.neg(a[r][f]);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::uint64_t conjugation_base(const FieldCtx& F) {
  if (F.e() % 2 != 0) throw std::invalid_argument("Hermitian mode needs a field of even extension degree");
  return nt::ipow(F.p(), F.e() / 2);
}

void require_dense_length(std::uint64_t n) {
  if (n > kDenseMaxLength) throw std::invalid_argument("dense code computations are capped at length 64");
}

}  // namespace

NegacyclicCode make_code(const FieldPtr& ctx, std::uint64_t n, const Poly& gen) {
  if (n == 0) throw std::invalid_argument("make_code: n must be positive");
  if (gen.ctx() != ctx) throw std::invalid_argument("make_code: generator over a different field");
  if (!gen.is_monic()) throw std::invalid_argument("make_code: generator must be monic");
  const Poly xn1 = Poly::binomial(ctx, n, -1);
  if (!(xn1 % gen).is_zero()) throw std::invalid_argument("make_code: generator does not divide x^n + 1");
  return NegacyclicCode{ctx, n, gen, n - static_cast<std::uint64_t>(gen.degree())};
}

Poly check_polynomial(const NegacyclicCode& code) {
  return exact_div(Poly::binomial(code.ctx, code.n, -1), code.gen);
}

Poly dual_generator(const NegacyclicCode& code, Mode mode) {
  const Poly h = check_polynomial(code);
  return mode == Mode::Euclidean ? reciprocal_star(h) : dagger(h, conjugation_base(*code.ctx));
}

NegacyclicCode dual_code(const NegacyclicCode& code, Mode mode) {
  return make_code(code.ctx, code.n, dual_generator(code, mode));
}

bool is_lcd(const NegacyclicCode& code, Mode mode) { return gcd(code.gen, dual_generator(code, mode)).is_one(); }

std::vector<std::vector<Elem>> generator_matrix(const NegacyclicCode& code) {
  const FieldCtx& F = *code.ctx;
  Matrix rows;
  if (code.dim == 0) return rows;
  std::vector<Elem> row(code.n, F.zero());
  for (int i = 0; i <= code.gen.degree(); ++i) row[static_cast<std::size_t>(i)] = code.gen.coeff(static_cast<std::size_t>(i));
  for (std::uint64_t i = 0; i < code.dim; ++i) {
    rows.push_back(row);
    // Multiply by x: (c_0, ..., c_{n-1}) -> (-c_{n-1}, c_0, ..., c_{n-2}).
    const Elem wrap = F.neg(row.back());
    std::rotate(row.rbegin(), row.rbegin() + 1, row.rend());
    row.front() = wrap;
  }
  return rows;
}

NegacyclicCode brute_dual(const NegacyclicCode& code, Mode mode) {
  require_dense_length(code.n);
  const FieldCtx& F = *code.ctx;
  Matrix g = generator_matrix(code);
  if (mode == Mode::Hermitian) {
    // sum u_i v_i^q = 0 iff sum u_i^q v_i = 0.
    const std::uint64_t base_q = conjugation_base(F);
    for (auto& r : g) {
      for (auto& x : r) x = F.frobenius(x, base_q);
    }
  }
  Matrix basis = g.empty() ? Matrix{} : null_space(F, g, code.n);
  if (g.empty()) {
    for (std::uint64_t i = 0; i < code.n; ++i) {
      basis.emplace_back(code.n, F.zero());
      basis.back()[i] = F.one();
    }
  }
  if (basis.empty()) return make_code(code.ctx, code.n, Poly::binomial(code.ctx, code.n, -1));

  // Echelon form keyed on the highest nonzero position; the row whose top
  // position is lowest is the least-degree codeword.
  for (auto& r : basis) std::reverse(r.begin(), r.end());
  rref(F, basis);
  std::vector<Elem> least = basis.back();
  std::reverse(least.begin(), least.end());
  Poly gen = Poly(code.ctx, std::move(least)).monic();
  NegacyclicCode dual = make_code(code.ctx, code.n, gen);
  if (dual.dim != basis.size()) throw std::logic_error("brute_dual: null space is not a negacyclic code");
  return dual;
}

std::uint64_t intersection_dim(const NegacyclicCode& c1, const NegacyclicCode& c2) {
  if (c1.ctx != c2.ctx || c1.n != c2.n) throw std::invalid_argument("intersection_dim: codes differ in field or length");
  return c1.n - static_cast<std::uint64_t>(lcm(c1.gen, c2.gen).degree());
}

std::uint64_t intersection_dim_dense(const NegacyclicCode& c1, const NegacyclicCode& c2) {
  if (c1.ctx != c2.ctx || c1.n != c2.n) throw std::invalid_argument("intersection_dim: codes differ in field or length");
  require_dense_length(c1.n);
  Matrix stacked = generator_matrix(c1);
  const Matrix g2 = generator_matrix(c2);
  stacked.insert(stacked.end(), g2.begin(), g2.end());
  return c1.dim + c2.dim - rank(*c1.ctx, std::move(stacked));
}

std::string LcdCensus::count() const { return pow2_decimal(log2_count()); }

std::string pow2_decimal(std::uint64_t k) {
  std::vector<int> digits{1};  // little-endian base 10
  for (std::uint64_t i = 0; i < k; ++i) {
    int carry = 0;
    for (auto& d : digits) {
      const int v = 2 * d + carry;
      d = v % 10;
      carry = v / 10;
    }
    if (carry) digits.push_back(carry);
  }
  std::string out;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) out.push_back(static_cast<char>('0' + *it));
  return out;
}

LcdCensus enumerate_lcd(const FieldPtr& base, std::uint64_t n, Mode mode) {
  const FactorizationReport report = factor_xn(base, n, -1, mode);
  LcdCensus census;
  census.q = report.q;
  census.n = n;
  census.mode = mode;
  census.length = report.length;
  census.r = report.r;
  census.s = report.s;
  census.t = report.t;

  std::vector<Poly> units;
  for (std::size_t i = 0; i < report.records.size(); ++i) {
    const auto& rec = report.records[i];
    if (rec.self_paired()) {
      units.push_back(pow(rec.poly, rec.multiplicity));
    } else if (*rec.partner > i) {
      units.push_back(pow(rec.poly * report.records[*rec.partner].poly, rec.multiplicity));
    }
  }
  if (units.size() >= 64 || (std::uint64_t{1} << units.size()) > kEnumerationCap) {
    throw std::invalid_argument("enumerate_lcd: more than 2^20 LCD codes");
  }
  const std::size_t total = std::size_t{1} << units.size();
  std::vector<Poly> gens;
  gens.reserve(total);
  gens.push_back(Poly::constant(report.field, report.field->one()));
  for (std::size_t mask = 1; mask < total; ++mask) {
    const std::size_t top = std::bit_width(mask) - 1;
    gens.push_back(gens[mask ^ (std::size_t{1} << top)] * units[top]);
  }
  census.generators = std::move(gens);
  return census;
}

LcdCensus count_lcd(std::uint64_t q, std::uint64_t n, Mode mode) {
  const auto pp = nt::as_prime_power(q);
  if (!pp || pp->p == 2) throw std::invalid_argument("count_lcd: q must be an odd prime power");
  LcdCensus census;
  census.q = q;
  census.n = n;
  census.mode = mode;
  census.length = decompose_length(n, pp->p);
  const unsigned m = census.length.m;
  const std::uint64_t n_prime = census.length.n_prime;
  const std::uint64_t mult = mode == Mode::Euclidean ? q : q * q;
  const std::uint64_t two_m1 = std::uint64_t{1} << (m + 1);
  for (const auto d : nt::divisors(n_prime)) {
    const std::uint64_t k = two_m1 * d;
    census.r += nt::euler_phi(k) / nt::mult_ord(mult % k, k);
  }
  census.s = mode == Mode::Euclidean ? count_srim_negacyclic(q, m, n_prime).total
                                     : count_scrim_negacyclic(q, m, n_prime).total;
  if (census.s > census.r || (census.r - census.s) % 2 != 0) {
    throw std::logic_error("count_lcd: r - s is not a nonnegative even number");
  }
  census.t = (census.r - census.s) / 2;
  return census;
}

}  // namespace negacycl
