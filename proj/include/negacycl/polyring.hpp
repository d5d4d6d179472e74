// Dense univariate polynomials over a FieldCtx.
#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "negacycl/finitefield.hpp"

namespace negacycl {

class Poly {
 public:
  static constexpr int kMaxDegree = 4096;

  Poly() = default;
  explicit Poly(FieldPtr ctx) : ctx_(std::move(ctx)) {}
  Poly(FieldPtr ctx, std::vector<Elem> coeffs);

  static Poly constant(FieldPtr ctx, Elem c);
  static Poly monomial(FieldPtr ctx, Elem c, std::size_t k);
  static Poly x(FieldPtr ctx) { return monomial(ctx, ctx->one(), 1); }
  /// Integer coefficients reduced into the prime subfield, ascending.
  static Poly from_ints(FieldPtr ctx, std::initializer_list<std::int64_t> coeffs);
  /// x^n - lambda for lambda in {1, -1} given as an integer.
  static Poly binomial(FieldPtr ctx, std::size_t n, std::int64_t lambda);

  const FieldPtr& ctx() const { return ctx_; }
  const FieldCtx& field() const { return *ctx_; }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == ctx_->one(); }
  bool is_monic() const { return !c_.empty() && c_.back() == ctx_->one(); }
  Elem lead() const { return c_.empty() ? Elem{} : c_.back(); }
  Elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Elem{}; }
  std::span<const Elem> coeffs() const { return c_; }

  Poly monic() const;
  Poly scaled(Elem c) const;
  Elem eval(Elem x) const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b);

 private:
  void normalize();

  FieldPtr ctx_;
  std::vector<Elem> c_;
};

/// Canonical order: degree first, then coefficient codes from c_0 upward.
bool canonical_less(const Poly& a, const Poly& b);

struct DivRem {
  Poly quot;
  Poly rem;
};

/// Throws std::domain_error when g is zero.
DivRem divrem(const Poly& f, const Poly& g);
Poly operator%(const Poly& f, const Poly& g);
/// Quotient of an exact division; throws std::domain_error on a remainder.
Poly exact_div(const Poly& f, const Poly& g);
/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);
/// Monic lcm of nonzero inputs.
Poly lcm(const Poly& a, const Poly& b);
Poly pow(const Poly& f, std::uint64_t k);
Poly mul_mod(const Poly& a, const Poly& b, const Poly& m);
Poly pow_mod(const Poly& f, std::uint64_t k, const Poly& m);

/// f*(x) = x^deg f f(0)^{-1} f(1/x). Requires f(0) != 0.
Poly reciprocal_star(const Poly& f);
/// Coefficient-wise a -> a^base_q.
Poly conjugate(const Poly& f, std::uint64_t base_q);
/// conjugate(reciprocal_star(f), base_q).
Poly dagger(const Poly& f, std::uint64_t base_q);
bool is_self_reciprocal(const Poly& f);
bool is_self_conj_reciprocal(const Poly& f, std::uint64_t base_q);

/// The F_q-linear map a(x) -> a(x)^q mod f, with q the order of f's field.
class FrobeniusMap {
 public:
  explicit FrobeniusMap(const Poly& modulus);
  Poly apply(const Poly& a) const;
  const Poly& modulus() const { return modulus_; }

 private:
  Poly modulus_;
  std::vector<std::vector<Elem>> columns_;  // x^{jq} mod f
};

/// q-power criterion: x^{q^d} = x mod f and gcd(x^{q^{d/l}} - x, f) = 1 for
/// every prime l | d. Requires f monic of degree >= 1.
bool is_irreducible(const Poly& f);
/// Trial division by every monic polynomial of degree <= deg f / 2.
bool is_irreducible_trial(const Poly& f);

/// Comma-separated ascending coefficients in the element text format.
std::string to_string(const Poly& f);
Poly parse_poly(const FieldPtr& ctx, std::string_view text);

}  // namespace negacycl
