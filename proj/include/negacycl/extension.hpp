// Splitting fields for x^N - 1 over a base field F_Q.
//
// The extension F_{Q^e}, e = ord_N(Q), is presented as F_Q[y]/(F(y)) where
// F is the canonically least irreducible factor of the cyclotomic polynomial
// Phi_N over F_Q. The class of y is then a primitive N-th root of unity.
#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <vector>

#include "negacycl/polyring.hpp"

namespace negacycl {

class ExtensionField {
 public:
  /// `modulus` must be monic irreducible over its field.
  explicit ExtensionField(Poly modulus);

  const FieldPtr& base() const { return modulus_.ctx(); }
  const Poly& modulus() const { return modulus_; }
  unsigned degree() const { return static_cast<unsigned>(modulus_.degree()); }

  Poly one() const { return Poly::constant(base(), base()->one()) % modulus_; }
  Poly generator() const { return Poly::x(base()) % modulus_; }
  Poly reduce(const Poly& a) const { return a % modulus_; }
  Poly mul(const Poly& a, const Poly& b) const { return mul_mod(a, b, modulus_); }
  Poly pow(const Poly& a, std::uint64_t k) const { return pow_mod(a, k, modulus_); }
  /// a^Q, the Frobenius over the base field.
  Poly frobenius(const Poly& a) const;
  bool in_base_field(const Poly& a) const { return frobenius(a) == a; }

 private:
  Poly modulus_;
  mutable std::once_flag frob_once_;
  mutable std::unique_ptr<const FrobeniusMap> frob_;  // built on first use
};

using ExtensionPtr = std::shared_ptr<const ExtensionField>;

/// Primitive N-th root of unity alpha = y in an extension of the base field.
struct CyclotomicRoot {
  ExtensionPtr field;
  std::uint64_t order = 1;

  Poly value() const { return field->generator(); }
  /// alpha^k.
  Poly power(std::uint64_t k) const { return field->pow(value(), k % order); }
};

/// Phi_N over the given field.
Poly cyclotomic_poly(const FieldPtr& ctx, std::uint64_t n);

/// Splits a squarefree f whose irreducible factors all have degree d.
/// Odd characteristic only. Output is sorted by canonical_less.
std::vector<Poly> equal_degree_factorization(const Poly& f, unsigned d);

/// Deterministic primitive N-th root of unity over `base`; results are cached.
/// Requires gcd(N, |base|) = 1.
CyclotomicRoot cyclotomic_root(const FieldPtr& base, std::uint64_t order);

/// Minimal polynomial of beta over the base field, from the first linear
/// dependency among 1, beta, beta^2, ...
Poly minimal_polynomial(const ExtensionField& field, const Poly& beta);

}  // namespace negacycl
