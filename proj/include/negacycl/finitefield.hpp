// Table-driven arithmetic in F_{p^e} = F_p[z]/(modulus(z)).
//
// An element is stored as the integer code sum_i a_i p^i of its coordinates
// (a_0, ..., a_{e-1}) in the power basis of the modulus root. Multiplication
// goes through exp/log tables built from a primitive element, so field orders
// are capped at 2^20.
#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace negacycl {

struct Elem {
  std::uint32_t code = 0;

  friend constexpr auto operator<=>(Elem, Elem) = default;
  constexpr bool is_zero() const { return code == 0; }
};

class FieldCtx;
using FieldPtr = std::shared_ptr<const FieldCtx>;

class FieldCtx {
 public:
  static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 20;

  /// The field of order p^e whose modulus is the first monic irreducible of
  /// degree e in lexicographic order of (c_0, ..., c_{e-1}). Contexts are
  /// cached, so repeated calls return the same object.
  static FieldPtr make(std::uint64_t p, unsigned e);

  std::uint64_t p() const { return p_; }
  unsigned e() const { return e_; }
  std::uint64_t q() const { return q_; }
  bool is_prime_field() const { return e_ == 1; }
  /// Ascending coefficients, length e + 1, leading 1. For e = 1 this is x.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  Elem zero() const { return Elem{0}; }
  Elem one() const { return Elem{1}; }
  Elem from_int(std::int64_t v) const;
  Elem from_coeffs(std::span<const std::uint32_t> coeffs) const;
  std::vector<std::uint32_t> coeffs(Elem a) const;

  Elem add(Elem a, Elem b) const {
    if (e_ == 1) {
      const std::uint32_t s = a.code + b.code;
      return Elem{s >= p32_ ? s - p32_ : s};
    }
    if (!add_.empty()) return Elem{add_[a.code * q32_ + b.code]};
    return add_digits(a, b);
  }
  Elem neg(Elem a) const { return Elem{neg_[a.code]}; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const {
    if (a.code == 0 || b.code == 0) return Elem{0};
    return Elem{exp_[log_[a.code] + log_[b.code]]};
  }
  /// Throws std::domain_error on zero.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t k) const;

  /// a^base_q, the conjugate of a over the subfield of order base_q.
  /// base_q must be a power of p.
  Elem frobenius(Elem a, std::uint64_t base_q) const;
  /// True iff a lies in the subfield of order sub_q (a^sub_q = a).
  bool in_subfield(Elem a, std::uint64_t sub_q) const { return frobenius(a, sub_q) == a; }

  /// Multiplicative order of a nonzero element.
  std::uint64_t order_of(Elem a) const;
  /// The element at position index in lexicographic order of (a_0, ..., a_{e-1}).
  Elem lex_element(std::uint64_t index) const;
  Elem primitive_element() const { return Elem{exp_[1]}; }
  bool contains(Elem a) const { return a.code < q_; }

  /// Bare integer for prime fields, "[a0 a1 ... a_{e-1}]" otherwise.
  std::string format(Elem a) const;
  Elem parse(std::string_view text) const;

  FieldCtx(std::uint64_t p, unsigned e, std::vector<std::uint32_t> modulus);

 private:
  Elem add_digits(Elem a, Elem b) const;

  std::uint64_t p_;
  unsigned e_;
  std::uint64_t q_;
  std::uint32_t p32_;
  std::uint32_t q32_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> exp_;  // length 2(q - 1)
  std::vector<std::uint32_t> log_;  // log_[0] unused
  std::vector<std::uint32_t> neg_;
  std::vector<std::uint32_t> add_;  // q*q table for small extension fields
};

/// A field element of multiplicative order exactly `order`.
struct RootOfUnity {
  FieldPtr ctx;
  Elem value;
  std::uint64_t order = 1;
};

/// First element in lexicographic order with multiplicative order exactly N.
/// Requires N | q - 1.
RootOfUnity primitive_root_of_unity(const FieldPtr& ctx, std::uint64_t order);

/// Checks value^N = 1 and value^{N/l} != 1 for every prime l | N.
bool has_exact_order(const FieldCtx& ctx, Elem value, std::uint64_t order);

}  // namespace negacycl
