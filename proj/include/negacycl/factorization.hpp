// Explicit factorization of x^n - 1 and x^n + 1 into monic irreducibles built
// from cyclotomic cosets, with each factor tagged as self-(conjugate-)reciprocal
// or paired with its (conjugate-)reciprocal partner.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "negacycl/cosets.hpp"
#include "negacycl/extension.hpp"
#include "negacycl/polyring.hpp"

namespace negacycl {

enum class Mode { Euclidean, Hermitian };

std::string_view to_string(Mode mode);
/// Accepts "euclidean" / "hermitian".
Mode parse_mode(std::string_view text);

/// n = p^mu 2^m n' with n' odd and coprime to p.
struct LengthDecomposition {
  unsigned mu = 0;
  unsigned m = 0;
  std::uint64_t n_prime = 1;

  friend bool operator==(const LengthDecomposition&, const LengthDecomposition&) = default;
};

LengthDecomposition decompose_length(std::uint64_t n, std::uint64_t p);

struct FactorRecord {
  Poly poly;
  std::uint64_t multiplicity = 1;
  std::uint64_t coset_rep = 0;
  std::uint64_t additive_order = 1;      // o^+(coset_rep) modulo the coset modulus
  std::optional<std::size_t> partner;    // nullopt: equals its own star / dagger

  bool self_paired() const { return !partner.has_value(); }
};

struct FactorizationReport {
  std::uint64_t p = 0;
  unsigned e = 0;
  std::uint64_t q = 0;  // base field order; Hermitian reports work over F_{q^2}
  std::uint64_t n = 0;
  int sign = 1;         // +1: x^n - 1, -1: x^n + 1
  Mode mode = Mode::Euclidean;
  LengthDecomposition length;
  std::uint64_t coset_modulus = 1;  // 2^{m+1} n' for x^n + 1, 2^m n' for x^n - 1
  FieldPtr field;
  std::vector<FactorRecord> records;
  std::uint64_t r = 0;
  std::uint64_t s = 0;
  std::uint64_t t = 0;

  /// Multiplier for the cosets: q (Euclidean) or q^2 (Hermitian).
  std::uint64_t coset_multiplier() const { return mode == Mode::Euclidean ? q : q * q; }
};

/// prod_{j in coset} (x - alpha^j), computed in the splitting field; every
/// coefficient must be fixed by the Frobenius of the base field.
Poly minimal_poly_from_coset(const CyclotomicCoset& coset, const CyclotomicRoot& alpha);

/// Minimal polynomial of alpha^rep by linear algebra over the base field,
/// checked to have degree |coset|.
Poly minimal_poly_by_dependency(const CyclotomicCoset& coset, const CyclotomicRoot& alpha);

/// Factor x^n - sign over F_q (Euclidean) or F_{q^2} (Hermitian), where
/// `base` is F_q. Requires odd q. The product identity is verified before
/// returning; a failure throws std::logic_error.
FactorizationReport factor_xn(const FieldPtr& base, std::uint64_t n, int sign, Mode mode);

struct Verdict {
  bool ok = true;
  std::string detail;

  explicit operator bool() const { return ok; }
};

/// Re-checks monicity, irreducibility, polynomial-level tags, pairing
/// symmetry, counts and the product identity.
Verdict verify_report(const FactorizationReport& report);

}  // namespace negacycl
