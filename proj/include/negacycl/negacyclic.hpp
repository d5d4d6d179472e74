// Negacyclic codes of length n as ideals <g> of F[x]/(x^n + 1), their
// Euclidean and Hermitian duals, and LCD (complementary dual) enumeration.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "negacycl/factorization.hpp"
#include "negacycl/polyring.hpp"

namespace negacycl {

struct NegacyclicCode {
  FieldPtr ctx;  // F_q for Euclidean work, F_{q^2} for Hermitian work
  std::uint64_t n = 0;
  Poly gen;
  std::uint64_t dim = 0;
};

/// gen must be monic and divide x^n + 1; throws std::invalid_argument otherwise.
NegacyclicCode make_code(const FieldPtr& ctx, std::uint64_t n, const Poly& gen);

/// (x^n + 1) / gen.
Poly check_polynomial(const NegacyclicCode& code);

/// h* (Euclidean) or h-dagger (Hermitian), h = (x^n + 1)/gen. Hermitian mode
/// needs a field of even degree; conjugation is over its square-root subfield.
Poly dual_generator(const NegacyclicCode& code, Mode mode);
NegacyclicCode dual_code(const NegacyclicCode& code, Mode mode);

/// gcd(gen, dual generator) == 1.
bool is_lcd(const NegacyclicCode& code, Mode mode);

/// Dual computed as a null space of the generator matrix (rows x^i g mod
/// x^n + 1). The generator of the result is its monic codeword of least degree.
inline constexpr std::uint64_t kDenseMaxLength = 64;
NegacyclicCode brute_dual(const NegacyclicCode& code, Mode mode);

/// dim(c1 ∩ c2) from deg lcm(g1, g2).
std::uint64_t intersection_dim(const NegacyclicCode& c1, const NegacyclicCode& c2);
/// The same by ranks of stacked generator matrices.
std::uint64_t intersection_dim_dense(const NegacyclicCode& c1, const NegacyclicCode& c2);

/// Length-n generator matrix rows x^i g mod x^n + 1, i = 0 .. dim - 1.
std::vector<std::vector<Elem>> generator_matrix(const NegacyclicCode& code);

struct LcdCensus {
  std::uint64_t q = 0;  // base field order
  std::uint64_t n = 0;
  Mode mode = Mode::Euclidean;
  LengthDecomposition length;
  std::uint64_t r = 0;
  std::uint64_t s = 0;
  std::uint64_t t = 0;
  std::optional<std::vector<Poly>> generators;

  /// (r + s) / 2, the base-2 logarithm of the number of LCD codes.
  std::uint64_t log2_count() const { return (r + s) / 2; }
  /// 2^{(r+s)/2} in decimal.
  std::string count() const;
};

inline constexpr std::uint64_t kEnumerationCap = std::uint64_t{1} << 20;

/// Every LCD generator: each self-paired factor and each reciprocal pair is
/// independently present with exponent p^mu or absent. Generators are listed
/// by subset bitmask, bit k standing for the k-th self factor or pair in
/// report order. `base` is F_q in both modes.
LcdCensus enumerate_lcd(const FieldPtr& base, std::uint64_t n, Mode mode);

/// r and s from the divisor-sum formulas, no factorization.
LcdCensus count_lcd(std::uint64_t q, std::uint64_t n, Mode mode);

/// Decimal representation of 2^k.
std::string pow2_decimal(std::uint64_t k);

}  // namespace negacycl
