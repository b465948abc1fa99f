#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <vector>

#include "plateau/group.hpp"

namespace plateau {

/// Element of F_{p^n}, identified by its index sum_i coeff_i * p^i in the
/// polynomial basis 1, x, ..., x^{n-1}.
struct FieldElement {
  std::uint32_t index = 0;
  auto operator<=>(const FieldElement&) const = default;
};

/// Description of F_{p^n}: prime, degree and monic modulus c_0..c_n.
struct FieldSpec {
  int p = 0;
  int n = 0;
  std::vector<int> modulus;
  bool canonical = true;

  bool operator==(const FieldSpec&) const = default;
};

bool is_prime(std::uint64_t v);
std::vector<std::uint64_t> prime_factors(std::uint64_t v);
std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);

/// Irreducibility over Z_p of a monic polynomial given as c_0..c_n.
bool is_irreducible(std::span<const int> modulus, int p);

/// Lexicographically smallest monic irreducible of degree n, ordered on
/// (c_{n-1}, ..., c_0). Returned as c_0..c_n. For n = 1 this is x.
std::vector<int> canonical_modulus(int p, int n);

/**
 * The finite field F_{p^n}.
 *
 * Immutable after construction. Multiplication runs through discrete
 * log tables built from the primitive element; addition is digit-wise.
 */
class GaloisField {
 public:
  /// Canonical modulus.
  GaloisField(int p, int n);
  /// Explicit modulus c_0..c_n; rejected if not monic irreducible.
  GaloisField(int p, int n, std::vector<int> modulus);

  static std::shared_ptr<const GaloisField> make(int p, int n);
  static std::shared_ptr<const GaloisField> make(int p, int n, std::vector<int> modulus);

  const FieldSpec& spec() const { return spec_; }
  int characteristic() const { return spec_.p; }
  int degree() const { return spec_.n; }
  std::uint32_t order() const { return group_.order(); }
  const DigitGroup& additive_group() const { return group_; }

  FieldElement zero() const { return {0}; }
  FieldElement one() const { return {1}; }
  FieldElement element(std::uint32_t index) const;
  FieldElement from_coeffs(std::span<const int> coeffs) const;
  std::vector<int> coeffs(FieldElement x) const { return group_.digits_of(x.index); }
  /// The prime-field element k mod p.
  FieldElement constant(std::int64_t k) const;

  FieldElement add(FieldElement a, FieldElement b) const { return {group_.add(a.index, b.index)}; }
  FieldElement sub(FieldElement a, FieldElement b) const { return {group_.sub(a.index, b.index)}; }
  FieldElement neg(FieldElement a) const { return {group_.neg(a.index)}; }
  FieldElement mul(FieldElement a, FieldElement b) const {
    if (a.index == 0 || b.index == 0) return zero();
    const std::uint32_t e = log_[a.index] + log_[b.index];
    return {exp_[e >= order() - 1 ? e - (order() - 1) : e]};
  }
  /// Throws std::domain_error on zero.
  FieldElement inv(FieldElement a) const;
  FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }
  /// 0^0 = 1; negative exponents require a nonzero base.
  FieldElement pow(FieldElement a, std::int64_t e) const;

  /// Tr_n(x) = sum_{i<n} x^{p^i}, as an integer in [0, p).
  int trace(FieldElement x) const { return trace_[x.index]; }
  /// The same sum evaluated with repeated Frobenius; reference for trace().
  int trace_by_frobenius(FieldElement x) const;
  const std::vector<std::uint8_t>& trace_table() const { return trace_; }

  /// Index u with Tr(mu * x) = <u, x> (digit dot product) for every x.
  std::uint32_t dual_index(FieldElement mu) const { return dual_[mu.index]; }

  std::uint64_t multiplicative_order(FieldElement a) const;
  bool is_primitive(FieldElement a) const;
  /// Smallest-index generator of the multiplicative group.
  FieldElement primitive() const { return {primitive_}; }
  /// sigma^0, ..., sigma^{q-2}; throws if sigma is not primitive.
  std::vector<FieldElement> element_powers(FieldElement sigma) const;

  /// Discrete log base primitive(); throws on zero.
  std::uint32_t log(FieldElement a) const;

 private:
  void build();
  std::vector<int> poly_mulmod(std::span<const int> a, std::span<const int> b) const;
  FieldElement slow_mul(FieldElement a, FieldElement b) const;
  FieldElement slow_pow(FieldElement a, std::uint64_t e) const;

  FieldSpec spec_;
  DigitGroup group_;
  std::uint32_t primitive_ = 1;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint8_t> trace_;
  std::vector<std::uint32_t> dual_;
};

using FieldPtr = std::shared_ptr<const GaloisField>;

}  // namespace plateau
