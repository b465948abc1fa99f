#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace plateau {

/// Thrown when an exact integer computation leaves the 64-bit range.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/**
 * Exact element of the cyclotomic ring Z[zeta_p] for a prime p <= 7.
 *
 * Stored in the power basis 1, zeta, ..., zeta^{p-2}. Internally the
 * coefficient of zeta^{p-1} is kept in an extra slot that is always zero
 * after normalisation, so multiplying by a root of unity is a rotation.
 * All arithmetic is overflow-checked.
 */
class CycInt {
 public:
  static constexpr int kMaxPrime = 7;

  CycInt() = default;
  explicit CycInt(int p, std::int64_t constant = 0);

  /// zeta_p^{e mod p}.
  static CycInt root_power(int p, std::int64_t e);
  /// From power-basis coefficients c_0..c_{p-2}.
  static CycInt from_coeffs(int p, std::span<const std::int64_t> coeffs);
  /// From a histogram: sum_r counts[r] * zeta^r for r in [0, p).
  static CycInt from_residue_counts(int p, std::span<const std::int64_t> counts);

  int prime() const { return p_; }
  /// Power-basis coefficients c_0..c_{p-2}.
  std::span<const std::int64_t> coeffs() const {
    return {c_.data(), static_cast<std::size_t>(p_ > 0 ? p_ - 1 : 0)};
  }
  std::vector<std::int64_t> coeff_vector() const {
    auto c = coeffs();
    return {c.begin(), c.end()};
  }

  bool is_zero() const;
  std::optional<std::int64_t> as_rational_integer() const;

  CycInt conj() const;
  CycInt norm_sq() const { return *this * conj(); }
  /// this * zeta^e, a cyclic rotation of the coefficients.
  CycInt times_root(std::int64_t e) const;
  /// Adds zeta^e in place.
  void add_root(std::int64_t e);
  /// Divides every coefficient by d; throws if any coefficient is not divisible.
  CycInt exact_div(std::int64_t d) const;

  std::complex<double> embed() const;
  std::string to_string() const;

  CycInt& operator+=(const CycInt& o);
  CycInt& operator-=(const CycInt& o);
  CycInt& operator*=(const CycInt& o);
  CycInt& operator*=(std::int64_t k);

  friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
  friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
  friend CycInt operator*(const CycInt& a, const CycInt& b);
  friend CycInt operator*(CycInt a, std::int64_t k) { return a *= k; }
  friend CycInt operator*(std::int64_t k, CycInt a) { return a *= k; }
  CycInt operator-() const;

  friend bool operator==(const CycInt& a, const CycInt& b) {
    return a.p_ == b.p_ && a.c_ == b.c_;
  }

 private:
  void check_same(const CycInt& o) const;
  void normalize();

  int p_ = 0;
  std::array<std::int64_t, kMaxPrime> c_{};
};

// Scalar hooks used by DenseMatrix.
inline CycInt zero_like(const CycInt& x) { return CycInt(x.prime()); }
inline CycInt conj(const CycInt& x) { return x.conj(); }

namespace checked {
std::int64_t add(std::int64_t a, std::int64_t b);
std::int64_t sub(std::int64_t a, std::int64_t b);
std::int64_t mul(std::int64_t a, std::int64_t b);
std::int64_t ipow(std::int64_t base, int exp);
}  // namespace checked

/// Returns e if value == base^e (value >= 1), otherwise nullopt.
std::optional<int> exact_log(std::int64_t value, std::int64_t base);

}  // namespace plateau
