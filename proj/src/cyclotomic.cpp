#include "plateau/cyclotomic.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace plateau {

namespace checked {

std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("CycInt: integer overflow in addition; reduce n");
  return r;
}

std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("CycInt: integer overflow in subtraction; reduce n");
  return r;
}

std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("CycInt: integer overflow in multiplication; reduce n");
  return r;
}

std::int64_t ipow(std::int64_t base, int exp) {
  if (exp < 0) throw std::invalid_argument("ipow: negative exponent");
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) r = mul(r, base);
  return r;
}

}  // namespace checked

std::optional<int> exact_log(std::int64_t value, std::int64_t base) {
  if (value < 1 || base < 2) return std::nullopt;
  int e = 0;
  while (value % base == 0) {
    value /= base;
    ++e;
  }
  if (value != 1) return std::nullopt;
  return e;
}

namespace {

void check_prime(int p) {
  if (p != 2 && p != 3 && p != 5 && p != 7)
    throw std::invalid_argument("CycInt: prime must be one of 2, 3, 5, 7 (got " + std::to_string(p) + ")");
}

int mod_p(std::int64_t e, int p) {
  auto r = static_cast<int>(e % p);
  return r < 0 ? r + p : r;
}

}  // namespace

CycInt::CycInt(int p, std::int64_t constant) : p_(p) {
  check_prime(p);
  c_[0] = constant;
}

CycInt CycInt::root_power(int p, std::int64_t e) {
  CycInt r(p);
  r.add_root(e);
  return r;
}

CycInt CycInt::from_coeffs(int p, std::span<const std::int64_t> coeffs) {
  CycInt r(p);
  if (coeffs.size() != static_cast<std::size_t>(p - 1))
    throw std::invalid_argument("CycInt: expected " + std::to_string(p - 1) + " coefficients");
  for (std::size_t i = 0; i < coeffs.size(); ++i) r.c_[i] = coeffs[i];
  return r;
}

CycInt CycInt::from_residue_counts(int p, std::span<const std::int64_t> counts) {
  CycInt r(p);
  if (counts.size() != static_cast<std::size_t>(p))
    throw std::invalid_argument("CycInt: expected " + std::to_string(p) + " residue counts");
  for (int i = 0; i < p; ++i) r.c_[i] = counts[i];
  r.normalize();
  return r;
}

void CycInt::normalize() {
  if (p_ == 0) return;
  const std::int64_t top = c_[p_ - 1];
  if (top == 0) return;
  for (int i = 0; i < p_ - 1; ++i) c_[i] = checked::sub(c_[i], top);
  c_[p_ - 1] = 0;
}

void CycInt::check_same(const CycInt& o) const {
  if (p_ == 0) throw std::logic_error("CycInt: use of a default-constructed value");
  if (p_ != o.p_)
    throw std::invalid_argument("CycInt: mixed primes " + std::to_string(p_) + " and " + std::to_string(o.p_));
}

bool CycInt::is_zero() const {
  for (int i = 0; i < p_; ++i)
    if (c_[i] != 0) return false;
  return true;
}

std::optional<std::int64_t> CycInt::as_rational_integer() const {
  for (int i = 1; i < p_; ++i)
    if (c_[i] != 0) return std::nullopt;
  return c_[0];
}

CycInt CycInt::conj() const {
  // zeta^i -> zeta^{p-i}
  CycInt r(p_);
  r.c_[0] = c_[0];
  for (int i = 1; i < p_; ++i) r.c_[p_ - i] = c_[i];
  r.normalize();
  return r;
}

CycInt CycInt::times_root(std::int64_t e) const {
  const int s = mod_p(e, p_);
  if (s == 0) return *this;
  CycInt r(p_);
  for (int i = 0; i < p_; ++i) r.c_[(i + s) % p_] = c_[i];
  r.normalize();
  return r;
}

void CycInt::add_root(std::int64_t e) {
  const int s = mod_p(e, p_);
  if (s == p_ - 1) {
    for (int i = 0; i < p_ - 1; ++i) c_[i] = checked::sub(c_[i], 1);
  } else {
    c_[s] = checked::add(c_[s], 1);
  }
}

CycInt CycInt::exact_div(std::int64_t d) const {
  if (d == 0) throw std::invalid_argument("CycInt: division by zero");
  CycInt r(p_);
  for (int i = 0; i < p_; ++i) {
    if (c_[i] % d != 0) throw std::domain_error("CycInt: inexact division by " + std::to_string(d));
    r.c_[i] = c_[i] / d;
  }
  return r;
}

std::complex<double> CycInt::embed() const {
  std::complex<double> z{0.0, 0.0};
  for (int i = 0; i < p_; ++i)
    z += static_cast<double>(c_[i]) * std::polar(1.0, 2.0 * std::numbers::pi * i / p_);
  return z;
}

std::string CycInt::to_string() const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i + 1 < p_; ++i) os << (i ? "," : "") << c_[i];
  os << ']';
  return os.str();
}

CycInt& CycInt::operator+=(const CycInt& o) {
  check_same(o);
  for (int i = 0; i < p_ - 1; ++i) c_[i] = checked::add(c_[i], o.c_[i]);
  return *this;
}

CycInt& CycInt::operator-=(const CycInt& o) {
  check_same(o);
  for (int i = 0; i < p_ - 1; ++i) c_[i] = checked::sub(c_[i], o.c_[i]);
  return *this;
}

CycInt& CycInt::operator*=(const CycInt& o) {
  *this = *this * o;
  return *this;
}

CycInt& CycInt::operator*=(std::int64_t k) {
  for (int i = 0; i < p_ - 1; ++i) c_[i] = checked::mul(c_[i], k);
  return *this;
}

CycInt operator*(const CycInt& a, const CycInt& b) {
  a.check_same(b);
  const int p = a.p_;
  CycInt r(p);
  for (int i = 0; i < p - 1; ++i) {
    if (a.c_[i] == 0) continue;
    for (int j = 0; j < p - 1; ++j) {
      if (b.c_[j] == 0) continue;
      const int k = (i + j) % p;
      r.c_[k] = checked::add(r.c_[k], checked::mul(a.c_[i], b.c_[j]));
    }
  }
  r.normalize();
  return r;
}

CycInt CycInt::operator-() const {
  CycInt r(p_);
  for (int i = 0; i < p_ - 1; ++i) r.c_[i] = checked::sub(0, c_[i]);
  return r;
}

}  // namespace plateau
