#include "plateau/field.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace plateau {

bool is_prime(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) {
      out.push_back(d);
      while (v % d == 0) v /= d;
    }
  }
  if (v > 1) out.push_back(v);
  return out;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

namespace {

using Poly = std::vector<int>;  // c_0..c_deg over Z_p

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int inv_mod(int a, int p) {
  for (int x = 1; x < p; ++x)
    if (a * x % p == 1) return x;
  throw std::domain_error("inv_mod: not invertible");
}

Poly poly_rem(Poly a, const Poly& m, int p) {
  trim(a);
  const int dm = static_cast<int>(m.size()) - 1;
  const int lead_inv = inv_mod(m.back(), p);
  while (static_cast<int>(a.size()) - 1 >= dm) {
    const int shift = static_cast<int>(a.size()) - 1 - dm;
    const int c = a.back() * lead_inv % p;
    for (int i = 0; i <= dm; ++i) a[shift + i] = ((a[shift + i] - c * m[i]) % p + p) % p;
    trim(a);
  }
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  trim(r);
  return r;
}

Poly poly_gcd(Poly a, Poly b, int p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// x^{p^k} mod m by k repeated p-th powers.
Poly frobenius_power_of_x(const Poly& m, int p, int k) {
  Poly r = poly_rem({0, 1}, m, p);
  for (int step = 0; step < k; ++step) {
    Poly acc{1};
    for (int j = 0; j < p; ++j) acc = poly_rem(poly_mul(acc, r, p), m, p);
    r = std::move(acc);
  }
  return r;
}

void validate_prime(int p) {
  if (!is_prime(static_cast<std::uint64_t>(p))) throw std::invalid_argument("field: p = " + std::to_string(p) + " is not prime");
}

}  // namespace

bool is_irreducible(std::span<const int> modulus, int p) {
  validate_prime(p);
  Poly m(modulus.begin(), modulus.end());
  for (int& c : m) c = ((c % p) + p) % p;
  trim(m);
  const int n = static_cast<int>(m.size()) - 1;
  if (n < 1) return false;
  if (n == 1) return true;
  // Rabin: x^{p^n} = x mod m, and gcd(x^{p^{n/q}} - x, m) = 1 for primes q | n.
  Poly xpn = frobenius_power_of_x(m, p, n);
  Poly x = poly_rem({0, 1}, m, p);
  if (xpn != x) return false;
  for (std::uint64_t q : prime_factors(static_cast<std::uint64_t>(n))) {
    Poly t = frobenius_power_of_x(m, p, n / static_cast<int>(q));
    if (t.size() < 2) t.resize(2, 0);
    t[1] = ((t[1] - 1) % p + p) % p;
    trim(t);
    Poly g = poly_gcd(m, t, p);
    if (g.size() != 1) return false;
  }
  return true;
}

std::vector<int> canonical_modulus(int p, int n) {
  validate_prime(p);
  if (n < 1) throw std::invalid_argument("canonical_modulus: degree must be >= 1");
  if (n == 1) return {0, 1};
  // Enumerate (c_{n-1}, ..., c_0) in lexicographic order.
  std::vector<int> hi(n, 0);  // hi[0] = c_{n-1}
  while (true) {
    std::vector<int> m(n + 1);
    for (int i = 0; i < n; ++i) m[n - 1 - i] = hi[i];
    m[n] = 1;
    if (m[0] != 0 && is_irreducible(m, p)) return m;
    int pos = n - 1;
    while (pos >= 0 && ++hi[pos] == p) hi[pos--] = 0;
    if (pos < 0) break;
  }
  throw std::logic_error("canonical_modulus: no irreducible polynomial found");
}

GaloisField::GaloisField(int p, int n) : GaloisField(p, n, canonical_modulus(p, n)) { spec_.canonical = true; }

GaloisField::GaloisField(int p, int n, std::vector<int> modulus) {
  validate_prime(p);
  if (n < 1) throw std::invalid_argument("field: degree must be >= 1");
  if (modulus.size() != static_cast<std::size_t>(n + 1))
    throw std::invalid_argument("field: modulus must have n + 1 = " + std::to_string(n + 1) + " coefficients");
  for (int c : modulus)
    if (c < 0 || c >= p) throw std::invalid_argument("field: modulus coefficient out of range [0, p)");
  if (modulus.back() != 1) throw std::invalid_argument("field: modulus must be monic");
  if (!is_irreducible(modulus, p)) throw std::invalid_argument("field: modulus is reducible over Z_p");
  spec_ = FieldSpec{p, n, std::move(modulus), false};
  spec_.canonical = (spec_.modulus == canonical_modulus(p, n));
  group_ = DigitGroup(p, n);
  build();
}

std::shared_ptr<const GaloisField> GaloisField::make(int p, int n) { return std::make_shared<const GaloisField>(p, n); }

std::shared_ptr<const GaloisField> GaloisField::make(int p, int n, std::vector<int> modulus) {
  return std::make_shared<const GaloisField>(p, n, std::move(modulus));
}

std::vector<int> GaloisField::poly_mulmod(std::span<const int> a, std::span<const int> b) const {
  const int p = spec_.p, n = spec_.n;
  std::vector<int> r(2 * n, 0);
  for (int i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < n; ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  for (int k = 2 * n - 1; k >= n; --k) {
    const int c = r[k];
    if (c == 0) continue;
    for (int i = 0; i <= n; ++i) r[k - n + i] = ((r[k - n + i] - c * spec_.modulus[i]) % p + p) % p;
  }
  r.resize(n);
  return r;
}

FieldElement GaloisField::slow_mul(FieldElement a, FieldElement b) const {
  auto ca = coeffs(a), cb = coeffs(b);
  auto r = poly_mulmod(ca, cb);
  return {group_.from_digits(r)};
}

FieldElement GaloisField::slow_pow(FieldElement a, std::uint64_t e) const {
  FieldElement r = one();
  while (e > 0) {
    if (e & 1) r = slow_mul(r, a);
    a = slow_mul(a, a);
    e >>= 1;
  }
  return r;
}

void GaloisField::build() {
  const std::uint32_t q = order();
  const std::uint64_t q1 = q - 1;
  const auto factors = prime_factors(q1);
  primitive_ = 1;
  if (q > 2) {
    for (std::uint32_t i = 2; i < q; ++i) {
      bool full = true;
      for (auto r : factors) {
        if (slow_pow({i}, q1 / r) == one()) {
          full = false;
          break;
        }
      }
      if (full) {
        primitive_ = i;
        break;
      }
    }
  }
  exp_.assign(q1, 0);
  log_.assign(q, 0);
  FieldElement x = one();
  for (std::uint32_t t = 0; t < q1; ++t) {
    exp_[t] = x.index;
    log_[x.index] = t;
    x = slow_mul(x, {primitive_});
  }
  trace_.assign(q, 0);
  for (std::uint32_t i = 0; i < q; ++i) {
    FieldElement acc = zero(), y{i};
    for (int k = 0; k < spec_.n; ++k) {
      acc = add(acc, y);
      y = pow(y, spec_.p);
    }
    if (acc.index >= static_cast<std::uint32_t>(spec_.p)) throw std::logic_error("field: trace left the prime field");
    trace_[i] = static_cast<std::uint8_t>(acc.index);
  }
  dual_.assign(q, 0);
  const int n = spec_.n;
  std::vector<int> d(n);
  for (std::uint32_t mu = 0; mu < q; ++mu) {
    std::uint32_t basis = 1;
    for (int j = 0; j < n; ++j) {
      d[j] = trace(mul({mu}, {basis}));
      basis *= spec_.p;
    }
    dual_[mu] = group_.from_digits(d);
  }
}

FieldElement GaloisField::element(std::uint32_t index) const {
  if (index >= order()) throw std::out_of_range("field: element index " + std::to_string(index) + " out of range");
  return {index};
}

FieldElement GaloisField::from_coeffs(std::span<const int> c) const { return {group_.from_digits(c)}; }

FieldElement GaloisField::constant(std::int64_t k) const {
  return {static_cast<std::uint32_t>(((k % spec_.p) + spec_.p) % spec_.p)};
}

FieldElement GaloisField::inv(FieldElement a) const {
  if (a.index == 0) throw std::domain_error("field: inverse of zero");
  const std::uint32_t q1 = order() - 1;
  return {exp_[(q1 - log_[a.index]) % q1]};
}

FieldElement GaloisField::pow(FieldElement a, std::int64_t e) const {
  if (a.index == 0) {
    if (e < 0) throw std::domain_error("field: negative power of zero");
    return e == 0 ? one() : zero();
  }
  const auto q1 = static_cast<std::int64_t>(order() - 1);
  const std::int64_t r = ((e % q1) + q1) % q1;
  const std::uint64_t t = (static_cast<std::uint64_t>(log_[a.index]) * static_cast<std::uint64_t>(r)) % static_cast<std::uint64_t>(q1);
  return {exp_[t]};
}

int GaloisField::trace_by_frobenius(FieldElement x) const {
  FieldElement acc = zero(), y = x;
  for (int i = 0; i < spec_.n; ++i) {
    acc = add(acc, y);
    y = slow_pow(y, static_cast<std::uint64_t>(spec_.p));
  }
  // Tr(x) lies in the prime field: only the constant coefficient may be nonzero.
  if (acc.index >= static_cast<std::uint32_t>(spec_.p)) throw std::logic_error("field: trace left the prime field");
  return static_cast<int>(acc.index);
}

std::uint64_t GaloisField::multiplicative_order(FieldElement a) const {
  if (a.index == 0) throw std::domain_error("field: zero has no multiplicative order");
  const std::uint64_t q1 = order() - 1;
  return q1 / gcd_u64(q1, log_[a.index]);
}

bool GaloisField::is_primitive(FieldElement a) const { return a.index != 0 && multiplicative_order(a) == order() - 1; }

std::vector<FieldElement> GaloisField::element_powers(FieldElement sigma) const {
  if (!is_primitive(sigma)) throw std::invalid_argument("field: element " + std::to_string(sigma.index) + " is not primitive");
  std::vector<FieldElement> out(order() - 1);
  FieldElement x = one();
  for (auto& e : out) {
    e = x;
    x = mul(x, sigma);
  }
  return out;
}

std::uint32_t GaloisField::log(FieldElement a) const {
  if (a.index == 0) throw std::domain_error("field: log of zero");
  return log_[a.index];
}

}  // namespace plateau
