#include "plateau/group.hpp"

#include <algorithm>
#include <stdexcept>

namespace plateau {

ElementSet make_element_set(std::vector<std::uint32_t> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return members;
}

namespace {

std::vector<std::uint32_t> digit_add_table(int p, int digits, std::uint32_t size) {
  std::vector<std::uint32_t> t(static_cast<std::size_t>(size) * size);
  for (std::uint32_t a = 0; a < size; ++a) {
    for (std::uint32_t b = 0; b < size; ++b) {
      std::uint32_t x = a, y = b, r = 0, place = 1;
      for (int i = 0; i < digits; ++i) {
        r += place * ((x % p + y % p) % p);
        x /= p;
        y /= p;
        place *= p;
      }
      t[static_cast<std::size_t>(a) * size + b] = r;
    }
  }
  return t;
}

std::vector<std::uint32_t> digit_neg_table(int p, int digits, std::uint32_t size) {
  std::vector<std::uint32_t> t(size);
  for (std::uint32_t a = 0; a < size; ++a) {
    std::uint32_t x = a, r = 0, place = 1;
    for (int i = 0; i < digits; ++i) {
      r += place * ((p - x % p) % p);
      x /= p;
      place *= p;
    }
    t[a] = r;
  }
  return t;
}

}  // namespace

DigitGroup::DigitGroup(int p, int digits) : p_(p), digits_(digits) {
  if (p < 2 || digits < 1) throw std::invalid_argument("DigitGroup: need p >= 2 and at least one digit");
  std::uint64_t order = 1;
  for (int i = 0; i < digits; ++i) {
    order *= static_cast<std::uint64_t>(p);
    if (order > kMaxGroupOrder) throw std::invalid_argument("DigitGroup: group order exceeds 2^20");
  }
  order_ = static_cast<std::uint32_t>(order);
  const int lo_digits = (digits + 1) / 2;
  const int hi_digits = digits - lo_digits;
  lo_size_ = 1;
  for (int i = 0; i < lo_digits; ++i) lo_size_ *= p;
  hi_size_ = order_ / lo_size_;
  add_lo_ = digit_add_table(p, lo_digits, lo_size_);
  add_hi_ = digit_add_table(p, hi_digits, hi_size_);
  neg_lo_ = digit_neg_table(p, lo_digits, lo_size_);
  neg_hi_ = digit_neg_table(p, hi_digits, hi_size_);
}

std::uint32_t DigitGroup::scale(std::uint32_t a, std::int64_t k) const {
  const auto m = static_cast<std::uint32_t>(((k % p_) + p_) % p_);
  std::uint32_t r = 0;
  for (std::uint32_t i = 0; i < m; ++i) r = add(r, a);
  return r;
}

std::vector<int> DigitGroup::digits_of(std::uint32_t a) const {
  std::vector<int> d(digits_);
  for (int i = 0; i < digits_; ++i) {
    d[i] = static_cast<int>(a % p_);
    a /= p_;
  }
  return d;
}

std::uint32_t DigitGroup::from_digits(std::span<const int> d) const {
  if (d.size() != static_cast<std::size_t>(digits_)) throw std::invalid_argument("DigitGroup: wrong digit count");
  std::uint32_t r = 0;
  for (int i = digits_ - 1; i >= 0; --i) {
    if (d[i] < 0 || d[i] >= p_) throw std::invalid_argument("DigitGroup: digit out of range");
    r = r * p_ + static_cast<std::uint32_t>(d[i]);
  }
  return r;
}

int DigitGroup::dot(std::uint32_t a, std::uint32_t b) const {
  int r = 0;
  for (int i = 0; i < digits_; ++i) {
    r = (r + static_cast<int>(a % p_) * static_cast<int>(b % p_)) % p_;
    a /= p_;
    b /= p_;
  }
  return r;
}

}  // namespace plateau
