#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace plateau {

/// Sorted, duplicate-free list of group element indices.
using ElementSet = std::vector<std::uint32_t>;

/// Sorts and deduplicates.
ElementSet make_element_set(std::vector<std::uint32_t> members);

/**
 * The elementary abelian group Z_p^N with elements encoded as little-endian
 * base-p digit strings. Addition is digit-wise mod p.
 *
 * The encoding is split into a low and a high half so that sums and
 * differences are two table lookups.
 */
class DigitGroup {
 public:
  DigitGroup() = default;
  DigitGroup(int p, int digits);

  int prime() const { return p_; }
  int digits() const { return digits_; }
  std::uint32_t order() const { return order_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    return add_lo_[lo(a) * lo_size_ + lo(b)] + lo_size_ * add_hi_[hi(a) * hi_size_ + hi(b)];
  }
  std::uint32_t neg(std::uint32_t a) const { return neg_lo_[lo(a)] + lo_size_ * neg_hi_[hi(a)]; }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }
  /// k * a for an integer k.
  std::uint32_t scale(std::uint32_t a, std::int64_t k) const;

  std::vector<int> digits_of(std::uint32_t a) const;
  std::uint32_t from_digits(std::span<const int> d) const;
  /// Standard dot product of digit vectors, mod p.
  int dot(std::uint32_t a, std::uint32_t b) const;

 private:
  std::uint32_t lo(std::uint32_t a) const { return a % lo_size_; }
  std::uint32_t hi(std::uint32_t a) const { return a / lo_size_; }

  int p_ = 0;
  int digits_ = 0;
  std::uint32_t order_ = 1;
  std::uint32_t lo_size_ = 1;
  std::uint32_t hi_size_ = 1;
  std::vector<std::uint32_t> add_lo_, add_hi_, neg_lo_, neg_hi_;
};

/// Largest supported group order (2^20).
inline constexpr std::uint64_t kMaxGroupOrder = 1u << 20;

}  // namespace plateau
