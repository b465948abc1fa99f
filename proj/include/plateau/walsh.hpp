#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "plateau/cyclotomic.hpp"
#include "plateau/functions.hpp"

namespace plateau {

/**
 * Character transform over Z_p^N with the standard dot product:
 *
 *   out[u] = sum_x table[x] * zeta^{sign * <u, x>}
 *
 * Decimation in coordinates, one exact p-point transform per digit.
 * Cost O(N * p^{N+1}) ring operations, each p-point butterfly uses only
 * root-of-unity rotations.
 */
std::vector<CycInt> digit_dft(std::span<const CycInt> table, const DigitGroup& group, int sign);

/// Exact Walsh spectrum mu -> W(mu) = sum_x zeta^{f(x) - Tr(mu x)}.
class WalshSpectrum {
 public:
  /// Checks Parseval (sum of norms = p^{2n}); throws std::logic_error otherwise.
  WalshSpectrum(FieldPtr field, std::vector<CycInt> values);

  const FieldPtr& field() const { return field_; }
  const std::vector<CycInt>& values() const { return values_; }
  const CycInt& operator[](std::uint32_t mu) const { return values_[mu]; }
  std::uint32_t size() const { return static_cast<std::uint32_t>(values_.size()); }

 private:
  FieldPtr field_;
  std::vector<CycInt> values_;
};

WalshSpectrum walsh_naive(const PAryFunction& f);
WalshSpectrum walsh_fast(const PAryFunction& f);

/// Checks p^n * zeta^{f(x)} = sum_mu W(mu) zeta^{Tr(mu x)} for every x.
bool inverse_walsh_check(const PAryFunction& f, const WalshSpectrum& spectrum);

enum class SpectrumKind { Bent, SPlateaued, NotPlateaued };

struct SpectrumClass {
  SpectrumKind kind = SpectrumKind::NotPlateaued;
  std::optional<int> s;
  /// p^{n+s} when plateaued; otherwise the first nonzero norm that is rational (0 if none).
  std::int64_t amplitude_sq = 0;
  std::uint32_t support_size = 0;
  /// First mu where the classification fails.
  std::optional<std::uint32_t> witness;

  bool plateaued() const { return kind != SpectrumKind::NotPlateaued; }
  bool operator==(const SpectrumClass&) const = default;
};

std::string to_string(SpectrumKind k);

SpectrumClass classify(const WalshSpectrum& spectrum);
/// classify(walsh_fast(f)).
SpectrumClass classify(const PAryFunction& f);

enum class VectorialKind { VectorialSPlateaued, VectorialPlateaued, NotPlateaued };

struct VectorialClass {
  VectorialKind kind = VectorialKind::NotPlateaued;
  std::optional<int> s;
  /// Component b (codomain index) that breaks the verdict.
  std::optional<std::uint32_t> witness;
  /// Index b-1 holds the class of component b.
  std::vector<SpectrumClass> components;
};

std::string to_string(VectorialKind k);

/// Classifies every nonzero component; components run on up to `jobs` threads.
VectorialClass classify_vectorial(const VectorialFunction& F, unsigned jobs = 1);

/// a -> Delta_f(a) = sum_x zeta^{D_a f(x)}, by direct summation.
std::vector<CycInt> delta_transform(const PAryFunction& f);
/// The same table through the spectrum: p^{-n} sum_mu |W(mu)|^2 zeta^{Tr(mu a)}.
std::vector<CycInt> delta_transform_via_spectrum(const WalshSpectrum& spectrum);

/// (F * G)(a) = sum_x F(x) G(x - a) over the digit group.
std::vector<CycInt> convolve(std::span<const CycInt> F, std::span<const CycInt> G, const DigitGroup& group);

/// x -> zeta^{f(x)}.
std::vector<CycInt> root_table(const PAryFunction& f);

}  // namespace plateau
