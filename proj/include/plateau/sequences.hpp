#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "plateau/cyclotomic.hpp"
#include "plateau/field.hpp"
#include "plateau/walsh.hpp"

namespace plateau {

/// u(t) = Tr(sigma^t) for t in [0, p^n - 1).
struct MSequence {
  FieldPtr field;
  FieldElement sigma;
  std::vector<std::uint8_t> values;

  std::uint32_t period() const { return static_cast<std::uint32_t>(values.size()); }
};

MSequence m_sequence(FieldPtr field);

/// v(t) = u(d t mod period).
std::vector<std::uint8_t> decimate(const MSequence& u, std::uint64_t d);

/// Number of occurrences of each residue in one period.
std::vector<std::uint32_t> value_counts(const MSequence& u);

struct CrossCorrSpectrum {
  int p = 0;
  /// theta(tau) = sum_t zeta^{u(t + tau) - v(t)}.
  std::vector<CycInt> values;

  CycInt sum() const;
};

/// Exact table over all shifts; shifts are split across up to `jobs` threads.
CrossCorrSpectrum cross_correlation(const MSequence& u, std::span<const std::uint8_t> v, unsigned jobs = 1);

struct BridgeVerdict {
  std::uint64_t d = 0;
  CrossCorrSpectrum spectrum;
  /// theta(tau) = -1 + conj(W_{F_1}(-a)) with a = -sigma^tau, F_1 = Tr(x^d).
  bool holds = false;
  std::optional<std::uint32_t> witness;
  /// theta(tau) = -1 + W_{F_1}(-a) without the conjugate; true when the spectrum is real.
  bool unconjugated_holds = false;
  std::optional<std::uint32_t> unconjugated_witness;
  /// sum_tau theta(tau) against 1 - conj(W_{F_1}(0)).
  CycInt sum;
  CycInt expected_sum;
  bool sum_matches = false;
};

BridgeVerdict walsh_bridge_check(FieldPtr field, std::uint64_t d, unsigned jobs = 1);

struct ThreeValuedVerdict {
  bool three_valued = false;
  std::optional<int> s;
  /// p^{(n+s)/2} on success.
  std::int64_t amplitude = 0;
  bool all_rational = false;
  /// Distinct theta values in order of first occurrence.
  std::vector<CycInt> distinct_values;
};

/// Every theta in {-1, -1 + A, -1 - A}, all three attained, A = p^{(n+s)/2}, 0 <= s <= n.
ThreeValuedVerdict three_valued_classify(const CrossCorrSpectrum& spectrum, int p, int n);

struct CrossPlateauedVerdict {
  BridgeVerdict bridge;
  ThreeValuedVerdict three_valued;
  VectorialClass vectorial;
  /// Three-valued with s implies x^d vectorial s-plateaued.
  bool agrees = false;
};

CrossPlateauedVerdict cross_plateaued_check(FieldPtr field, std::uint64_t d, unsigned jobs = 1);

struct Decimation {
  std::uint64_t d = 0;
  std::string form;
  int s = 0;
  std::uint64_t gcd = 0;  // gcd(p^n - 1, d)
  bool coprime = false;
};

struct DecimationFamily {
  int p = 0;
  int n = 0;
  int k = 0;
  int s = 0;  // gcd(n, k)
  std::optional<std::string> rejection;
  std::vector<Decimation> decimations;
};

/// d = (p^{2k}+1)/2 and d = p^{2k}-p^k+1 with s = gcd(n, k). Requires p odd; n/s even is rejected.
DecimationFamily known_decimations(int p, int n, int k);

struct ComponentRelationVerdict {
  std::uint64_t d = 0;
  bool permutation = false;
  std::uint32_t c = 0;
  std::uint32_t b = 0;  // c^d
  /// W_{F_b}(a) = W_{F_1}(a / c) for every a.
  bool relation_holds = false;
  std::optional<std::uint32_t> witness;
  /// W_{F_b}(0) = 0 for every b != 0; only checked for permutations.
  bool zero_vanishes = false;
  std::optional<std::uint32_t> zero_witness;
};

ComponentRelationVerdict component_relation_check(FieldPtr field, std::uint64_t d, FieldElement c, unsigned jobs = 1);

}  // namespace plateau
