#include "plateau/sequences.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "plateau/parallel.hpp"

namespace plateau {

MSequence m_sequence(FieldPtr field) {
  MSequence u{field, field->primitive(), {}};
  const std::uint32_t period = field->order() - 1;
  u.values.resize(period);
  FieldElement x = field->one();
  for (std::uint32_t t = 0; t < period; ++t) {
    u.values[t] = static_cast<std::uint8_t>(field->trace(x));
    x = field->mul(x, u.sigma);
  }
  return u;
}

std::vector<std::uint8_t> decimate(const MSequence& u, std::uint64_t d) {
  const std::uint64_t period = u.period();
  std::vector<std::uint8_t> v(period);
  const std::uint64_t step = d % period;
  std::uint64_t idx = 0;
  for (std::uint64_t t = 0; t < period; ++t) {
    v[t] = u.values[idx];
    idx += step;
    if (idx >= period) idx -= period;
  }
  return v;
}

std::vector<std::uint32_t> value_counts(const MSequence& u) {
  std::vector<std::uint32_t> counts(u.field->characteristic(), 0);
  for (auto x : u.values) ++counts[x];
  return counts;
}

CycInt CrossCorrSpectrum::sum() const {
  CycInt total(p);
  for (const auto& v : values) total += v;
  return total;
}

CrossCorrSpectrum cross_correlation(const MSequence& u, std::span<const std::uint8_t> v, unsigned jobs) {
  const std::uint32_t period = u.period();
  if (v.size() != period) throw std::invalid_argument("cross_correlation: periods differ");
  const int p = u.field->characteristic();
  CrossCorrSpectrum out{p, std::vector<CycInt>(period)};
  parallel_for(period, jobs, [&](std::size_t tau) {
    std::vector<std::int64_t> counts(p, 0);
    std::size_t i = tau;
    for (std::uint32_t t = 0; t < period; ++t) {
      ++counts[(u.values[i] + p - v[t]) % p];
      if (++i == period) i = 0;
    }
    out.values[tau] = CycInt::from_residue_counts(p, counts);
  });
  return out;
}

BridgeVerdict walsh_bridge_check(FieldPtr field, std::uint64_t d, unsigned jobs) {
  const auto u = m_sequence(field);
  BridgeVerdict out;
  out.d = d;
  out.spectrum = cross_correlation(u, decimate(u, d), jobs);
  const auto W = walsh_fast(trace_power(field, d));
  const int p = field->characteristic();
  const CycInt minus_one(p, -1);
  out.holds = true;
  out.unconjugated_holds = true;
  FieldElement x = field->one();
  for (std::uint32_t tau = 0; tau < u.period(); ++tau) {
    // -a = sigma^tau
    const CycInt& w = W[x.index];
    const CycInt& theta = out.spectrum.values[tau];
    if (out.holds && theta != minus_one + w.conj()) {
      out.holds = false;
      out.witness = tau;
    }
    if (out.unconjugated_holds && theta != minus_one + w) {
      out.unconjugated_holds = false;
      out.unconjugated_witness = tau;
    }
    x = field->mul(x, u.sigma);
  }
  out.sum = out.spectrum.sum();
  out.expected_sum = CycInt(p, 1) - W[0].conj();
  out.sum_matches = out.sum == out.expected_sum;
  return out;
}

ThreeValuedVerdict three_valued_classify(const CrossCorrSpectrum& spectrum, int p, int n) {
  ThreeValuedVerdict out;
  for (const auto& v : spectrum.values)
    if (std::find(out.distinct_values.begin(), out.distinct_values.end(), v) == out.distinct_values.end())
      out.distinct_values.push_back(v);
  std::vector<std::int64_t> rational;
  out.all_rational = true;
  for (const auto& v : out.distinct_values) {
    if (const auto r = v.as_rational_integer()) {
      rational.push_back(*r);
    } else {
      out.all_rational = false;
    }
  }
  if (!out.all_rational || rational.size() != 3) return out;
  std::sort(rational.begin(), rational.end());
  for (int s = (n % 2); s <= n; s += 2) {
    const std::int64_t A = checked::ipow(p, (n + s) / 2);
    if (rational == std::vector<std::int64_t>{-1 - A, -1, -1 + A}) {
      out.three_valued = true;
      out.s = s;
      out.amplitude = A;
      break;
    }
  }
  return out;
}

CrossPlateauedVerdict cross_plateaued_check(FieldPtr field, std::uint64_t d, unsigned jobs) {
  CrossPlateauedVerdict out;
  out.bridge = walsh_bridge_check(field, d, jobs);
  out.three_valued = three_valued_classify(out.bridge.spectrum, field->characteristic(), field->degree());
  out.vectorial = classify_vectorial(power_map(field, d), jobs);
  if (out.three_valued.three_valued) {
    out.agrees = out.vectorial.kind == VectorialKind::VectorialSPlateaued && out.vectorial.s == out.three_valued.s;
  } else {
    out.agrees = true;
  }
  return out;
}

DecimationFamily known_decimations(int p, int n, int k) {
  if (p % 2 == 0 || !is_prime(p)) throw std::invalid_argument("known_decimations: p must be an odd prime");
  if (n < 1 || k < 1) throw std::invalid_argument("known_decimations: n and k must be positive");
  DecimationFamily out{p, n, k, std::gcd(n, k), std::nullopt, {}};
  if ((n / out.s) % 2 == 0) {
    out.rejection = "n/s = " + std::to_string(n / out.s) + " is even, with s = gcd(n, k) = " + std::to_string(out.s);
    return out;
  }
  const auto q1 = static_cast<std::uint64_t>(checked::ipow(p, n)) - 1;
  const auto p2k = static_cast<std::uint64_t>(checked::ipow(p, 2 * k));
  const auto pk = static_cast<std::uint64_t>(checked::ipow(p, k));
  auto make = [&](std::uint64_t d, std::string form) {
    const auto g = gcd_u64(q1, d);
    return Decimation{d, std::move(form), out.s, g, g == 1};
  };
  out.decimations.push_back(make((p2k + 1) / 2, "(p^2k+1)/2"));
  out.decimations.push_back(make(p2k - pk + 1, "p^2k-p^k+1"));
  return out;
}

ComponentRelationVerdict component_relation_check(FieldPtr field, std::uint64_t d, FieldElement c, unsigned jobs) {
  if (c.index == 0) throw std::invalid_argument("component_relation_check: c must be nonzero");
  const std::uint64_t q1 = field->order() - 1;
  ComponentRelationVerdict out;
  out.d = d;
  out.permutation = gcd_u64(q1, d % q1 == 0 ? q1 : d % q1) == 1;
  out.c = c.index;
  const auto F = power_map(field, d);
  const auto b = field->pow(c, static_cast<std::int64_t>(d % q1));
  out.b = b.index;
  const auto W1 = walsh_fast(component(F, field->one()));
  const auto Wb = walsh_fast(component(F, b));
  out.relation_holds = true;
  for (std::uint32_t a = 0; a < field->order(); ++a) {
    if (Wb[a] != W1[field->div({a}, c).index]) {
      out.relation_holds = false;
      out.witness = a;
      break;
    }
  }
  if (!out.permutation) return out;
  std::vector<char> vanishes(field->order(), 1);
  parallel_for(field->order() - 1, jobs, [&](std::size_t i) {
    vanishes[i + 1] = walsh_fast(component(F, {static_cast<std::uint32_t>(i + 1)}))[0].is_zero();
  });
  out.zero_vanishes = true;
  for (std::uint32_t bb = 1; bb < field->order(); ++bb)
    if (!vanishes[bb]) {
      out.zero_vanishes = false;
      out.zero_witness = bb;
      break;
    }
  return out;
}

}  // namespace plateau
