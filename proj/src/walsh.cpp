#include "plateau/walsh.hpp"

#include <array>
#include <stdexcept>

#include "plateau/parallel.hpp"

namespace plateau {

std::vector<CycInt> digit_dft(std::span<const CycInt> table, const DigitGroup& group, int sign) {
  const int p = group.prime();
  const std::uint32_t v = group.order();
  if (table.size() != v) throw std::invalid_argument("digit_dft: table size does not match the group order");
  std::vector<CycInt> a(table.begin(), table.end());
  std::array<CycInt, CycInt::kMaxPrime> in{}, out{};
  std::uint32_t stride = 1;
  for (int k = 0; k < group.digits(); ++k) {
    const std::uint32_t block = stride * static_cast<std::uint32_t>(p);
    for (std::uint32_t base = 0; base < v; base += block) {
      for (std::uint32_t lo = 0; lo < stride; ++lo) {
        for (int j = 0; j < p; ++j) in[j] = a[base + lo + j * stride];
        for (int u = 0; u < p; ++u) {
          CycInt acc = in[0];
          for (int j = 1; j < p; ++j) acc += in[j].times_root(static_cast<std::int64_t>(sign) * j * u);
          out[u] = acc;
        }
        for (int u = 0; u < p; ++u) a[base + lo + u * stride] = out[u];
      }
    }
    stride = block;
  }
  return a;
}

WalshSpectrum::WalshSpectrum(FieldPtr field, std::vector<CycInt> values)
    : field_(std::move(field)), values_(std::move(values)) {
  if (values_.size() != field_->order()) throw std::invalid_argument("WalshSpectrum: wrong table length");
  const int p = field_->characteristic();
  CycInt total(p);
  for (const auto& w : values_) total += w.norm_sq();
  const auto q = static_cast<std::int64_t>(field_->order());
  if (total.as_rational_integer() != checked::mul(q, q))
    throw std::logic_error("WalshSpectrum: Parseval identity violated (sum of norms " + total.to_string() + ")");
}

std::vector<CycInt> root_table(const PAryFunction& f) {
  std::vector<CycInt> t;
  t.reserve(f.size());
  for (auto v : f.values()) t.push_back(CycInt::root_power(f.prime(), v));
  return t;
}

WalshSpectrum walsh_naive(const PAryFunction& f) {
  const auto& K = *f.field();
  const int p = f.prime();
  const std::uint32_t q = f.size();
  std::vector<CycInt> w;
  w.reserve(q);
  std::vector<std::int64_t> counts(p);
  for (std::uint32_t mu = 0; mu < q; ++mu) {
    std::fill(counts.begin(), counts.end(), 0);
    for (std::uint32_t x = 0; x < q; ++x) {
      const int e = f.at(x) - K.trace(K.mul({mu}, {x}));
      ++counts[(e + p) % p];
    }
    w.push_back(CycInt::from_residue_counts(p, counts));
  }
  return {f.field(), std::move(w)};
}

WalshSpectrum walsh_fast(const PAryFunction& f) {
  const auto& K = *f.field();
  auto transformed = digit_dft(root_table(f), K.additive_group(), -1);
  std::vector<CycInt> w;
  w.reserve(f.size());
  for (std::uint32_t mu = 0; mu < f.size(); ++mu) w.push_back(transformed[K.dual_index({mu})]);
  return {f.field(), std::move(w)};
}

bool inverse_walsh_check(const PAryFunction& f, const WalshSpectrum& spectrum) {
  const auto& K = *f.field();
  std::vector<CycInt> by_dual(f.size(), CycInt(f.prime()));
  for (std::uint32_t mu = 0; mu < f.size(); ++mu) by_dual[K.dual_index({mu})] = spectrum[mu];
  auto back = digit_dft(by_dual, K.additive_group(), +1);
  const auto q = static_cast<std::int64_t>(f.size());
  for (std::uint32_t x = 0; x < f.size(); ++x)
    if (back[x] != CycInt::root_power(f.prime(), f.at(x)) * q) return false;
  return true;
}

std::string to_string(SpectrumKind k) {
  switch (k) {
    case SpectrumKind::Bent: return "Bent";
    case SpectrumKind::SPlateaued: return "SPlateaued";
    case SpectrumKind::NotPlateaued: return "NotPlateaued";
  }
  return "?";
}

std::string to_string(VectorialKind k) {
  switch (k) {
    case VectorialKind::VectorialSPlateaued: return "VectorialSPlateaued";
    case VectorialKind::VectorialPlateaued: return "VectorialPlateaued";
    case VectorialKind::NotPlateaued: return "NotPlateaued";
  }
  return "?";
}

SpectrumClass classify(const WalshSpectrum& spectrum) {
  const auto& K = *spectrum.field();
  const int p = K.characteristic();
  const int n = K.degree();
  SpectrumClass out;
  std::optional<std::int64_t> amplitude;
  std::optional<std::uint32_t> first_support;
  for (std::uint32_t mu = 0; mu < spectrum.size(); ++mu) {
    const CycInt ns = spectrum[mu].norm_sq();
    if (ns.is_zero()) continue;
    ++out.support_size;
    if (!first_support) first_support = mu;
    const auto r = ns.as_rational_integer();
    if (!r || (amplitude && *r != *amplitude)) {
      if (!out.witness) out.witness = mu;
      continue;
    }
    if (!amplitude) amplitude = *r;
  }
  out.amplitude_sq = amplitude.value_or(0);
  if (out.witness) return out;
  const auto e = exact_log(out.amplitude_sq, p);
  if (!e || *e < n || *e > 2 * n) {
    out.witness = first_support;
    return out;
  }
  const int s = *e - n;
  if (out.support_size != static_cast<std::uint32_t>(checked::ipow(p, n - s)))
    throw std::logic_error("classify: support size contradicts Parseval");
  out.s = s;
  out.kind = s == 0 ? SpectrumKind::Bent : SpectrumKind::SPlateaued;
  return out;
}

SpectrumClass classify(const PAryFunction& f) { return classify(walsh_fast(f)); }

VectorialClass classify_vectorial(const VectorialFunction& F, unsigned jobs) {
  const std::uint32_t qm = F.codomain()->order();
  VectorialClass out;
  out.components.resize(qm - 1);
  parallel_for(qm - 1, jobs, [&](std::size_t i) {
    out.components[i] = classify(component(F, {static_cast<std::uint32_t>(i + 1)}));
  });
  for (std::uint32_t b = 1; b < qm; ++b) {
    if (!out.components[b - 1].plateaued()) {
      out.kind = VectorialKind::NotPlateaued;
      out.witness = b;
      return out;
    }
  }
  const int s0 = *out.components[0].s;
  for (std::uint32_t b = 2; b < qm; ++b) {
    if (*out.components[b - 1].s != s0) {
      out.kind = VectorialKind::VectorialPlateaued;
      out.witness = b;
      return out;
    }
  }
  out.kind = VectorialKind::VectorialSPlateaued;
  out.s = s0;
  return out;
}

std::vector<CycInt> delta_transform(const PAryFunction& f) {
  const auto& K = *f.field();
  const int p = f.prime();
  std::vector<CycInt> out;
  out.reserve(f.size());
  std::vector<std::int64_t> counts(p);
  for (std::uint32_t a = 0; a < f.size(); ++a) {
    std::fill(counts.begin(), counts.end(), 0);
    for (std::uint32_t x = 0; x < f.size(); ++x) ++counts[(f(K.add({x}, {a})) - f.at(x) + p) % p];
    out.push_back(CycInt::from_residue_counts(p, counts));
  }
  return out;
}

std::vector<CycInt> delta_transform_via_spectrum(const WalshSpectrum& spectrum) {
  const auto& K = *spectrum.field();
  std::vector<CycInt> by_dual(spectrum.size(), CycInt(K.characteristic()));
  for (std::uint32_t mu = 0; mu < spectrum.size(); ++mu) by_dual[K.dual_index({mu})] = spectrum[mu].norm_sq();
  auto t = digit_dft(by_dual, K.additive_group(), +1);
  for (auto& z : t) z = z.exact_div(static_cast<std::int64_t>(spectrum.size()));
  return t;
}

std::vector<CycInt> convolve(std::span<const CycInt> F, std::span<const CycInt> G, const DigitGroup& group) {
  const std::uint32_t v = group.order();
  if (F.size() != v || G.size() != v) throw std::invalid_argument("convolve: tables must cover the group");
  std::vector<CycInt> out(v, CycInt(group.prime()));
  for (std::uint32_t a = 0; a < v; ++a)
    for (std::uint32_t x = 0; x < v; ++x) out[a] += F[x] * G[group.sub(x, a)];
  return out;
}

}  // namespace plateau
