#include <doctest.h>

#include "plateau/walsh.hpp"

using namespace plateau;

namespace {

std::int64_t pw(int p, int e) { return checked::ipow(p, e); }

}  // namespace

TEST_SUITE("walsh") {
  TEST_CASE("zero and linear functions") {
    for (auto [p, n] : {std::pair{2, 3}, {3, 2}, {5, 2}}) {
      auto K = GaloisField::make(p, n);
      const auto W0 = walsh_naive(constant_function(K, 0));
      CHECK(W0[0] == CycInt(p, pw(p, n)));
      for (std::uint32_t mu = 1; mu < K->order(); ++mu) CHECK(W0[mu].is_zero());
      const auto c0 = classify(W0);
      CHECK(c0.kind == SpectrumKind::SPlateaued);
      CHECK(c0.s == n);
      CHECK(c0.support_size == 1);
      const FieldElement c{K->order() - 1};
      const auto Wl = walsh_fast(linear_function(K, c));
      for (std::uint32_t mu = 0; mu < K->order(); ++mu) CHECK(Wl[mu] == CycInt(p, mu == c.index ? pw(p, n) : 0));
    }
  }

  TEST_CASE("oracle classifications") {
    auto F9 = GaloisField::make(3, 2), F27 = GaloisField::make(3, 3);
    const auto bent = classify(trace_power(F9, 2));
    CHECK(bent.kind == SpectrumKind::Bent);
    CHECK(bent.s == 0);
    CHECK(bent.amplitude_sq == 9);
    CHECK(bent.support_size == 9);
    const auto W = walsh_naive(trace_power(F9, 2));
    for (const auto& w : W.values()) CHECK(w.norm_sq() == CycInt(3, 9));

    const auto c5 = classify(trace_power(F27, 5));
    CHECK(c5.kind == SpectrumKind::SPlateaued);
    CHECK(c5.s == 1);
    CHECK(c5.amplitude_sq == 81);
    CHECK(c5.support_size == 9);
    CHECK(classify(trace_power(F27, 7)).s == 1);
    const auto c2 = classify(trace_power(F27, 2));
    CHECK(c2.kind == SpectrumKind::Bent);
    CHECK(c2.support_size == 27);
  }

  TEST_CASE("non-plateaued functions carry a witness") {
    auto K = GaloisField::make(3, 2);
    const auto f = trace_polynomial(K, {{K->one(), 3}, {K->one(), 1}, {FieldElement{4}, 2}});
    PAryFunction g(K, {0, 0, 0, 0, 0, 0, 0, 0, 1});
    const auto cg = classify(g);
    CHECK(cg.kind == SpectrumKind::NotPlateaued);
    CHECK(cg.witness.has_value());
    CHECK(classify(f) == classify(walsh_naive(f)));
  }

  TEST_CASE("vectorial classification") {
    auto F27 = GaloisField::make(3, 3), F9 = GaloisField::make(3, 2);
    const auto id = classify_vectorial(power_map(F27, 1));
    CHECK(id.kind == VectorialKind::VectorialSPlateaued);
    CHECK(id.s == 3);
    const auto x5 = classify_vectorial(power_map(F27, 5), 4);
    CHECK(x5.kind == VectorialKind::VectorialSPlateaued);
    CHECK(x5.s == 1);
    CHECK(x5.components.size() == 26);
    const auto planar = classify_vectorial(power_map(F9, 2));
    CHECK(planar.kind == VectorialKind::VectorialSPlateaued);
    CHECK(planar.s == 0);
  }

  TEST_CASE("delta transform") {
    auto F9 = GaloisField::make(3, 2);
    const auto bent = delta_transform(trace_power(F9, 2));
    CHECK(bent[0] == CycInt(3, 9));
    for (std::uint32_t a = 1; a < 9; ++a) CHECK(bent[a].is_zero());
    const auto lin = delta_transform(linear_function(F9, {5}));
    for (const auto& d : lin) CHECK(d.norm_sq() == CycInt(3, 81));
    auto F27 = GaloisField::make(3, 3);
    const auto f = trace_power(F27, 5);
    CHECK(delta_transform(f) == delta_transform_via_spectrum(walsh_fast(f)));
  }

  TEST_CASE("convolution") {
    const DigitGroup G(3, 2);
    std::vector<CycInt> delta0(9, CycInt(3)), ones(9, CycInt(3, 1)), t(9, CycInt(3));
    delta0[0] = CycInt(3, 1);
    for (int i = 0; i < 9; ++i) t[i] = CycInt::root_power(3, i * i);
    CHECK(convolve(t, delta0, G) == t);
    CHECK(convolve(ones, ones, G) == std::vector<CycInt>(9, CycInt(3, 9)));
  }

  TEST_CASE("inverse transform") {
    auto K = GaloisField::make(5, 2);
    const auto f = trace_polynomial(K, {{FieldElement{3}, 4}, {FieldElement{7}, 2}});
    CHECK(inverse_walsh_check(f, walsh_fast(f)));
  }

  TEST_CASE("Parseval violation is caught") {
    auto K = GaloisField::make(3, 1);
    std::vector<CycInt> bogus(3, CycInt(3, 1));
    CHECK_THROWS_AS(WalshSpectrum(K, bogus), std::logic_error);
  }
}
