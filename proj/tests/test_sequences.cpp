#include <doctest.h>

#include "plateau/sequences.hpp"

using namespace plateau;

TEST_SUITE("sequences") {
  TEST_CASE("m-sequences") {
    const auto u3 = m_sequence(GaloisField::make(3, 1));
    CHECK(u3.values == std::vector<std::uint8_t>{1, 2});
    auto K = GaloisField::make(3, 3);
    const auto u = m_sequence(K);
    CHECK(u.period() == 26);
    CHECK(value_counts(u) == std::vector<std::uint32_t>{8, 9, 9});
    CHECK(decimate(u, 1) == u.values);
    CHECK(decimate(u, 3) == u.values);
    const auto v5 = decimate(u, 5);
    FieldElement x = K->one();
    for (std::uint32_t t = 0; t < 26; ++t, x = K->mul(x, u.sigma)) CHECK(v5[t] == K->trace(K->pow(x, 5)));
  }

  TEST_CASE("cross-correlation") {
    auto K = GaloisField::make(3, 3);
    const auto u = m_sequence(K);
    const auto auto_corr = cross_correlation(u, u.values);
    CHECK(auto_corr.values[0] == CycInt(3, 26));
    for (std::uint32_t tau = 1; tau < 26; ++tau) CHECK(auto_corr.values[tau] == CycInt(3, -1));
    const auto c5 = cross_correlation(u, decimate(u, 5), 4);
    for (const auto& v : c5.values) {
      const auto r = v.as_rational_integer();
      REQUIRE(r.has_value());
      CHECK((*r == -1 || *r == 8 || *r == -10));
    }
  }

  TEST_CASE("bridge to the Walsh spectrum") {
    for (auto [p, n, d] : {std::tuple{3, 3, 5ULL}, {3, 3, 1ULL}, {3, 3, 2ULL}, {3, 3, 7ULL}, {2, 3, 3ULL}, {5, 2, 7ULL}}) {
      const auto b = walsh_bridge_check(GaloisField::make(p, n), d);
      CHECK(b.holds);
      CHECK(b.sum_matches);
    }
    const auto complex = walsh_bridge_check(GaloisField::make(3, 3), 2);
    CHECK_FALSE(complex.unconjugated_holds);
    CHECK(walsh_bridge_check(GaloisField::make(3, 3), 5).unconjugated_holds);
  }

  TEST_CASE("three-valued classification") {
    auto F27 = GaloisField::make(3, 3), F243 = GaloisField::make(3, 5);
    const auto c5 = cross_plateaued_check(F27, 5, 4);
    CHECK(c5.three_valued.three_valued);
    CHECK(c5.three_valued.s == 1);
    CHECK(c5.three_valued.amplitude == 9);
    CHECK(c5.agrees);
    const auto lin = cross_plateaued_check(F27, 1);
    CHECK_FALSE(lin.three_valued.three_valued);
    CHECK(lin.three_valued.distinct_values.size() == 2);
    const auto c7 = cross_plateaued_check(F243, 7, 8);
    CHECK(c7.three_valued.three_valued);
    CHECK(c7.three_valued.amplitude == 27);
    CHECK(c7.vectorial.kind == VectorialKind::VectorialSPlateaued);
    CHECK(c7.vectorial.s == 1);
  }

  TEST_CASE("known decimations") {
    const auto a = known_decimations(3, 3, 1);
    CHECK_FALSE(a.rejection.has_value());
    REQUIRE(a.decimations.size() == 2);
    CHECK(a.decimations[0].d == 5);
    CHECK(a.decimations[1].d == 7);
    for (const auto& d : a.decimations) {
      CHECK(d.coprime);
      CHECK(d.s == 1);
    }
    const auto b = known_decimations(3, 5, 1);
    for (const auto& d : b.decimations) CHECK(d.gcd == 1);
    const auto c = known_decimations(3, 4, 2);
    CHECK(c.rejection.has_value());
    CHECK(c.decimations.empty());
    CHECK_THROWS(known_decimations(2, 3, 1));
  }

  TEST_CASE("component relation") {
    auto K = GaloisField::make(3, 3);
    for (std::uint32_t c = 1; c < 27; c += 5) {
      const auto r = component_relation_check(K, 5, {c});
      CHECK(r.permutation);
      CHECK(r.relation_holds);
      CHECK(r.zero_vanishes);
    }
    const auto sq = component_relation_check(K, 2, K->primitive());
    CHECK_FALSE(sq.permutation);
    CHECK(sq.relation_holds);
  }
}
