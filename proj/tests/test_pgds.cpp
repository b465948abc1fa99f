#include <doctest.h>

#include "plateau/pgds.hpp"

using namespace plateau;

TEST_SUITE("pgds") {
  TEST_CASE("expected graph parameters") {
    CHECK(expected_graph_params(3, 3, 3, 1) == PgdsParams{729, 27, 24, 105});
    CHECK(expected_graph_params(3, 2, 1, 0) == PgdsParams{27, 9, 24, 33});
    for (int s = 0; s <= 3; ++s) {
      const auto q = expected_graph_params(3, 3, 1, s);
      CHECK(q.beta - q.alpha == checked::ipow(3, 3 + s));
      CHECK(q.v == 81);
      CHECK(q.consistent());
    }
    CHECK_THROWS_AS(expected_graph_params(3, 2, 3, 0), std::domain_error);
  }

  TEST_CASE("delta table of a subgroup and of a relative difference set") {
    auto F9 = GaloisField::make(3, 2);
    const auto G = AbelianGroup::of_field(F9);
    const ElementSet H{0, 1, 2};
    const auto dt = delta_table(H, G);
    for (std::uint32_t g = 0; g < 9; ++g) CHECK(dt[g] == (g < 3 ? 3 : 0));
    const auto v = verify_pgds_delta(H, G);
    CHECK(v.is_pgds);
    CHECK(v.params == PgdsParams{9, 3, 0, 9});
    const auto c = verify_pgds_character(H, G);
    CHECK(c.is_pgds);
    CHECK(c.params == v.params);

    auto F3 = GaloisField::make(3, 1);
    const auto F = power_map(F3, 2);
    const auto P = AbelianGroup::for_graph(F);
    const auto rds = delta_table(graph(F).members, P);
    for (std::uint32_t g = 0; g < 9; ++g) {
      const bool forbidden = g % 3 == 0;
      CHECK(rds[g] == (g == 0 ? 3 : forbidden ? 0 : 1));
    }
  }

  TEST_CASE("graph of x^5 over F27") {
    auto K = GaloisField::make(3, 3);
    const auto F = power_map(K, 5);
    const auto G = AbelianGroup::for_graph(F);
    const auto S = graph(F).members;
    const auto d = verify_pgds_delta(S, G, 4);
    CHECK(d.is_pgds);
    CHECK(d.params == PgdsParams{729, 27, 24, 105});
    const auto c = verify_pgds_character(S, G);
    CHECK(c.is_pgds);
    CHECK(c.params == d.params);
    const auto nf = verify_nf_characterization(F, 4);
    CHECK(nf.two_valued);
    CHECK(nf.alpha == 24);
    CHECK(nf.beta == 105);
    CHECK(nf.agrees);
  }

  TEST_CASE("N_F counts") {
    auto K = GaloisField::make(3, 2);
    const auto lin = power_map(K, 3);
    for (std::uint32_t x = 0; x < 9; ++x) {
      const auto col = n_f_column(lin, {x});
      CHECK(col[0] == 81);
      std::int64_t total = 0;
      for (std::uint32_t c = 0; c < 9; ++c) {
        total += col[c];
        CHECK(col[c] == n_f_count(lin, {c}, {x}));
      }
      CHECK(total == 81);
    }
    const auto nf = verify_nf_characterization(lin);
    CHECK(nf.two_valued);
    CHECK(nf.beta == 81);
    CHECK(nf.alpha == 0);
    auto F27 = GaloisField::make(3, 3);
    const auto cube = verify_nf_characterization(power_map(F27, 3));
    CHECK(cube.agrees);
  }

  TEST_CASE("character sums, fast and direct") {
    auto K = GaloisField::make(3, 2);
    const auto G = AbelianGroup::product(K, GaloisField::make(3, 1));
    const ElementSet S{1, 5, 7, 11, 20, 26};
    const auto fast = G.character_sums(S);
    for (std::uint32_t chi = 0; chi < G.order(); ++chi) CHECK(fast[chi] == G.character_sum(chi, S));
    CHECK(G.descriptor() == "3 2 1");
  }

  TEST_CASE("group ring lemma") {
    auto K = GaloisField::make(3, 3);
    const auto G = AbelianGroup::of_field(K);
    const auto D1 = level_sets(trace_power(K, 5))[1];
    const auto r = group_ring_lemma_check(D1, G);
    CHECK(r.holds);
    CHECK(r.expected == 243);
    const auto e = group_ring_lemma_check({}, G);
    CHECK(e.holds);
    CHECK(e.total.is_zero());
  }

  TEST_CASE("size preconditions") {
    auto K = GaloisField::make(3, 2);
    const auto G = AbelianGroup::of_field(K);
    CHECK_THROWS_AS(verify_pgds_delta({0, 1}, G), std::invalid_argument);
    CHECK_THROWS_AS(verify_pgds_delta({0, 1, 2, 3, 4, 5, 6, 7, 8}, G), std::invalid_argument);
  }

  TEST_CASE("partition theorem") {
    auto F27 = GaloisField::make(3, 3);
    const auto r = verify_partition_theorem(F27, 5);
    CHECK(r.family_k == 1);
    CHECK(r.family_s == 1);
    CHECK(r.n_over_s_odd);
    CHECK(r.all_pgds);
    CHECK_FALSE(r.stated_general_mismatch_flag);
    for (const auto& s : r.sets) {
      CHECK(s.delta.params == PgdsParams{27, 9, 24, 33});
      CHECK(s.methods_agree);
      CHECK(s.matches_stated);
    }
    CHECK(r.excluded_tuples_absent);
    CHECK(r.tuples_within_table);
    CHECK(r.conjugate_identity);
    CHECK(r.d0_identity);

    const auto lin = verify_partition_theorem(F27, 1);
    for (const auto& s : lin.sets) CHECK(s.delta.params == PgdsParams{27, 9, 0, 81});

    auto F243 = GaloisField::make(3, 5);
    const auto bad = verify_partition_theorem(F243, 7, 4);
    CHECK_FALSE(bad.all_pgds);
    for (const auto& s : bad.sets) CHECK_FALSE(s.delta.is_pgds);

    const auto good = verify_partition_theorem(F243, 5, 4);
    CHECK(good.all_pgds);
    for (const auto& s : good.sets) CHECK(s.delta.params == PgdsParams{243, 81, 2160, 2241});
  }

  TEST_CASE("partition converse on real level sets") {
    auto F27 = GaloisField::make(3, 3);
    const auto sets = level_sets(trace_power(F27, 5));
    const auto r = converse_partition_check(F27, sets, 9);
    CHECK(r.partition_ok);
    CHECK(r.lambda_power_of_3);
    CHECK(r.s == 2);
    CHECK(r.sets_are_pgds);
    CHECK(r.cardinality_case);
    CHECK_FALSE(r.conclusion_holds);
    const auto not_power = converse_partition_check(F27, sets, 6);
    CHECK_FALSE(not_power.lambda_power_of_3);
    const auto broken = converse_partition_check(F27, {sets[0], sets[1]}, 9);
    CHECK_FALSE(broken.partition_ok);
  }
}
