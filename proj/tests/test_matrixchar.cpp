#include <doctest.h>

#include <cstdlib>

#include "plateau/matrixchar.hpp"

using namespace plateau;

TEST_SUITE("matrixchar") {
  TEST_CASE("dense matrix helpers") {
    IntMatrix a(2, 2, 0), b(2, 3, 1);
    a(0, 0) = 1;
    a(0, 1) = 2;
    a(1, 1) = 3;
    const auto c = a * b;
    CHECK(c(0, 2) == 3);
    CHECK(c(1, 0) == 3);
    const auto k = kronecker(a, b);
    CHECK(k.rows() == 4);
    CHECK(k.cols() == 6);
    CHECK(k(1, 4) == 2);
    CHECK(k(3, 4) == 3);
    CHECK(k(0, 1) == 1);
    CHECK(transpose(b)(2, 1) == 1);
  }

  TEST_CASE("M matrix") {
    auto F9 = GaloisField::make(3, 2);
    const auto M0 = build_m(constant_function(F9, 0));
    for (std::size_t i = 0; i < 9; ++i)
      for (std::size_t j = 0; j < 9; ++j) CHECK(M0(i, j) == CycInt(3, 1));
    const auto M = build_m(trace_power(F9, 2));
    for (std::size_t i = 0; i < 9; ++i)
      for (std::size_t j = 0; j < 9; ++j) CHECK(M(i, j) == M(j, i));
  }

  TEST_CASE("matrix budget") {
    CHECK(matrix_budget() == 243);
    setenv("PLATEAU_LAB_BUDGET", "9", 1);
    CHECK(matrix_budget() == 9);
    CHECK_THROWS_AS(build_m(trace_power(GaloisField::make(3, 3), 5)), std::length_error);
    setenv("PLATEAU_LAB_BUDGET", "junk", 1);
    CHECK(matrix_budget() == 243);
    unsetenv("PLATEAU_LAB_BUDGET");
  }

  TEST_CASE("M M* M factor") {
    auto F9 = GaloisField::make(3, 2), F27 = GaloisField::make(3, 3);
    const auto zero = verify_mmm(constant_function(F9, 0));
    CHECK(zero.factor == CycInt(3, 81));
    CHECK(zero.s == 2);
    const auto bent = verify_mmm(trace_power(F9, 2));
    CHECK(bent.factor == CycInt(3, 9));
    CHECK(bent.s == 0);
    CHECK(bent.agrees);
    const auto t5 = verify_mmm(trace_power(F27, 5));
    CHECK(t5.s == 1);
    CHECK(t5.agrees);
    const auto odd = verify_mmm(trace_polynomial(F9, {{F9->one(), 3}, {F9->one(), 1}}));
    CHECK(odd.agrees);
    PAryFunction spike(F9, {0, 0, 0, 0, 0, 0, 0, 0, 1});
    const auto sp = verify_mmm(spike);
    CHECK_FALSE(sp.s.has_value());
    CHECK(sp.agrees);
  }

  TEST_CASE("second derivative sums") {
    auto F9 = GaloisField::make(3, 2), F27 = GaloisField::make(3, 3);
    CHECK(second_derivative_sum(constant_function(F9, 2), {3}) == CycInt(3, 81));
    CHECK(second_derivative_sum(linear_function(F9, {4}), {7}) == CycInt(3, 81));
    const auto v = verify_second_derivative_sums(trace_power(F27, 5), 4);
    CHECK(v.constant);
    CHECK(v.value == CycInt(3, 81));
    CHECK(v.s == 1);
    CHECK(v.agrees);
  }

  TEST_CASE("delta energy") {
    auto F9 = GaloisField::make(3, 2), F27 = GaloisField::make(3, 3);
    CHECK(delta_energy(constant_function(F9, 0)) == CycInt(3, 729));
    CHECK(delta_energy(trace_power(F9, 2)) == CycInt(3, 81));
    const auto e = verify_delta_energy(trace_power(F27, 5));
    CHECK(e.energy == CycInt(3, 2187));
    CHECK(e.s_from_energy == 1);
    CHECK(e.forward_holds);
    CHECK_FALSE(e.converse_counterexample);
  }

  TEST_CASE("direct sums and the Kronecker identity") {
    auto F3 = GaloisField::make(3, 1), F9 = GaloisField::make(3, 2), F27 = GaloisField::make(3, 3);
    const auto zero = direct_sum(constant_function(F9, 0), constant_function(F3, 0));
    CHECK(constant_value(zero) == 0);
    CHECK(classify(zero).s == 3);
    const auto bent = direct_sum(trace_power(F9, 2), trace_power(F3, 2));
    const auto cb = classify(bent);
    CHECK(cb.kind == SpectrumKind::Bent);
    CHECK(cb.amplitude_sq == 27);
    const auto mixed = direct_sum(trace_power(F9, 2), trace_power(F27, 5));
    CHECK(mixed.field()->degree() == 5);
    CHECK(classify(mixed).s == 1);

    const auto k0 = kronecker_verify(constant_function(F3, 0), constant_function(F3, 0));
    CHECK(k0.factor == 81);
    CHECK(k0.identity_holds);
    const auto kb = kronecker_verify(trace_power(F9, 2), trace_power(F3, 2));
    CHECK(kb.factor == 27);
    CHECK(kb.identity_holds);
    CHECK(kb.matches_direct_sum);
    PAryFunction spike(F9, {0, 0, 0, 0, 0, 0, 0, 0, 1});
    const auto ks = kronecker_verify(spike, trace_power(F3, 2));
    CHECK(ks.skipped);
    CHECK_FALSE(ks.diagnosis.empty());
  }

  TEST_CASE("linear structures") {
    auto F3 = GaloisField::make(3, 1), F9 = GaloisField::make(3, 2);
    CHECK(linear_structures(linear_function(F9, {2})).dimension == 2);
    CHECK(linear_structures(trace_power(F9, 2)).members == std::vector<std::uint32_t>{0});
    const auto h = direct_sum(trace_power(F9, 2), constant_function(F3, 0));
    const auto lam = linear_structures(h);
    CHECK(lam.members == std::vector<std::uint32_t>{0, 1, 2});
    CHECK(lam.dimension == 1);
    CHECK(lam.constants_additive);
  }

  TEST_CASE("partially bent functions") {
    auto F9 = GaloisField::make(3, 2), F27 = GaloisField::make(3, 3);
    const auto b = is_partially_bent(trace_power(F9, 2));
    CHECK(b.partially_bent);
    CHECK(b.lambda_dimension == 0);
    CHECK(b.agrees);
    const auto t5 = is_partially_bent(trace_power(F27, 5));
    CHECK_FALSE(t5.partially_bent);
    CHECK(t5.witness.has_value());
    for (int n = 2; n <= 5; ++n) {
      auto K = GaloisField::make(3, n);
      std::uint64_t pj = 1;
      for (int j = 0; j < n; ++j, pj *= 3) {
        const auto v = is_partially_bent(trace_power(K, pj + 1));
        CHECK(v.partially_bent);
        CHECK(v.agrees);
      }
    }
  }

  TEST_CASE("T_a lemma") {
    auto F3 = GaloisField::make(3, 1), F9 = GaloisField::make(3, 2), F27 = GaloisField::make(3, 3);
    const auto lin = t_a_lemma_check(linear_function(F9, {5}));
    CHECK(lin.holds_on_lambda);
    CHECK(lin.lambda_size == 9);
    const auto t5 = t_a_lemma_check(trace_power(F27, 5));
    CHECK(t5.holds_on_lambda);
    CHECK(t5.lambda_size == 1);
    const auto h = t_a_lemma_check(direct_sum(trace_power(F9, 2), constant_function(F3, 0)));
    CHECK(h.holds_on_lambda);
    CHECK(h.lambda_size == 3);
    CHECK(h.outside_equal == 0);
    CHECK_THROWS_AS(t_a_lemma_check(constant_function(F9, 1)), std::invalid_argument);
  }

  TEST_CASE("design factorization") {
    auto F3 = GaloisField::make(3, 1), F9 = GaloisField::make(3, 2);
    const auto z = design_factorization_check(constant_function(F3, 0));
    CHECK(z.points == 9);
    CHECK(z.multiplicity == 3);
    CHECK(z.constant_multiplicity);
    CHECK(z.full_identity);
    CHECK(z.reduced_identity);
    const auto lin = design_factorization_check(linear_function(F9, {1}));
    CHECK(lin.multiplicity == 9);
    CHECK(lin.full_identity);
    CHECK(lin.reduced_identity);

    const auto d = design_factorization_check(direct_sum(trace_power(F9, 2), constant_function(F3, 0)));
    CHECK(d.s == 1);
    CHECK(d.lambda_dimension == 1);
    CHECK(d.points == 81);
    CHECK(d.distinct_blocks == 27);
    CHECK(d.multiplicity == 3);
    CHECK(d.full_identity);
    CHECK(d.reduced_identity);
    CHECK(d.reduced_alpha == 72);
    CHECK(d.reduced_beta == 99);
    CHECK(d.replication == 9);
    CHECK(d.block_size == 27);
    CHECK(d.corollary_params_match);
    CHECK_THROWS_AS(design_factorization_check(trace_power(F9, 2)), std::invalid_argument);
  }
}
