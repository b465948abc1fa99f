#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "plateau/cyclotomic.hpp"
#include "plateau/functions.hpp"
#include "plateau/matrix.hpp"
#include "plateau/pgds.hpp"
#include "plateau/walsh.hpp"

namespace plateau {

using CycMatrix = DenseMatrix<CycInt>;
using IntMatrix = DenseMatrix<std::int64_t>;

/// Largest dense matrix dimension; PLATEAU_LAB_BUDGET overrides the default 243.
std::size_t matrix_budget();

/// m_{x,y} = zeta^{f(x+y)}. Throws std::length_error above the budget.
CycMatrix build_m(const PAryFunction& f);

struct MmmVerdict {
  /// M M* M = factor * M, when proportional.
  std::optional<CycInt> factor;
  std::optional<int> s;
  std::optional<std::pair<std::uint32_t, std::uint32_t>> witness;
  SpectrumClass spectral;
  bool agrees = false;
};

MmmVerdict verify_mmm(const PAryFunction& f);

/// sum_{a,b} zeta^{D_a D_b f(u)}.
CycInt second_derivative_sum(const PAryFunction& f, FieldElement u);

struct SecondDerivativeVerdict {
  bool constant = false;
  std::optional<CycInt> value;
  std::optional<int> s;
  std::optional<std::uint32_t> witness;  // first u where the sum changes
  SpectrumClass spectral;
  bool agrees = false;
};

SecondDerivativeVerdict verify_second_derivative_sums(const PAryFunction& f, unsigned jobs = 1);

/// sum_a |Delta_f(a)|^2.
CycInt delta_energy(const PAryFunction& f);

struct EnergyVerdict {
  CycInt energy;
  /// s' with energy = p^{2n+s'}, 0 <= s' <= n.
  std::optional<int> s_from_energy;
  SpectrumClass spectral;
  /// plateaued with s implies energy = p^{2n+s}.
  bool forward_holds = false;
  /// Energy has the plateaued form but the spectrum is not s'-plateaued.
  bool converse_counterexample = false;
};

EnergyVerdict verify_delta_energy(const PAryFunction& f);

/// h(x) = f(w) + g(u) where x has coordinates (u | w), u the first m digits.
PAryFunction direct_sum(const PAryFunction& f, const PAryFunction& g);

struct KroneckerVerdict {
  bool skipped = false;
  std::string diagnosis;
  std::optional<int> s1;
  std::optional<int> s2;
  std::int64_t factor = 0;  // p^{n+m+s1+s2}
  bool identity_holds = false;
  /// P equals the matrix of direct_sum(f, g).
  bool matches_direct_sum = false;
  std::optional<std::pair<std::uint32_t, std::uint32_t>> witness;
};

KroneckerVerdict kronecker_verify(const PAryFunction& f, const PAryFunction& g);

struct LinearStructureSpace {
  std::vector<std::uint32_t> members;
  std::vector<int> constants;  // D_a f for each member
  int dimension = 0;
  /// c_{a+b} = c_a + c_b on the space.
  bool constants_additive = false;
};

/// {a : D_a f constant}; throws std::logic_error if not closed under addition.
LinearStructureSpace linear_structures(const PAryFunction& f);

struct PartiallyBentVerdict {
  bool partially_bent = false;
  std::optional<std::uint32_t> witness;  // a with D_a f neither balanced nor constant
  int lambda_dimension = 0;
  SpectrumClass spectral;
  bool agrees = false;  // spectral s equals dim Lambda
};

PartiallyBentVerdict is_partially_bent(const PAryFunction& f);

struct TaLemmaVerdict {
  bool holds_on_lambda = false;
  std::size_t lambda_size = 0;
  std::size_t outside_total = 0;
  std::size_t outside_equal = 0;  // a outside Lambda with T_a = G_f anyway
  std::optional<std::uint32_t> witness;
};

/// Requires f(0) = 0 (std::invalid_argument otherwise).
TaLemmaVerdict t_a_lemma_check(const PAryFunction& f);

struct DesignVerdict {
  int s = 0;
  int lambda_dimension = 0;
  std::size_t points = 0;
  std::size_t blocks = 0;
  std::size_t distinct_blocks = 0;
  bool constant_multiplicity = false;
  std::size_t multiplicity = 0;
  PgdsParams graph_params;
  /// A A^t A = (beta - alpha) A + alpha J for the full development.
  bool full_identity = false;
  /// p^m N N^t N = (beta - alpha) N + alpha J for the reduced incidence matrix.
  bool reduced_identity = false;
  std::optional<std::int64_t> reduced_alpha;
  std::optional<std::int64_t> reduced_beta;
  std::optional<std::int64_t> replication;  // constant row sum of N
  std::optional<std::int64_t> block_size;   // constant column sum of N
  /// Compared with (v, b, k, r, alpha, beta) of the partially bent design when dim Lambda = s.
  bool corollary_params_match = false;
  std::string diagnosis;
  IntMatrix reduced;
  std::vector<std::vector<std::uint32_t>> block_list;  // distinct blocks, sorted members
};

/// Development design of the graph of f; see DesignVerdict.
DesignVerdict design_factorization_check(const PAryFunction& f);

}  // namespace plateau
