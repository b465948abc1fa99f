#include "plateau/matrixchar.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>

#include "plateau/parallel.hpp"

namespace plateau {

namespace {

constexpr std::size_t kDefaultBudget = 243;
constexpr std::size_t kDesignPointBudget = 729;

std::int64_t ipow(int p, int e) { return checked::ipow(p, e); }

}  // namespace

std::size_t matrix_budget() {
  if (const char* env = std::getenv("PLATEAU_LAB_BUDGET")) {
    char* end = nullptr;
    const auto v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultBudget;
}

CycMatrix build_m(const PAryFunction& f) {
  const std::uint32_t q = f.size();
  if (q > matrix_budget())
    throw std::length_error("build_m: dimension " + std::to_string(q) + " exceeds the matrix budget " +
                            std::to_string(matrix_budget()));
  const auto& K = *f.field();
  CycMatrix m(q, q, CycInt(f.prime()));
  for (std::uint32_t x = 0; x < q; ++x)
    for (std::uint32_t y = 0; y < q; ++y) m(x, y) = CycInt::root_power(f.prime(), f(K.add({x}, {y})));
  return m;
}

namespace {

// Tests A == lambda * B for matrices whose B entries are roots of unity;
// lambda is read off entry (0, 0).
std::optional<CycInt> proportionality(const CycMatrix& A, const CycMatrix& B,
                                      std::optional<std::pair<std::uint32_t, std::uint32_t>>& witness) {
  const CycInt lambda = A(0, 0) * B(0, 0).conj();
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j)
      if (A(i, j) != lambda * B(i, j)) {
        witness = std::make_pair(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));
        return std::nullopt;
      }
  return lambda;
}

}  // namespace

MmmVerdict verify_mmm(const PAryFunction& f) {
  MmmVerdict out;
  const CycMatrix M = build_m(f);
  const CycMatrix MMM = (M * adjoint(M)) * M;
  out.factor = proportionality(MMM, M, out.witness);
  const int n = f.field()->degree();
  if (out.factor) {
    if (const auto r = out.factor->as_rational_integer()) {
      if (const auto e = exact_log(*r, f.prime()); e && *e >= n && *e <= 2 * n) out.s = *e - n;
    }
  }
  out.spectral = classify(f);
  out.agrees = out.spectral.s == out.s;
  return out;
}

namespace {

CycInt second_derivative_sum_impl(const PAryFunction& f, std::uint32_t u) {
  const auto& K = *f.field();
  const int p = f.prime();
  const std::uint32_t q = f.size();
  std::vector<std::int64_t> counts(p, 0);
  const int fu = f.at(u);
  for (std::uint32_t a = 0; a < q; ++a) {
    const std::uint32_t ua = K.add({u}, {a}).index;
    const int base = fu - f.at(ua);
    for (std::uint32_t b = 0; b < q; ++b) {
      const int e = f.at(K.add({ua}, {b}).index) + base - f.at(K.add({u}, {b}).index);
      ++counts[((e % p) + p) % p];
    }
  }
  return CycInt::from_residue_counts(p, counts);
}

}  // namespace

CycInt second_derivative_sum(const PAryFunction& f, FieldElement u) { return second_derivative_sum_impl(f, u.index); }

SecondDerivativeVerdict verify_second_derivative_sums(const PAryFunction& f, unsigned jobs) {
  SecondDerivativeVerdict out;
  std::vector<CycInt> sums(f.size());
  parallel_for(f.size(), jobs, [&](std::size_t u) { sums[u] = second_derivative_sum_impl(f, static_cast<std::uint32_t>(u)); });
  out.constant = true;
  for (std::uint32_t u = 1; u < f.size(); ++u)
    if (sums[u] != sums[0]) {
      out.constant = false;
      out.witness = u;
      break;
    }
  const int n = f.field()->degree();
  if (out.constant) {
    out.value = sums[0];
    if (const auto r = sums[0].as_rational_integer()) {
      if (const auto e = exact_log(*r, f.prime()); e && *e >= n && *e <= 2 * n) out.s = *e - n;
    }
  }
  out.spectral = classify(f);
  out.agrees = out.spectral.s == out.s && out.constant == out.spectral.plateaued();
  return out;
}

CycInt delta_energy(const PAryFunction& f) {
  CycInt total(f.prime());
  for (const auto& d : delta_transform(f)) total += d.norm_sq();
  return total;
}

EnergyVerdict verify_delta_energy(const PAryFunction& f) {
  EnergyVerdict out;
  out.energy = delta_energy(f);
  const int n = f.field()->degree();
  if (const auto r = out.energy.as_rational_integer()) {
    if (const auto e = exact_log(*r, f.prime()); e && *e >= 2 * n && *e <= 3 * n) out.s_from_energy = *e - 2 * n;
  }
  out.spectral = classify(f);
  if (out.spectral.plateaued()) {
    out.forward_holds = out.s_from_energy == out.spectral.s;
  } else {
    out.forward_holds = true;
  }
  out.converse_counterexample = out.s_from_energy && out.spectral.s != out.s_from_energy;
  return out;
}

PAryFunction direct_sum(const PAryFunction& f, const PAryFunction& g) {
  const int p = f.prime();
  if (g.prime() != p) throw std::invalid_argument("direct_sum: characteristics differ");
  const int n = f.field()->degree(), m = g.field()->degree();
  auto field = GaloisField::make(p, n + m);
  const std::uint32_t qm = g.size();
  std::vector<std::uint8_t> h(field->order());
  for (std::uint32_t x = 0; x < field->order(); ++x) h[x] = static_cast<std::uint8_t>((f.at(x / qm) + g.at(x % qm)) % p);
  return {field, std::move(h)};
}

KroneckerVerdict kronecker_verify(const PAryFunction& f, const PAryFunction& g) {
  KroneckerVerdict out;
  if (f.prime() != g.prime()) throw std::invalid_argument("kronecker_verify: characteristics differ");
  const auto cf = classify(f), cg = classify(g);
  out.s1 = cf.s;
  out.s2 = cg.s;
  if (!cf.plateaued() || !cg.plateaued()) {
    out.skipped = true;
    out.diagnosis = std::string(!cf.plateaued() ? "f" : "g") + " is not plateaued";
    return out;
  }
  const std::size_t dim = static_cast<std::size_t>(f.size()) * g.size();
  if (dim > matrix_budget())
    throw std::length_error("kronecker_verify: product dimension " + std::to_string(dim) + " exceeds the matrix budget");
  const int n = f.field()->degree(), m = g.field()->degree();
  out.factor = ipow(f.prime(), n + m + *cf.s + *cg.s);
  const CycMatrix P = kronecker(build_m(f), build_m(g));
  const CycMatrix PPP = (P * adjoint(P)) * P;
  out.identity_holds = true;
  for (std::size_t i = 0; i < P.rows() && out.identity_holds; ++i)
    for (std::size_t j = 0; j < P.cols(); ++j)
      if (PPP(i, j) != P(i, j) * out.factor) {
        out.identity_holds = false;
        out.witness = std::make_pair(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));
        break;
      }
  out.matches_direct_sum = P == build_m(direct_sum(f, g));
  return out;
}

LinearStructureSpace linear_structures(const PAryFunction& f) {
  const auto& K = *f.field();
  LinearStructureSpace out;
  std::vector<int> constant_at(f.size(), -1);
  for (std::uint32_t a = 0; a < f.size(); ++a) {
    if (const auto c = constant_value(derivative(f, {a}))) {
      out.members.push_back(a);
      out.constants.push_back(*c);
      constant_at[a] = *c;
    }
  }
  out.constants_additive = true;
  for (auto a : out.members)
    for (auto b : out.members) {
      const auto ab = K.add({a}, {b}).index;
      if (constant_at[ab] < 0) throw std::logic_error("linear_structures: set of linear structures not closed under addition");
      if (constant_at[ab] != (constant_at[a] + constant_at[b]) % f.prime()) out.constants_additive = false;
    }
  const auto dim = exact_log(static_cast<std::int64_t>(out.members.size()), f.prime());
  if (!dim) throw std::logic_error("linear_structures: size is not a power of p");
  out.dimension = *dim;
  return out;
}

PartiallyBentVerdict is_partially_bent(const PAryFunction& f) {
  PartiallyBentVerdict out;
  std::size_t constant_count = 0;
  out.partially_bent = true;
  for (std::uint32_t a = 0; a < f.size(); ++a) {
    const auto d = derivative(f, {a});
    if (constant_value(d)) {
      ++constant_count;
    } else if (!is_balanced(d)) {
      out.partially_bent = false;
      out.witness = a;
      break;
    }
  }
  out.spectral = classify(f);
  if (!out.partially_bent) return out;
  const auto dim = exact_log(static_cast<std::int64_t>(constant_count), f.prime());
  if (!dim) throw std::logic_error("is_partially_bent: linear space size is not a power of p");
  out.lambda_dimension = *dim;
  out.agrees = out.spectral.plateaued() && *out.spectral.s == out.lambda_dimension;
  return out;
}

TaLemmaVerdict t_a_lemma_check(const PAryFunction& f) {
  if (f.at(0) != 0) throw std::invalid_argument("t_a_lemma_check: requires f(0) = 0");
  const auto& K = *f.field();
  const auto lambda = linear_structures(f);
  std::vector<char> in_lambda(f.size(), 0);
  for (auto a : lambda.members) in_lambda[a] = 1;
  const auto G = graph(f).members;
  const std::uint32_t q = f.size();
  TaLemmaVerdict out;
  out.lambda_size = lambda.members.size();
  out.holds_on_lambda = true;
  for (std::uint32_t a = 0; a < q; ++a) {
    std::vector<std::uint32_t> T(q);
    for (std::uint32_t x = 0; x < q; ++x) T[x] = K.add({x}, {a}).index + q * ((f.at(x) + f.at(a)) % f.prime());
    const bool equal = make_element_set(std::move(T)) == G;
    if (in_lambda[a]) {
      if (!equal && out.holds_on_lambda) {
        out.holds_on_lambda = false;
        out.witness = a;
      }
    } else {
      ++out.outside_total;
      if (equal) ++out.outside_equal;
    }
  }
  return out;
}

DesignVerdict design_factorization_check(const PAryFunction& f) {
  const int p = f.prime();
  const int n = f.field()->degree();
  const std::uint32_t q = f.size();
  DesignVerdict out;
  if (f.at(0) != 0) throw std::invalid_argument("design_factorization_check: requires f(0) = 0");
  const auto spectral = classify(f);
  if (!spectral.plateaued()) throw std::invalid_argument("design_factorization_check: f is not plateaued");
  const auto lambda = linear_structures(f);
  if (lambda.dimension < 1) throw std::invalid_argument("design_factorization_check: f has no nonzero linear structure");
  const std::size_t points = static_cast<std::size_t>(q) * p;
  if (points > kDesignPointBudget)
    throw std::length_error("design_factorization_check: " + std::to_string(points) + " points exceed the budget of " +
                            std::to_string(kDesignPointBudget));
  out.s = *spectral.s;
  out.lambda_dimension = lambda.dimension;
  out.points = points;
  out.blocks = points;

  const auto group = AbelianGroup::product(f.field(), GaloisField::make(p, 1));
  const auto G = graph(f).members;
  std::map<std::vector<std::uint32_t>, std::size_t> class_of;
  std::vector<std::size_t> multiplicity;
  std::vector<std::size_t> block_class(points);
  for (std::uint32_t g = 0; g < points; ++g) {
    std::vector<std::uint32_t> block;
    block.reserve(G.size());
    for (auto x : G) block.push_back(group.digits().add(x, g));
    block = make_element_set(std::move(block));
    auto [it, inserted] = class_of.emplace(block, out.block_list.size());
    if (inserted) {
      out.block_list.push_back(block);
      multiplicity.push_back(0);
    }
    ++multiplicity[it->second];
    block_class[g] = it->second;
  }
  out.distinct_blocks = out.block_list.size();
  out.multiplicity = multiplicity.front();
  out.constant_multiplicity = std::all_of(multiplicity.begin(), multiplicity.end(), [&](auto m) { return m == out.multiplicity; });
  const auto pm = static_cast<std::size_t>(ipow(p, lambda.dimension));
  if (!out.constant_multiplicity || out.multiplicity != pm) {
    out.diagnosis = "block multiplicity is not constant p^dim(Lambda); A = j (x) N is impossible";
  }

  out.graph_params = expected_graph_params(p, n, 1, out.s);
  const std::int64_t alpha = out.graph_params.alpha, beta = out.graph_params.beta;

  IntMatrix A(points, points, 0);
  for (std::uint32_t g = 0; g < points; ++g)
    for (auto x : out.block_list[block_class[g]]) A(x, g) = 1;
  const IntMatrix AAA = (A * transpose(A)) * A;
  out.full_identity = true;
  for (std::size_t i = 0; i < points && out.full_identity; ++i)
    for (std::size_t j = 0; j < points; ++j)
      if (AAA(i, j) != (beta - alpha) * A(i, j) + alpha) {
        out.full_identity = false;
        break;
      }

  out.reduced = IntMatrix(points, out.distinct_blocks, 0);
  for (std::size_t c = 0; c < out.distinct_blocks; ++c)
    for (auto x : out.block_list[c]) out.reduced(x, c) = 1;
  const IntMatrix& N = out.reduced;
  const IntMatrix NNN = (N * transpose(N)) * N;
  const auto scale = static_cast<std::int64_t>(out.multiplicity);
  out.reduced_identity = out.constant_multiplicity;
  for (std::size_t i = 0; i < N.rows() && out.reduced_identity; ++i)
    for (std::size_t j = 0; j < N.cols(); ++j)
      if (scale * NNN(i, j) != (beta - alpha) * N(i, j) + alpha) {
        out.reduced_identity = false;
        break;
      }
  if (out.constant_multiplicity && alpha % scale == 0 && (beta - alpha) % scale == 0) {
    out.reduced_alpha = alpha / scale;
    out.reduced_beta = (beta - alpha) / scale + alpha / scale;
  }

  std::vector<std::int64_t> row_sums(N.rows(), 0), col_sums(N.cols(), 0);
  for (std::size_t i = 0; i < N.rows(); ++i)
    for (std::size_t j = 0; j < N.cols(); ++j) {
      row_sums[i] += N(i, j);
      col_sums[j] += N(i, j);
    }
  if (std::all_of(row_sums.begin(), row_sums.end(), [&](auto r) { return r == row_sums[0]; })) out.replication = row_sums[0];
  if (std::all_of(col_sums.begin(), col_sums.end(), [&](auto c) { return c == col_sums[0]; })) out.block_size = col_sums[0];

  if (out.lambda_dimension == out.s) {
    const int s = out.s;
    const std::int64_t a2 = ipow(p, 2 * n - 1 - s) - ipow(p, n - 1);
    out.corollary_params_match = static_cast<std::int64_t>(points) == ipow(p, n + 1) &&
                                 static_cast<std::int64_t>(out.distinct_blocks) == ipow(p, n + 1 - s) &&
                                 out.block_size == ipow(p, n) && out.replication == ipow(p, n - s) &&
                                 out.reduced_alpha == a2 && out.reduced_beta == ipow(p, n) + a2;
  }
  return out;
}

}  // namespace plateau
