#include "plateau/pgds.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "plateau/parallel.hpp"

namespace plateau {

AbelianGroup::AbelianGroup(FieldPtr first, FieldPtr second) : first_(std::move(first)), second_(std::move(second)) {
  if (!first_) throw std::invalid_argument("AbelianGroup: null field");
  int digits = first_->degree();
  if (second_) {
    if (second_->characteristic() != first_->characteristic())
      throw std::invalid_argument("AbelianGroup: factors of different characteristic");
    digits += second_->degree();
  }
  digits_ = DigitGroup(first_->characteristic(), digits);
}

AbelianGroup AbelianGroup::of_field(FieldPtr field) { return AbelianGroup(std::move(field), nullptr); }

AbelianGroup AbelianGroup::product(FieldPtr first, FieldPtr second) {
  if (!second) throw std::invalid_argument("AbelianGroup: null second factor");
  return AbelianGroup(std::move(first), std::move(second));
}

std::string AbelianGroup::descriptor() const {
  std::string s = std::to_string(prime()) + " " + std::to_string(first_->degree());
  if (second_) s += " " + std::to_string(second_->degree());
  return s;
}

std::uint32_t AbelianGroup::dual(std::uint32_t chi) const {
  const std::uint32_t q1 = first_->order();
  if (!second_) return first_->dual_index({chi});
  return first_->dual_index({chi % q1}) + q1 * second_->dual_index({chi / q1});
}

int AbelianGroup::character_exponent(std::uint32_t chi, std::uint32_t g) const {
  const auto& K = *first_;
  if (!second_) return K.trace(K.mul({chi}, {g}));
  const std::uint32_t q1 = K.order();
  const auto& L = *second_;
  return (K.trace(K.mul({chi % q1}, {g % q1})) + L.trace(L.mul({chi / q1}, {g / q1}))) % prime();
}

std::vector<CycInt> AbelianGroup::character_sums(const ElementSet& S) const {
  std::vector<CycInt> indicator(order(), CycInt(prime()));
  for (auto g : S) indicator.at(g) = CycInt(prime(), 1);
  auto t = digit_dft(indicator, digits_, +1);
  std::vector<CycInt> out;
  out.reserve(order());
  for (std::uint32_t chi = 0; chi < order(); ++chi) out.push_back(t[dual(chi)]);
  return out;
}

CycInt AbelianGroup::character_sum(std::uint32_t chi, const ElementSet& S) const {
  CycInt acc(prime());
  for (auto g : S) acc.add_root(character_exponent(chi, g));
  return acc;
}

bool PgdsParams::consistent() const {
  return checked::mul(checked::mul(k, k), k) == checked::add(checked::mul(beta - alpha, k), checked::mul(alpha, v));
}

std::string to_string(PgdsMethod m) { return m == PgdsMethod::Delta ? "delta" : "character"; }

namespace {

void check_subset(const ElementSet& S, const AbelianGroup& G) {
  for (auto g : S)
    if (g >= G.order()) throw std::out_of_range("pgds: set member " + std::to_string(g) + " outside the group");
}

void check_size(const ElementSet& S, const AbelianGroup& G) {
  if (!(S.size() > 2 && S.size() < G.order()))
    throw std::invalid_argument("pgds: need 2 < |S| < v (|S| = " + std::to_string(S.size()) +
                                ", v = " + std::to_string(G.order()) + ")");
}

}  // namespace

std::vector<std::int64_t> delta_table(const ElementSet& S, const AbelianGroup& G) {
  check_subset(S, G);
  const auto& D = G.digits();
  std::vector<std::int64_t> delta(G.order(), 0);
  for (auto s : S)
    for (auto t : S) ++delta[D.sub(s, t)];
  return delta;
}

PgdsVerdict verify_pgds_delta(const ElementSet& S, const AbelianGroup& G, unsigned jobs) {
  check_subset(S, G);
  check_size(S, G);
  const auto& D = G.digits();
  const auto delta = delta_table(S, G);
  std::vector<char> member(G.order(), 0);
  for (auto s : S) member[s] = 1;

  std::vector<std::int64_t> T(G.order(), 0);
  constexpr std::uint32_t kChunk = 256;
  const std::size_t chunks = (G.order() + kChunk - 1) / kChunk;
  parallel_for(chunks, jobs, [&](std::size_t c) {
    const std::uint32_t lo = static_cast<std::uint32_t>(c) * kChunk;
    const std::uint32_t hi = std::min(G.order(), lo + kChunk);
    for (std::uint32_t x = lo; x < hi; ++x) {
      std::int64_t sum = 0;
      for (auto y : S) sum += delta[D.sub(x, y)];
      T[x] = sum;
    }
  });

  PgdsVerdict out;
  out.method = PgdsMethod::Delta;
  std::optional<std::int64_t> alpha, beta;
  for (std::uint32_t x = 0; x < G.order(); ++x) {
    auto& slot = member[x] ? beta : alpha;
    if (!slot) {
      slot = T[x];
    } else if (*slot != T[x]) {
      out.witness = x;
      out.diagnosis = std::string("T(x) = ") + std::to_string(T[x]) + (member[x] ? " on S differs from beta = " : " off S differs from alpha = ") +
                      std::to_string(*slot);
      return out;
    }
  }
  out.params = PgdsParams{G.order(), static_cast<std::int64_t>(S.size()), *alpha, *beta};
  out.is_pgds = true;
  if (!out.params->consistent()) throw std::logic_error("pgds: delta-count parameters violate k^3 = (beta - alpha) k + alpha v");
  return out;
}

PgdsVerdict verify_pgds_character(const ElementSet& S, const AbelianGroup& G) {
  check_subset(S, G);
  check_size(S, G);
  const auto sums = G.character_sums(S);
  PgdsVerdict out;
  out.method = PgdsMethod::Character;
  std::optional<std::int64_t> theta;
  for (std::uint32_t chi = 1; chi < G.order(); ++chi) {
    const CycInt ns = sums[chi].norm_sq();
    if (ns.is_zero()) continue;
    const auto r = ns.as_rational_integer();
    if (!r) {
      out.witness = chi;
      out.diagnosis = "|chi(S)|^2 = " + ns.to_string() + " is not rational";
      return out;
    }
    if (!theta) {
      theta = *r;
    } else if (*theta != *r) {
      out.witness = chi;
      out.diagnosis = "|chi(S)|^2 takes two nonzero values " + std::to_string(*theta) + " and " + std::to_string(*r);
      return out;
    }
  }
  const std::int64_t v = G.order();
  const auto k = static_cast<std::int64_t>(S.size());
  // Nonprincipal norms sum to k(v - k) > 0, so theta is always set here.
  const std::int64_t numer = checked::sub(checked::mul(checked::mul(k, k), k), checked::mul(*theta, k));
  if (numer % v != 0 || numer < 0) {
    out.diagnosis = "alpha = (k^3 - theta k) / v is not a non-negative integer";
    return out;
  }
  const std::int64_t alpha = numer / v;
  out.params = PgdsParams{v, k, alpha, alpha + *theta};
  out.is_pgds = true;
  return out;
}

PgdsParams expected_graph_params(int p, int n, int m, int s) {
  if (s < 0 || s > n) throw std::domain_error("expected_graph_params: need 0 <= s <= n");
  if (m < 1 || m > n + s) throw std::domain_error("expected_graph_params: need 1 <= m <= n + s for integral parameters");
  PgdsParams r;
  r.v = checked::ipow(p, n + m);
  r.k = checked::ipow(p, n);
  r.alpha = checked::ipow(p, 2 * n - m) - checked::ipow(p, n + s - m);
  r.beta = checked::ipow(p, n + s) + r.alpha;
  return r;
}

namespace {

// hist[t * qm + c] = #{a : D_t F(a) = c}.
std::vector<std::int64_t> derivative_histograms(const VectorialFunction& F) {
  const auto& K = *F.domain();
  const auto& L = *F.codomain();
  const std::uint32_t q = F.size(), qm = L.order();
  std::vector<std::int64_t> hist(static_cast<std::size_t>(q) * qm, 0);
  for (std::uint32_t t = 0; t < q; ++t)
    for (std::uint32_t a = 0; a < q; ++a) ++hist[static_cast<std::size_t>(t) * qm + L.sub(F(K.add({a}, {t})), F({a})).index];
  return hist;
}

std::vector<std::int64_t> column_from_histograms(const VectorialFunction& F, const std::vector<std::int64_t>& hist,
                                                 FieldElement x) {
  const auto& K = *F.domain();
  const auto& L = *F.codomain();
  const std::uint32_t q = F.size(), qm = L.order();
  std::vector<std::int64_t> col(qm, 0);
  for (std::uint32_t t = 0; t < q; ++t) {
    const FieldElement dx = L.sub(F(K.add(x, {t})), F(x));
    const std::int64_t* h = &hist[static_cast<std::size_t>(t) * qm];
    for (std::uint32_t c = 0; c < qm; ++c) col[c] += h[L.add({c}, dx).index];
  }
  return col;
}

}  // namespace

std::int64_t n_f_count(const VectorialFunction& F, FieldElement c, FieldElement x) {
  const auto& K = *F.domain();
  const auto& L = *F.codomain();
  std::int64_t count = 0;
  for (std::uint32_t t = 0; t < F.size(); ++t) {
    const FieldElement dx = L.sub(F(K.add(x, {t})), F(x));
    for (std::uint32_t a = 0; a < F.size(); ++a) {
      const FieldElement da = L.sub(F(K.add({a}, {t})), F({a}));
      if (L.sub(da, dx) == c) ++count;
    }
  }
  return count;
}

std::vector<std::int64_t> n_f_column(const VectorialFunction& F, FieldElement x) {
  return column_from_histograms(F, derivative_histograms(F), x);
}

NfVerdict verify_nf_characterization(const VectorialFunction& F, unsigned jobs) {
  NfVerdict out;
  const auto hist = derivative_histograms(F);
  const std::uint32_t q = F.size(), qm = F.codomain()->order();
  std::vector<std::vector<std::int64_t>> cols(q);
  parallel_for(q, jobs, [&](std::size_t x) { cols[x] = column_from_histograms(F, hist, {static_cast<std::uint32_t>(x)}); });
  out.two_valued = true;
  for (std::uint32_t x = 0; x < q && out.two_valued; ++x) {
    for (std::uint32_t c = 0; c < qm; ++c) {
      auto& slot = c == 0 ? out.beta : out.alpha;
      if (!slot) {
        slot = cols[x][c];
      } else if (*slot != cols[x][c]) {
        out.two_valued = false;
        out.witness = std::make_pair(c, x);
        break;
      }
    }
  }
  if (!out.two_valued) {
    out.alpha.reset();
    out.beta.reset();
  }
  out.graph_verdict = verify_pgds_delta(graph(F).members, AbelianGroup::for_graph(F), jobs);
  if (out.two_valued && out.graph_verdict.is_pgds) {
    out.agrees = out.graph_verdict.params->alpha == *out.alpha && out.graph_verdict.params->beta == *out.beta;
  } else {
    out.agrees = out.two_valued == out.graph_verdict.is_pgds;
  }
  return out;
}

GroupRingVerdict group_ring_lemma_check(const ElementSet& S, const AbelianGroup& G) {
  check_subset(S, G);
  GroupRingVerdict out{CycInt(G.prime()), 0, false};
  for (const auto& z : G.character_sums(S)) out.total += z.norm_sq();
  out.expected = checked::mul(G.order(), static_cast<std::int64_t>(S.size()));
  out.holds = out.total.as_rational_integer() == out.expected;
  return out;
}

namespace {

std::int64_t pow3(int e) { return checked::ipow(3, e); }

std::optional<int> family_k_for(std::uint64_t d, int n) {
  for (int k = 1; k <= 2 * n; ++k) {
    const std::int64_t fam = (pow3(2 * k) + 1) / 2;
    if (static_cast<std::uint64_t>(fam) == d) return k;
    if (static_cast<std::uint64_t>(fam) > d) break;
  }
  return std::nullopt;
}

}  // namespace

PartitionReport verify_partition_theorem(FieldPtr field, std::uint64_t d, unsigned jobs) {
  if (field->characteristic() != 3) throw std::invalid_argument("partition: field must have characteristic 3");
  const int n = field->degree();
  if (n < 3) throw std::invalid_argument("partition: need n >= 3");
  PartitionReport rep;
  rep.n = n;
  rep.d = d;
  rep.family_k = family_k_for(d, n);
  if (rep.family_k) {
    rep.family_s = static_cast<int>(gcd_u64(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(*rep.family_k)));
    rep.n_over_s_odd = (n / *rep.family_s) % 2 == 1;
  }
  const auto f = trace_power(field, d);
  rep.spectrum = classify(f);
  rep.s_used = rep.family_s ? rep.family_s : rep.spectrum.s;

  rep.stated = PgdsParams{pow3(n), pow3(n - 1), pow3(2 * n - 3) - pow3(n - 2), pow3(n - 1) + pow3(2 * n - 3) - pow3(n - 2)};
  if (rep.s_used) {
    const int s = *rep.s_used;
    const std::int64_t theta = pow3(n + s - 2);
    const std::int64_t alpha = pow3(2 * n - 3) - pow3(n + s - 3);
    rep.general = PgdsParams{pow3(n), pow3(n - 1), alpha, alpha + theta};
    rep.stated_general_mismatch_flag = s != 1;
  }

  const auto group = AbelianGroup::of_field(field);
  const auto parts = level_sets(f);
  rep.all_pgds = true;
  for (int i = 0; i < 3; ++i) {
    LevelSetReport ls;
    ls.label = i;
    ls.size = static_cast<std::uint32_t>(parts[i].size());
    if (ls.size > 2 && ls.size < group.order()) {
      ls.delta = verify_pgds_delta(parts[i], group, jobs);
      ls.character = verify_pgds_character(parts[i], group);
      ls.methods_agree = ls.delta.is_pgds == ls.character.is_pgds && ls.delta.params == ls.character.params;
      if (ls.delta.is_pgds) {
        ls.matches_stated = *ls.delta.params == rep.stated;
        ls.matches_general = rep.general && *ls.delta.params == *rep.general;
      }
    } else {
      ls.delta.diagnosis = ls.character.diagnosis = "set size outside (2, v)";
      ls.character.method = PgdsMethod::Character;
      ls.methods_agree = true;
    }
    rep.all_pgds = rep.all_pgds && ls.delta.is_pgds;
    rep.sets.push_back(std::move(ls));
  }

  const auto chi0 = group.character_sums(parts[0]);
  const auto chi1 = group.character_sums(parts[1]);
  const auto chi2 = group.character_sums(parts[2]);
  std::optional<std::int64_t> C;
  if (rep.s_used && (n + *rep.s_used) % 2 == 0) {
    C = pow3((n + *rep.s_used - 2) / 2);
    rep.tuple_unit = C;
  }
  std::set<std::pair<std::int64_t, std::int64_t>> realized;
  rep.conjugate_identity = rep.d0_identity = true;
  for (std::uint32_t a = 1; a < group.order(); ++a) {
    const auto c = chi1[a].coeffs();
    const std::int64_t x = c[0], y = c[1];
    realized.emplace(x, y);
    if (chi2[a] != chi1[a].conj()) rep.conjugate_identity = false;
    if (chi0[a] != CycInt(3, y - 2 * x)) rep.d0_identity = false;
  }
  rep.realized_tuples.assign(realized.begin(), realized.end());
  if (C) {
    const std::int64_t c = *C;
    const std::set<std::pair<std::int64_t, std::int64_t>> table{{0, 0}, {0, c},  {0, -c},  {c, c},  {c, 0},
                                                                {c, 2 * c}, {-c, -c}, {-c, -2 * c}, {-c, 0}};
    const std::set<std::pair<std::int64_t, std::int64_t>> excluded{{c, 2 * c}, {-c, -2 * c}, {c, 0}, {-c, 0}};
    rep.tuples_within_table = std::all_of(realized.begin(), realized.end(), [&](auto t) { return table.count(t) > 0; });
    rep.excluded_tuples_absent = std::none_of(realized.begin(), realized.end(), [&](auto t) { return excluded.count(t) > 0; });
  }
  return rep;
}

ConverseReport converse_partition_check(FieldPtr field, const std::vector<ElementSet>& parts, std::int64_t lambda) {
  ConverseReport rep;
  if (field->characteristic() != 3) throw std::invalid_argument("converse: field must have characteristic 3");
  const int n = field->degree();
  const std::uint32_t q = field->order();
  std::vector<std::string> failed;

  std::vector<int> label(q, -1);
  rep.partition_ok = parts.size() == 3;
  for (std::size_t i = 0; i < parts.size() && rep.partition_ok; ++i) {
    for (auto x : parts[i]) {
      if (x >= q || label[x] != -1) {
        rep.partition_ok = false;
        break;
      }
      label[x] = static_cast<int>(i);
    }
  }
  rep.partition_ok = rep.partition_ok && std::none_of(label.begin(), label.end(), [](int l) { return l < 0; });
  if (!rep.partition_ok) {
    rep.diagnosis = "D_0, D_1, D_2 do not partition the field";
    return rep;
  }

  const auto e = exact_log(lambda, 3);
  if (e && 2 * *e + 1 - n >= 0 && 2 * *e + 1 - n <= n) {
    rep.lambda_power_of_3 = true;
    rep.s = 2 * *e + 1 - n;
  } else {
    failed.push_back(e ? "lambda implies s outside [0, n]" : "lambda is not a power of 3");
  }

  const auto group = AbelianGroup::of_field(field);
  rep.sets_are_pgds = true;
  for (const auto& D : parts) {
    if (!(D.size() > 2 && D.size() < q) || !verify_pgds_delta(D, group).is_pgds) rep.sets_are_pgds = false;
  }
  if (!rep.sets_are_pgds) failed.push_back("not every D_i is a PGDS");

  std::vector<std::vector<CycInt>> sums;
  for (const auto& D : parts) sums.push_back(group.character_sums(D));
  rep.character_membership = true;
  for (int i = 0; i < 3 && rep.character_membership; ++i) {
    for (std::uint32_t a = 1; a < q; ++a) {
      const CycInt& z = sums[i][a];
      bool ok = z.is_zero();
      for (int j = 0; j < 3 && !ok; ++j) {
        const CycInt r = CycInt::root_power(3, j) * lambda;
        ok = z == r || z == -r;
      }
      if (!ok) {
        rep.character_membership = false;
        rep.membership_witness = std::make_pair(i, a);
        break;
      }
    }
  }
  if (!rep.character_membership) failed.push_back("a character value lies outside {0, +-lambda zeta^j}");

  std::array<std::int64_t, 3> sz{};
  for (int i = 0; i < 3; ++i) sz[i] = static_cast<std::int64_t>(parts[i].size());
  if (sz[0] == sz[1] && sz[1] == sz[2]) {
    rep.cardinality_case = true;
    rep.cardinality_label = "equal";
  } else if (rep.s && (n + *rep.s) % 2 == 0) {
    const std::int64_t base = pow3(n - 1), u = pow3((n + *rep.s - 2) / 2);
    for (int k = 0; k < 3 && !rep.cardinality_case; ++k) {
      const std::int64_t a = sz[(k + 1) % 3], b = sz[(k + 2) % 3];
      if (a == b && a == base - u && sz[k] == base + 2 * u) {
        rep.cardinality_case = true;
        rep.cardinality_label = "two small, D_" + std::to_string(k) + " large";
      } else if (a == b && a == base + u && sz[k] == base - 2 * u) {
        rep.cardinality_case = true;
        rep.cardinality_label = "two large, D_" + std::to_string(k) + " small";
      }
    }
  }
  if (!rep.cardinality_case) failed.push_back("cardinalities match none of the three cases");

  // <z_a, e> = sum_i chi_a(D_i) conj(zeta^i).
  const std::int64_t target = checked::mul(3, checked::mul(lambda, lambda));
  rep.inner_product_condition = true;
  for (std::uint32_t a = 0; a < q; ++a) {
    CycInt ip(3);
    for (int i = 0; i < 3; ++i) ip += sums[i][a].times_root(-i);
    const CycInt ns = ip.norm_sq();
    if (!(ns.is_zero() || ns.as_rational_integer() == target)) {
      rep.inner_product_condition = false;
      rep.inner_product_witness = a;
      break;
    }
  }
  if (!rep.inner_product_condition) failed.push_back("|<z_a, e>|^2 is not in {0, 3 lambda^2}");

  if (!failed.empty()) {
    for (std::size_t i = 0; i < failed.size(); ++i) rep.diagnosis += (i ? "; " : "") + failed[i];
    return rep;
  }
  std::vector<std::uint8_t> values(q);
  for (std::uint32_t x = 0; x < q; ++x) values[x] = static_cast<std::uint8_t>(label[x]);
  rep.function = PAryFunction(field, std::move(values));
  rep.function_class = classify(*rep.function);
  rep.conclusion_holds = rep.function_class->plateaued() && rep.function_class->s == rep.s;
  if (!rep.conclusion_holds) rep.diagnosis = "hypotheses hold but the constructed function is not s-plateaued";
  return rep;
}

}  // namespace plateau
