// One PASS/FAIL line per acceptance criterion.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <string>

#include "plateau/matrixchar.hpp"
#include "plateau/pgds.hpp"
#include "plateau/sequences.hpp"
#include "plateau/walsh.hpp"

using namespace plateau;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

int failures = 0;

void criterion(int id, const std::string& title, double limit_s, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out.ok = false;
    out.detail = std::string("exception: ") + e.what();
  }
  const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
  if (out.ok && dt.count() > limit_s) {
    out.ok = false;
    out.detail = "time limit exceeded";
  }
  if (!out.ok) ++failures;
  std::printf("criterion %d: %s  %s  (%.2f s, limit %.0f s)%s%s\n", id, out.ok ? "PASS" : "FAIL", title.c_str(),
              dt.count(), limit_s, out.detail.empty() ? "" : "  ", out.detail.c_str());
  std::fflush(stdout);
}

std::string capture(const std::string& args) {
  const std::string cmd = std::string(PLATEAU_LAB_PATH) + " " + args + " 2>/dev/null";
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("cannot run " + cmd);
  char buf[4096];
  for (std::size_t got; (got = fread(buf, 1, sizeof buf, pipe)) > 0;) out.append(buf, got);
  pclose(pipe);
  return out;
}

std::mt19937_64 rng(7919);

}  // namespace

int main() {
  auto F3 = GaloisField::make(3, 1), F9 = GaloisField::make(3, 2), F27 = GaloisField::make(3, 3),
       F243 = GaloisField::make(3, 5);

  criterion(1, "x^5 over F27: vectorial 1-plateaued iff graph PGDS (729,27,24,105)", 10, [&] {
    Outcome o;
    const auto F = power_map(F27, 5);
    const auto vc = classify_vectorial(F);
    o.require(vc.kind == VectorialKind::VectorialSPlateaued && vc.s == 1, "classification is not VectorialSPlateaued(1)");
    const auto G = AbelianGroup::for_graph(F);
    const auto S = graph(F).members;
    const auto d = verify_pgds_delta(S, G);
    o.require(d.is_pgds && d.params == PgdsParams{729, 27, 24, 105}, "delta verifier parameters differ");
    const auto c = verify_pgds_character(S, G);
    o.require(c.is_pgds && c.params == d.params, "character verifier disagrees");
    return o;
  });

  criterion(2, "partition: n=3,d=5 all PGDS (27,9,24,33); n=5,d=7 some level set fails", 30, [&] {
    Outcome o;
    const auto r = verify_partition_theorem(F27, 5);
    for (const auto& s : r.sets)
      o.require(s.delta.is_pgds && s.delta.params == PgdsParams{27, 9, 24, 33} && s.methods_agree,
                "D_" + std::to_string(s.label) + " is not a (27,9,24,33) PGDS");
    const auto bad = verify_partition_theorem(F243, 7);
    bool some_fail = false;
    for (const auto& s : bad.sets) some_fail = some_fail || !s.delta.is_pgds;
    o.require(some_fail, "every level set of Tr(x^7) over F_243 verified as PGDS");
    return o;
  });

  criterion(3, "cross-correlation three-valued and equal to -1 + W(sigma^tau) at every shift", 60, [&] {
    Outcome o;
    struct Case {
      FieldPtr field;
      std::uint64_t d;
      std::set<std::int64_t> values;
    };
    const std::vector<Case> cases{{F27, 5, {-1, 8, -10}}, {F243, 5, {-1, 26, -28}}, {F243, 7, {-1, 26, -28}}};
    for (const auto& c : cases) {
      const auto b = walsh_bridge_check(c.field, c.d);
      const std::string tag = "n=" + std::to_string(c.field->degree()) + " d=" + std::to_string(c.d);
      o.require(b.spectrum.values.size() == c.field->order() - 1, tag + ": wrong number of shifts");
      std::set<std::int64_t> seen;
      for (const auto& v : b.spectrum.values) {
        const auto r = v.as_rational_integer();
        o.require(r.has_value(), tag + ": non-rational theta");
        if (r) seen.insert(*r);
      }
      o.require(seen == c.values, tag + ": value set differs");
      o.require(b.holds && b.unconjugated_holds, tag + ": bridge identity fails");
    }
    return o;
  });

  criterion(4, "matrix, second-derivative and energy characterizations agree with classify", 300, [&] {
    Outcome o;
    std::uniform_int_distribution<std::uint32_t> coeff(1, 26);
    std::uniform_int_distribution<std::uint64_t> expo(1, 26);
    std::uniform_int_distribution<int> terms(1, 3);
    std::vector<PAryFunction> corpus;
    for (int i = 0; i < 200; ++i) {
      std::vector<std::pair<FieldElement, std::uint64_t>> t;
      for (int k = terms(rng); k > 0; --k) t.emplace_back(FieldElement{coeff(rng)}, expo(rng));
      corpus.push_back(trace_polynomial(F27, t));
    }
    for (std::uint64_t d = 1; d <= 26; ++d) corpus.push_back(trace_power(F27, d));
    std::size_t agree = 0;
    for (const auto& f : corpus) {
      const auto cls = classify(f);
      const auto mmm = verify_mmm(f);
      const auto sd = verify_second_derivative_sums(f);
      const auto e = verify_delta_energy(f);
      const bool ok = mmm.agrees && mmm.s == cls.s && sd.agrees && sd.constant == cls.plateaued() &&
                      e.s_from_energy == cls.s;
      if (ok) ++agree;
    }
    o.require(agree == corpus.size(), std::to_string(agree) + "/" + std::to_string(corpus.size()) + " agree");
    if (o.ok) o.detail = std::to_string(corpus.size()) + " functions";
    return o;
  });

  criterion(5, "direct sums add plateau indices; PP*P = p^(n+m+s1+s2) P", 60, [&] {
    Outcome o;
    const auto bent = direct_sum(trace_power(F9, 2), trace_power(F3, 2));
    const auto cb = classify(bent);
    o.require(bent.field()->order() == 27 && cb.plateaued() && cb.s == 0, "bent + bent is not 0-plateaued on F27");
    const auto mixed = direct_sum(trace_power(F9, 2), trace_power(F27, 5));
    const auto cm = classify(mixed);
    o.require(mixed.field()->order() == 243 && cm.plateaued() && cm.s == 1, "bent + Tr(x^5) is not 1-plateaued on F243");
    const auto kv = kronecker_verify(trace_power(F9, 2), trace_power(F3, 2));
    o.require(!kv.skipped && kv.factor == 27 && kv.identity_holds && kv.matches_direct_sum, "Kronecker identity fails");
    return o;
  });

  criterion(6, "property suites: fast=naive, Parseval, convolution, verifier agreement, group ring", 300, [&] {
    Outcome o;
    std::size_t spectra = 0;
    for (auto [p, nmax] : {std::pair{2, 7}, {3, 5}, {5, 3}, {7, 2}}) {
      for (int n = 1; n <= nmax; ++n) {
        auto K = GaloisField::make(p, n);
        std::uniform_int_distribution<int> val(0, p - 1);
        for (int i = 0; i < 100; ++i) {
          std::vector<std::uint8_t> v(K->order());
          for (auto& x : v) x = static_cast<std::uint8_t>(val(rng));
          const PAryFunction f(K, std::move(v));
          const auto fast = walsh_fast(f);
          const auto naive = walsh_naive(f);
          o.require(fast.values() == naive.values(), "fast and naive transforms differ");
          for (const auto* W : {&fast, &naive}) {
            CycInt total(p);
            for (const auto& w : W->values()) total += w.norm_sq();
            o.require(total == CycInt(p, checked::ipow(p, 2 * n)), "Parseval fails");
            ++spectra;
          }
        }
      }
    }
    for (int i = 0; i < 50; ++i) {
      const int p = i % 2 ? 3 : 5;
      const DigitGroup G(p, p == 3 ? 3 : 2);
      std::uniform_int_distribution<std::int64_t> c(-3, 3);
      auto table = [&] {
        std::vector<CycInt> t;
        for (std::uint32_t x = 0; x < G.order(); ++x) {
          std::vector<std::int64_t> coeffs(p - 1);
          for (auto& k : coeffs) k = c(rng);
          t.push_back(CycInt::from_coeffs(p, coeffs));
        }
        return t;
      };
      const auto a = table(), b = table();
      const auto lhs = digit_dft(convolve(a, b, G), G, +1);
      const auto ah = digit_dft(a, G, +1), bh = digit_dft(b, G, +1);
      for (std::uint32_t u = 0; u < G.order(); ++u) o.require(lhs[u] == ah[u] * bh[G.neg(u)], "convolution theorem fails");
    }
    std::size_t positive = 0;
    for (const auto& G : {AbelianGroup::of_field(F27), AbelianGroup::product(F9, F3)}) {
      std::uniform_int_distribution<std::uint32_t> size(3, G.order() - 1), elem(0, G.order() - 1);
      for (int i = 0; i < 50; ++i) {
        std::set<std::uint32_t> pick;
        const auto k = size(rng);
        while (pick.size() < k) pick.insert(elem(rng));
        const ElementSet S(pick.begin(), pick.end());
        const auto d = verify_pgds_delta(S, G);
        const auto c = verify_pgds_character(S, G);
        o.require(d.is_pgds == c.is_pgds && d.params == c.params, "delta and character verifiers disagree");
        if (d.is_pgds) ++positive;
        o.require(group_ring_lemma_check(S, G).holds, "group ring identity fails");
      }
    }
    if (o.ok) o.detail = std::to_string(spectra) + " spectra, " + std::to_string(positive) + "/100 random sets PGDS";
    return o;
  });

  criterion(7, "partially bent pipeline on Tr(x^2) + 0: dim Lambda = s = 1, T_a lemma, design", 120, [&] {
    Outcome o;
    const auto f = direct_sum(trace_power(F9, 2), constant_function(F3, 0));
    const auto pb = is_partially_bent(f);
    o.require(pb.partially_bent && pb.lambda_dimension == 1 && pb.spectral.s == 1, "not partially bent with dim 1 = s");
    const auto ta = t_a_lemma_check(f);
    o.require(ta.holds_on_lambda && ta.lambda_size == 3, "T_a lemma fails on Lambda");
    const auto dv = design_factorization_check(f);
    o.require(dv.points == 81, "wrong number of points");
    o.require(dv.constant_multiplicity && dv.multiplicity == 3, "block multiplicity is not 3");
    o.require(dv.reduced_identity, "N N^t N identity fails");
    o.require(dv.full_identity, "A A^t A identity fails");
    return o;
  });

  criterion(8, "reports for criteria 1-3 are byte-identical at --jobs 1 and --jobs 8", 120, [&] {
    Outcome o;
    for (const std::string args :
         {"analyze --p 3 --n 3 --power 5", "partition --p 3 --n 3 --d 5", "partition --p 3 --n 5 --d 7",
          "xcorr --p 3 --n 3 --d 5", "xcorr --p 3 --n 5 --d 5", "xcorr --p 3 --n 5 --d 7"}) {
      const auto a = capture(args + " --jobs 1");
      const auto b = capture(args + " --jobs 8");
      o.require(!a.empty() && a == b, "reports differ for: " + args);
    }
    return o;
  });

  std::printf("%d of 8 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
