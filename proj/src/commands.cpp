#include "plateau/commands.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>

#include "plateau/parallel.hpp"

namespace plateau {

namespace fs = std::filesystem;

namespace {

Json header(const std::string& command) {
  return Json{{"tool", kToolName}, {"version", kToolVersion}, {"command", command}};
}

void check_field_args(int p, int n) {
  if (p < 2 || !is_prime(static_cast<std::uint64_t>(p)) || p > CycInt::kMaxPrime)
    throw UsageError("--p must be a prime in [2, " + std::to_string(CycInt::kMaxPrime) + "]");
  if (n < 1) throw UsageError("--n must be positive");
}

FieldPtr make_field(int p, int n) {
  check_field_args(p, n);
  try {
    return GaloisField::make(p, n);
  } catch (const std::length_error& e) {
    throw UsageError(e.what());
  }
}

Json file_json(const std::string& path) {
  return Json{{"path", path}, {"fnv1a64", fnv1a64_hex(read_file_bytes(path))}};
}

struct LoadedFunction {
  TruthTable table;
  Json source;
};

LoadedFunction load_function(const FunctionSource& src) {
  const int given = static_cast<int>(src.power.has_value()) + static_cast<int>(src.trace_power.has_value()) +
                    static_cast<int>(src.file.has_value());
  if (given != 1) throw UsageError("give exactly one of --power, --trace-power, --file");
  if (src.file) {
    auto table = read_truth_table_file(*src.file);
    Json source{{"kind", "file"}};
    source.update(file_json(*src.file));
    return {std::move(table), std::move(source)};
  }
  auto field = make_field(src.p, src.n);
  if (src.power) return {power_map(field, *src.power), Json{{"kind", "power"}, {"d", *src.power}}};
  return {trace_power(field, *src.trace_power), Json{{"kind", "trace-power"}, {"d", *src.trace_power}}};
}

const FieldPtr& domain_of(const TruthTable& t) {
  if (const auto* f = std::get_if<PAryFunction>(&t)) return f->field();
  return std::get<VectorialFunction>(t).domain();
}

/// Tr(x^d) stands in for x^d where a p-ary function is needed.
PAryFunction scalar_view(const TruthTable& t, Json& note) {
  if (const auto* f = std::get_if<PAryFunction>(&t)) return *f;
  note = "component b = 1 of the vectorial function";
  return component(std::get<VectorialFunction>(t), FieldElement{1});
}

struct PgdsPair {
  Json json;
  std::optional<PgdsVerdict> delta;
  std::optional<PgdsVerdict> character;
  bool agree = true;
};

PgdsPair verify_both(const ElementSet& S, const AbelianGroup& G, unsigned jobs) {
  PgdsPair out;
  try {
    out.delta = verify_pgds_delta(S, G, jobs);
  } catch (const std::invalid_argument& e) {
    out.json = Json{{"skipped", e.what()}};
    return out;
  }
  out.character = verify_pgds_character(S, G);
  out.agree = out.delta->is_pgds == out.character->is_pgds && out.delta->params == out.character->params;
  out.json = Json{{"delta", to_json(*out.delta)}, {"character", to_json(*out.character)}, {"methods_agree", out.agree}};
  return out;
}

/// Theorem check: graph is a PGDS exactly when F is vectorial s-plateaued, with the predicted parameters.
bool graph_matches(const PgdsPair& pair, bool s_plateaued, const std::optional<PgdsParams>& expected) {
  if (!pair.delta) return true;
  if (pair.delta->is_pgds != s_plateaued) return false;
  if (expected && pair.delta->params != expected) return false;
  return true;
}

std::optional<PgdsParams> graph_expectation(int p, int n, int m, const std::optional<int>& s) {
  if (!s || m > n + *s) return std::nullopt;
  return expected_graph_params(p, n, m, *s);
}

Json matrix_block(const PAryFunction& f, unsigned jobs, bool& agree) {
  if (f.size() > matrix_budget()) {
    return Json{{"skipped", "dimension " + std::to_string(f.size()) + " exceeds the matrix budget " +
                                std::to_string(matrix_budget())}};
  }
  const auto mmm = verify_mmm(f);
  const auto sd = verify_second_derivative_sums(f, jobs);
  const auto energy = verify_delta_energy(f);
  agree = agree && mmm.agrees && sd.agrees && energy.forward_holds;
  return Json{{"mmm", to_json(mmm)}, {"second_derivative", to_json(sd)}, {"delta_energy", to_json(energy)}};
}

}  // namespace

CommandOutput cmd_field(int p, int n, const std::optional<std::vector<int>>& modulus) {
  check_field_args(p, n);
  FieldPtr field;
  if (modulus) {
    try {
      field = GaloisField::make(p, n, *modulus);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  } else {
    field = make_field(p, n);
  }
  CommandOutput out;
  out.report = header("field");
  out.report["field"] = field_json(*field);
  std::vector<std::uint32_t> trace_counts(p, 0);
  for (auto t : field->trace_table()) ++trace_counts[t];
  out.report["trace_value_counts"] = trace_counts;
  Json basis = Json::array();
  for (int i = 0; i < n; ++i) basis.push_back(field->trace(FieldElement{field->additive_group().from_digits([&] {
                                 std::vector<int> e(n, 0);
                                 e[i] = 1;
                                 return e;
                               }())}));
  out.report["trace_of_basis"] = basis;
  std::string csv = "x,trace\n";
  for (std::uint32_t x = 0; x < field->order(); ++x) csv += std::to_string(x) + "," + std::to_string(field->trace({x})) + "\n";
  out.csv = std::move(csv);
  return out;
}

CommandOutput cmd_analyze(const FunctionSource& source, unsigned jobs) {
  auto loaded = load_function(source);
  const auto& field = domain_of(loaded.table);
  const int p = field->characteristic(), n = field->degree();
  CommandOutput out;
  Json& rep = out.report;
  rep = header("analyze");
  rep["field"] = field_json(*field);
  rep["source"] = loaded.source;
  bool agree = true;

  if (const auto* Fp = std::get_if<VectorialFunction>(&loaded.table)) {
    const auto& F = *Fp;
    const int m = F.codomain()->degree();
    rep["function"] = Json{{"type", "vectorial"}, {"m", m}, {"codomain", field_json(*F.codomain())}};
    const auto vc = classify_vectorial(F, jobs);
    rep["classification"] = to_json(vc);
    const bool sp = vc.kind == VectorialKind::VectorialSPlateaued;
    const auto expected = sp ? graph_expectation(p, n, m, vc.s) : std::nullopt;
    const auto pair = verify_both(graph(F).members, AbelianGroup::for_graph(F), jobs);
    const bool gm = graph_matches(pair, sp, expected);
    rep["graph_pgds"] = pair.json;
    rep["graph_pgds"]["expected"] = expected ? to_json(*expected) : Json(nullptr);
    rep["graph_pgds"]["matches_classification"] = gm;
    const auto nf = verify_nf_characterization(F, jobs);
    rep["n_f"] = to_json(nf);
    agree = pair.agree && gm && nf.agrees;
    Json note;
    const auto f = scalar_view(loaded.table, note);
    rep["matrix"] = matrix_block(f, jobs, agree);
    rep["matrix"]["function"] = note;
  } else {
    const auto& f = std::get<PAryFunction>(loaded.table);
    rep["function"] = Json{{"type", "p-ary"}};
    const auto cls = classify(f);
    rep["classification"] = to_json(cls);
    const auto expected = cls.plateaued() ? graph_expectation(p, n, 1, cls.s) : std::nullopt;
    const auto pair = verify_both(graph(f).members, AbelianGroup::product(field, GaloisField::make(p, 1)), jobs);
    const bool gm = graph_matches(pair, cls.plateaued(), expected);
    rep["graph_pgds"] = pair.json;
    rep["graph_pgds"]["expected"] = expected ? to_json(*expected) : Json(nullptr);
    rep["graph_pgds"]["matches_classification"] = gm;
    const auto nf = verify_nf_characterization(as_vectorial(f), jobs);
    rep["n_f"] = to_json(nf);
    agree = pair.agree && gm && nf.agrees;
    Json levels = Json::array();
    const auto sets = level_sets(f);
    const auto G = AbelianGroup::of_field(field);
    for (int i = 0; i < p; ++i) {
      auto pr = verify_both(sets[i], G, jobs);
      agree = agree && pr.agree;
      Json entry{{"label", i}, {"size", sets[i].size()}};
      entry.update(pr.json);
      levels.push_back(std::move(entry));
    }
    rep["level_sets"] = levels;
    rep["matrix"] = matrix_block(f, jobs, agree);
  }
  rep["agreement"] = agree;
  out.exit_code = agree ? 0 : 1;
  return out;
}

CommandOutput cmd_partition(int p, int n, std::uint64_t d, unsigned jobs) {
  if (p != 3) throw UsageError("partition requires --p 3");
  if (n < 3) throw UsageError("partition requires --n >= 3");
  const auto field = make_field(p, n);
  const auto rep = verify_partition_theorem(field, d, jobs);
  CommandOutput out;
  out.report = header("partition");
  out.report["field"] = field_json(*field);
  out.report["d"] = d;
  out.report["partition"] = to_json(rep);
  if (rep.family_k) out.report["decimation_family"] = to_json(known_decimations(p, n, *rep.family_k));
  std::string csv = "label,size,is_pgds,v,k,alpha,beta\n";
  for (const auto& s : rep.sets) {
    csv += std::to_string(s.label) + "," + std::to_string(s.size) + "," + (s.delta.is_pgds ? "true" : "false");
    if (s.delta.params) {
      const auto& q = *s.delta.params;
      csv += "," + std::to_string(q.v) + "," + std::to_string(q.k) + "," + std::to_string(q.alpha) + "," +
             std::to_string(q.beta) + "\n";
    } else {
      csv += ",,,,\n";
    }
  }
  out.csv = std::move(csv);
  out.exit_code = rep.all_pgds ? 0 : 1;
  return out;
}

CommandOutput cmd_xcorr(int p, int n, std::uint64_t d, unsigned jobs) {
  const auto field = make_field(p, n);
  const auto check = cross_plateaued_check(field, d, jobs);
  const auto rel = component_relation_check(field, d, field->primitive(), jobs);
  const auto u = m_sequence(field);
  CommandOutput out;
  Json& rep = out.report;
  rep = header("xcorr");
  rep["field"] = field_json(*field);
  rep["d"] = d;
  rep["sequence"] = Json{{"sigma", u.sigma.index}, {"period", u.period()}, {"value_counts", value_counts(u)}};
  rep["bridge"] = to_json(check.bridge);
  rep["three_valued"] = to_json(check.three_valued);
  Json vc = to_json(check.vectorial);
  vc.erase("components");
  rep["vectorial"] = vc;
  rep["agrees"] = check.agrees;
  rep["component_relation"] = to_json(rel);
  out.csv = cross_correlation_csv(check.bridge.spectrum);
  const bool ok = check.bridge.holds && check.three_valued.three_valued && check.agrees && rel.relation_holds &&
                  (!rel.permutation || rel.zero_vanishes);
  out.exit_code = ok ? 0 : 1;
  return out;
}

CommandOutput cmd_kronecker(const KroneckerInputs& in, const std::optional<std::string>& out_path) {
  auto load = [](const std::string& path) {
    auto t = read_truth_table_file(path);
    if (!std::holds_alternative<PAryFunction>(t)) throw UsageError(path + ": kronecker needs p-ary functions");
    return std::get<PAryFunction>(std::move(t));
  };
  std::optional<PAryFunction> f, g;
  Json sources;
  if (in.f_file || in.g_file) {
    if (!in.f_file || !in.g_file) throw UsageError("kronecker needs two --file arguments");
    f = load(*in.f_file);
    g = load(*in.g_file);
    sources = Json::array({file_json(*in.f_file), file_json(*in.g_file)});
  } else {
    if (in.m < 1) throw UsageError("kronecker needs two --file arguments, or --p --n --m --trace-power --d");
    f = trace_power(make_field(in.p, in.n), in.f_power);
    g = trace_power(make_field(in.p, in.m), in.g_power);
    sources = Json::array({Json{{"kind", "trace-power"}, {"d", in.f_power}}, Json{{"kind", "trace-power"}, {"d", in.g_power}}});
  }
  if (f->prime() != g->prime()) throw UsageError("kronecker: characteristics differ");
  const auto h = direct_sum(*f, *g);
  const auto cf = classify(*f), cg = classify(*g), ch = classify(h);
  CommandOutput out;
  Json& rep = out.report;
  rep = header("kronecker");
  rep["sources"] = sources;
  rep["f"] = Json{{"field", field_json(*f->field())}, {"classification", to_json(cf)}};
  rep["g"] = Json{{"field", field_json(*g->field())}, {"classification", to_json(cg)}};
  rep["h"] = Json{{"field", field_json(*h.field())}, {"classification", to_json(ch)}};
  bool ok = true;
  if (cf.plateaued() && cg.plateaued()) {
    const bool sum_rule = ch.plateaued() && ch.s == *cf.s + *cg.s;
    rep["sum_rule_holds"] = sum_rule;
    ok = sum_rule;
  } else {
    rep["sum_rule_holds"] = nullptr;
  }
  const std::size_t dim = static_cast<std::size_t>(f->size()) * g->size();
  if (dim <= matrix_budget()) {
    const auto kv = kronecker_verify(*f, *g);
    rep["kronecker"] = to_json(kv);
    if (!kv.skipped) ok = ok && kv.identity_holds && kv.matches_direct_sum;
  } else {
    rep["kronecker"] = Json{{"skipped", "dimension " + std::to_string(dim) + " exceeds the matrix budget " +
                                            std::to_string(matrix_budget())}};
  }
  if (out_path) {
    std::ofstream os(*out_path);
    if (!os) throw std::runtime_error("cannot write " + *out_path);
    write_truth_table(os, h);
    os.close();
    rep["output"] = file_json(*out_path);
  }
  out.exit_code = ok ? 0 : 1;
  return out;
}

SetFile read_set_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::optional<AbelianGroup> group;
  std::vector<std::uint32_t> members;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<long long> tokens;
    std::string tok;
    while (ls >> tok) {
      try {
        std::size_t used = 0;
        const long long v = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        tokens.push_back(v);
      } catch (const std::exception&) {
        throw ParseError(lineno, "not an integer: " + tok);
      }
    }
    if (tokens.empty()) continue;
    if (!group) {
      if (tokens.size() < 2 || tokens.size() > 3) throw ParseError(lineno, "expected group header 'p n' or 'p n m'");
      const int p = static_cast<int>(tokens[0]);
      try {
        check_field_args(p, static_cast<int>(tokens[1]));
        if (tokens.size() == 3 && tokens[2] < 1) throw UsageError("m must be positive");
        const auto first = GaloisField::make(p, static_cast<int>(tokens[1]));
        group = tokens.size() == 2 ? AbelianGroup::of_field(first)
                                   : AbelianGroup::product(first, GaloisField::make(p, static_cast<int>(tokens[2])));
      } catch (const std::exception& e) {
        throw ParseError(lineno, e.what());
      }
      continue;
    }
    for (auto v : tokens) {
      if (v < 0 || v >= group->order()) throw ParseError(lineno, "element " + std::to_string(v) + " out of range");
      members.push_back(static_cast<std::uint32_t>(v));
    }
  }
  if (!group) throw ParseError(lineno, "missing group header");
  const auto count = members.size();
  auto set = make_element_set(std::move(members));
  if (set.size() != count) throw ParseError(lineno, "duplicate elements");
  return {std::move(*group), std::move(set)};
}

CommandOutput cmd_pgds_verify(const std::string& set_file, unsigned jobs) {
  const auto sf = read_set_file(set_file);
  const auto v = sf.group.order();
  if (sf.members.size() <= 2 || sf.members.size() >= v)
    throw UsageError("set size must satisfy 2 < |S| < " + std::to_string(v));
  const auto pair = verify_both(sf.members, sf.group, jobs);
  const auto ring = group_ring_lemma_check(sf.members, sf.group);
  CommandOutput out;
  Json& rep = out.report;
  rep = header("pgds-verify");
  rep["set_file"] = file_json(set_file);
  rep["group"] = sf.group.descriptor();
  rep["field"] = field_json(*sf.group.first());
  if (sf.group.is_product()) rep["second_field"] = field_json(*sf.group.second());
  rep["size"] = sf.members.size();
  rep.update(pair.json);
  rep["group_ring"] = to_json(ring);
  out.exit_code = pair.delta->is_pgds && pair.agree && ring.holds ? 0 : 1;
  return out;
}

CommandOutput cmd_matrix_verify(const FunctionSource& source, unsigned jobs) {
  auto loaded = load_function(source);
  Json note;
  const auto f = scalar_view(loaded.table, note);
  if (f.size() > matrix_budget())
    throw UsageError("dimension " + std::to_string(f.size()) + " exceeds the matrix budget " +
                     std::to_string(matrix_budget()) + "; set PLATEAU_LAB_BUDGET to raise it");
  CommandOutput out;
  Json& rep = out.report;
  rep = header("matrix-verify");
  rep["field"] = field_json(*f.field());
  rep["source"] = loaded.source;
  rep["function"] = note;
  const auto cls = classify(f);
  rep["classification"] = to_json(cls);
  bool ok = true;
  const auto core = matrix_block(f, jobs, ok);
  rep.update(core);
  const auto lin = linear_structures(f);
  rep["linear_structures"] = to_json(lin);
  const auto pb = is_partially_bent(f);
  rep["partially_bent"] = to_json(pb);
  if (pb.partially_bent) ok = ok && pb.agrees;
  if (f.at(0) == 0) {
    const auto ta = t_a_lemma_check(f);
    rep["t_a_lemma"] = to_json(ta);
    ok = ok && ta.holds_on_lambda;
  } else {
    rep["t_a_lemma"] = Json{{"skipped", "f(0) != 0"}};
  }
  std::string why;
  if (!cls.plateaued()) why = "f is not plateaued";
  else if (f.at(0) != 0) why = "f(0) != 0";
  else if (lin.dimension < 1) why = "f has no nonzero linear structure";
  else if (static_cast<std::size_t>(f.size()) * f.prime() > 729) why = "more than 729 points";
  if (why.empty()) {
    const auto dv = design_factorization_check(f);
    rep["design"] = to_json(dv);
    ok = ok && dv.full_identity && (!dv.constant_multiplicity || dv.reduced_identity) &&
         (dv.lambda_dimension != dv.s || dv.corollary_params_match);
  } else {
    rep["design"] = Json{{"skipped", why}};
  }
  rep["agreement"] = ok;
  out.exit_code = ok ? 0 : 1;
  return out;
}

std::vector<SweepCheck> parse_sweep_checks(const std::string& list) {
  std::vector<SweepCheck> out;
  std::istringstream is(list);
  std::string item;
  while (std::getline(is, item, ',')) {
    if (item == "classify") out.push_back(SweepCheck::Classify);
    else if (item == "graph-pgds") out.push_back(SweepCheck::GraphPgds);
    else if (item == "partition") out.push_back(SweepCheck::Partition);
    else if (item == "xcorr") out.push_back(SweepCheck::Xcorr);
    else if (!item.empty()) throw UsageError("unknown check '" + item + "'");
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

bool has(const std::vector<SweepCheck>& v, SweepCheck c) { return std::find(v.begin(), v.end(), c) != v.end(); }

Json sweep_one(const FieldPtr& field, std::uint64_t d, const std::vector<SweepCheck>& checks) {
  const std::uint64_t q1 = field->order() - 1;
  const auto g = gcd_u64(q1, d);
  Json j{{"d", d}, {"gcd", g}, {"bijective", g == 1}};
  if (has(checks, SweepCheck::Classify) || has(checks, SweepCheck::GraphPgds)) {
    const auto F = power_map(field, d);
    const auto vc = classify_vectorial(F);
    if (has(checks, SweepCheck::Classify)) {
      Json c = to_json(vc);
      c.erase("components");
      j["classify"] = c;
    }
    if (has(checks, SweepCheck::GraphPgds)) {
      const auto pair = verify_both(graph(F).members, AbelianGroup::for_graph(F), 1);
      j["graph_pgds"] = pair.json;
    }
  }
  if (has(checks, SweepCheck::Partition)) {
    const auto rep = verify_partition_theorem(field, d);
    Json sets = Json::array();
    for (const auto& s : rep.sets)
      sets.push_back(Json{{"label", s.label}, {"size", s.size}, {"delta", to_json(s.delta)}, {"methods_agree", s.methods_agree}});
    j["partition"] = Json{{"all_pgds", rep.all_pgds}, {"family_k", rep.family_k ? Json(*rep.family_k) : Json(nullptr)},
                          {"sets", sets}};
  }
  if (has(checks, SweepCheck::Xcorr)) {
    const auto bridge = walsh_bridge_check(field, d);
    const auto tv = three_valued_classify(bridge.spectrum, field->characteristic(), field->degree());
    j["xcorr"] = Json{{"bridge_holds", bridge.holds}, {"three_valued", to_json(tv)}};
  }
  return j;
}

std::string cell(const Json& j, const std::vector<std::string>& path) {
  const Json* cur = &j;
  for (const auto& key : path) {
    if (!cur->is_object() || !cur->contains(key)) return "";
    cur = &(*cur)[key];
  }
  if (cur->is_null()) return "";
  if (cur->is_string()) return cur->get<std::string>();
  return cur->dump();
}

void write_atomically(const fs::path& path, const std::string& text) {
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary);
    if (!os) throw std::runtime_error("cannot write " + tmp.string());
    os << text;
    if (!os) throw std::runtime_error("cannot write " + tmp.string());
  }
  fs::rename(tmp, path);
}

}  // namespace

CommandOutput cmd_sweep(const SweepJob& job) {
  const auto field = make_field(job.p, job.n);
  if (job.out_dir.empty()) throw UsageError("sweep needs --out <directory>");
  if (job.checks.empty()) throw UsageError("sweep needs at least one check");
  if (has(job.checks, SweepCheck::Partition) && (job.p != 3 || job.n < 3))
    throw UsageError("the partition check requires --p 3 and --n >= 3");
  const fs::path dir(job.out_dir);
  fs::create_directories(dir);

  const std::uint64_t q1 = field->order() - 1;
  std::vector<std::uint64_t> ds;
  for (std::uint64_t d = job.d_from; d < job.d_to; ++d)
    if (!job.bijective_only || gcd_u64(q1, d) == 1) ds.push_back(d);

  const fs::path log_path = dir / "resume.log";
  std::set<std::uint64_t> done;
  if (std::ifstream log(log_path); log) {
    for (std::uint64_t d; log >> d;) done.insert(d);
  }
  auto json_path = [&](std::uint64_t d) { return dir / ("d_" + std::to_string(d) + ".json"); };
  std::vector<std::uint64_t> pending;
  for (auto d : ds)
    if (!done.count(d) || !fs::exists(json_path(d))) pending.push_back(d);

  std::ofstream log(log_path, std::ios::app);
  if (!log) throw std::runtime_error("cannot write " + log_path.string());
  std::mutex log_mutex;
  parallel_for(pending.size(), job.jobs, [&](std::size_t i) {
    const auto d = pending[i];
    Json j = header("sweep");
    j["field"] = field_json(*field);
    j.update(sweep_one(field, d, job.checks));
    write_atomically(json_path(d), j.dump(2) + "\n");
    std::lock_guard lock(log_mutex);
    log << d << "\n" << std::flush;
  });

  std::string csv = "d,gcd,bijective,kind,s,graph_pgds,partition_all_pgds,xcorr_three_valued,xcorr_s\n";
  for (auto d : ds) {
    const auto j = Json::parse(read_file_bytes(json_path(d).string()));
    csv += std::to_string(d) + "," + cell(j, {"gcd"}) + "," + cell(j, {"bijective"}) + "," + cell(j, {"classify", "kind"}) +
           "," + cell(j, {"classify", "s"}) + "," + cell(j, {"graph_pgds", "delta", "is_pgds"}) + "," +
           cell(j, {"partition", "all_pgds"}) + "," + cell(j, {"xcorr", "three_valued", "three_valued"}) + "," +
           cell(j, {"xcorr", "three_valued", "s"}) + "\n";
  }
  write_atomically(dir / "summary.csv", csv);

  CommandOutput out;
  out.report = header("sweep");
  out.report["field"] = field_json(*field);
  out.report["d_from"] = job.d_from;
  out.report["d_to"] = job.d_to;
  out.report["bijective_only"] = job.bijective_only;
  Json checks = Json::array();
  for (auto c : job.checks)
    checks.push_back(c == SweepCheck::Classify    ? "classify"
                     : c == SweepCheck::GraphPgds ? "graph-pgds"
                     : c == SweepCheck::Partition ? "partition"
                                                  : "xcorr");
  out.report["checks"] = checks;
  out.report["d_values"] = ds;
  out.report["computed"] = pending.size();
  out.report["reused"] = ds.size() - pending.size();
  out.csv = std::move(csv);
  return out;
}

}  // namespace plateau
