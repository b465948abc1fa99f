#include "plateau/report.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace plateau {

namespace {

template <class T>
Json opt(const std::optional<T>& v) {
  if (!v) return nullptr;
  if constexpr (std::is_same_v<T, CycInt> || std::is_same_v<T, PgdsParams>) {
    return to_json(*v);
  } else {
    return *v;
  }
}

Json pair_json(const std::optional<std::pair<std::uint32_t, std::uint32_t>>& w) {
  if (!w) return nullptr;
  return Json::array({w->first, w->second});
}

}  // namespace

std::string fnv1a64_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << h;
  return os.str();
}

std::string read_file_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Json to_json(const CycInt& x) { return x.coeff_vector(); }

Json to_json(const FieldSpec& spec) {
  return Json{{"p", spec.p}, {"n", spec.n}, {"modulus", spec.modulus}, {"canonical", spec.canonical}};
}

Json field_json(const GaloisField& field) {
  Json j = to_json(field.spec());
  j["primitive"] = field.primitive().index;
  j["primitive_coeffs"] = field.coeffs(field.primitive());
  return j;
}

Json to_json(const SpectrumClass& c) {
  return Json{{"kind", to_string(c.kind)},
              {"s", opt(c.s)},
              {"amplitude_sq", c.amplitude_sq},
              {"support_size", c.support_size},
              {"witness", opt(c.witness)}};
}

Json to_json(const VectorialClass& c) {
  Json comps = Json::array();
  for (const auto& k : c.components) comps.push_back(to_json(k));
  return Json{{"kind", to_string(c.kind)}, {"s", opt(c.s)}, {"witness", opt(c.witness)}, {"components", comps}};
}

Json to_json(const PgdsParams& p) {
  return Json{{"v", p.v}, {"k", p.k}, {"alpha", p.alpha}, {"beta", p.beta}};
}

Json to_json(const PgdsVerdict& v) {
  Json j{{"is_pgds", v.is_pgds}};
  if (v.params) {
    j["v"] = v.params->v;
    j["k"] = v.params->k;
    j["alpha"] = v.params->alpha;
    j["beta"] = v.params->beta;
  }
  j["method"] = to_string(v.method);
  j["witness"] = opt(v.witness);
  j["diagnosis"] = v.diagnosis;
  return j;
}

Json to_json(const NfVerdict& v) {
  return Json{{"two_valued", v.two_valued}, {"alpha", opt(v.alpha)},       {"beta", opt(v.beta)},
              {"witness", pair_json(v.witness)}, {"graph", to_json(v.graph_verdict)}, {"agrees", v.agrees}};
}

Json to_json(const GroupRingVerdict& v) {
  return Json{{"total", to_json(v.total)}, {"expected", v.expected}, {"holds", v.holds}};
}

Json to_json(const PartitionReport& r) {
  Json sets = Json::array();
  for (const auto& s : r.sets)
    sets.push_back(Json{{"label", s.label},
                        {"size", s.size},
                        {"delta", to_json(s.delta)},
                        {"character", to_json(s.character)},
                        {"methods_agree", s.methods_agree},
                        {"matches_stated", s.matches_stated},
                        {"matches_general", s.matches_general}});
  Json tuples = Json::array();
  for (const auto& [x, y] : r.realized_tuples) tuples.push_back(Json::array({x, y}));
  return Json{{"n", r.n},
              {"d", r.d},
              {"family_k", opt(r.family_k)},
              {"family_s", opt(r.family_s)},
              {"n_over_s_odd", r.n_over_s_odd},
              {"spectrum", to_json(r.spectrum)},
              {"s_used", opt(r.s_used)},
              {"stated", to_json(r.stated)},
              {"general", opt(r.general)},
              {"stated_general_mismatch_flag", r.stated_general_mismatch_flag},
              {"sets", sets},
              {"all_pgds", r.all_pgds},
              {"tuple_unit", opt(r.tuple_unit)},
              {"realized_tuples", tuples},
              {"excluded_tuples_absent", r.excluded_tuples_absent},
              {"tuples_within_table", r.tuples_within_table},
              {"conjugate_identity", r.conjugate_identity},
              {"d0_identity", r.d0_identity}};
}

Json to_json(const BridgeVerdict& v) {
  return Json{{"d", v.d},
              {"holds", v.holds},
              {"witness", opt(v.witness)},
              {"unconjugated_holds", v.unconjugated_holds},
              {"unconjugated_witness", opt(v.unconjugated_witness)},
              {"sum", to_json(v.sum)},
              {"expected_sum", to_json(v.expected_sum)},
              {"sum_matches", v.sum_matches}};
}

Json to_json(const ThreeValuedVerdict& v) {
  Json values = Json::array();
  for (const auto& x : v.distinct_values) values.push_back(to_json(x));
  return Json{{"three_valued", v.three_valued},
              {"s", opt(v.s)},
              {"amplitude", v.amplitude},
              {"all_rational", v.all_rational},
              {"distinct_values", values}};
}

Json to_json(const DecimationFamily& f) {
  Json ds = Json::array();
  for (const auto& d : f.decimations)
    ds.push_back(Json{{"d", d.d}, {"form", d.form}, {"s", d.s}, {"gcd", d.gcd}, {"coprime", d.coprime}});
  return Json{{"p", f.p}, {"n", f.n}, {"k", f.k}, {"s", f.s}, {"rejection", opt(f.rejection)}, {"decimations", ds}};
}

Json to_json(const ComponentRelationVerdict& v) {
  return Json{{"d", v.d},
              {"permutation", v.permutation},
              {"c", v.c},
              {"b", v.b},
              {"relation_holds", v.relation_holds},
              {"witness", opt(v.witness)},
              {"zero_vanishes", v.zero_vanishes},
              {"zero_witness", opt(v.zero_witness)}};
}

Json to_json(const MmmVerdict& v) {
  return Json{{"factor", opt(v.factor)},
              {"s", opt(v.s)},
              {"witness", pair_json(v.witness)},
              {"agrees", v.agrees}};
}

Json to_json(const SecondDerivativeVerdict& v) {
  return Json{{"constant", v.constant},
              {"value", opt(v.value)},
              {"s", opt(v.s)},
              {"witness", opt(v.witness)},
              {"agrees", v.agrees}};
}

Json to_json(const EnergyVerdict& v) {
  return Json{{"energy", to_json(v.energy)},
              {"s_from_energy", opt(v.s_from_energy)},
              {"forward_holds", v.forward_holds},
              {"converse_counterexample", v.converse_counterexample}};
}

Json to_json(const KroneckerVerdict& v) {
  return Json{{"skipped", v.skipped},
              {"diagnosis", v.diagnosis},
              {"s1", opt(v.s1)},
              {"s2", opt(v.s2)},
              {"factor", v.factor},
              {"identity_holds", v.identity_holds},
              {"matches_direct_sum", v.matches_direct_sum},
              {"witness", pair_json(v.witness)}};
}

Json to_json(const LinearStructureSpace& s) {
  return Json{{"members", s.members},
              {"constants", s.constants},
              {"dimension", s.dimension},
              {"constants_additive", s.constants_additive}};
}

Json to_json(const PartiallyBentVerdict& v) {
  return Json{{"partially_bent", v.partially_bent},
              {"witness", opt(v.witness)},
              {"lambda_dimension", v.lambda_dimension},
              {"agrees", v.agrees}};
}

Json to_json(const TaLemmaVerdict& v) {
  return Json{{"holds_on_lambda", v.holds_on_lambda},
              {"lambda_size", v.lambda_size},
              {"outside_total", v.outside_total},
              {"outside_equal", v.outside_equal},
              {"witness", opt(v.witness)}};
}

Json to_json(const DesignVerdict& v) {
  return Json{{"s", v.s},
              {"lambda_dimension", v.lambda_dimension},
              {"points", v.points},
              {"blocks", v.blocks},
              {"distinct_blocks", v.distinct_blocks},
              {"constant_multiplicity", v.constant_multiplicity},
              {"multiplicity", v.multiplicity},
              {"graph_params", to_json(v.graph_params)},
              {"full_identity", v.full_identity},
              {"reduced_identity", v.reduced_identity},
              {"reduced_alpha", opt(v.reduced_alpha)},
              {"reduced_beta", opt(v.reduced_beta)},
              {"replication", opt(v.replication)},
              {"block_size", opt(v.block_size)},
              {"corollary_params_match", v.corollary_params_match},
              {"diagnosis", v.diagnosis}};
}

std::string coeff_cell(const CycInt& x) {
  std::string out;
  for (auto c : x.coeffs()) {
    if (!out.empty()) out += ';';
    out += std::to_string(c);
  }
  return out;
}

std::string spectrum_csv(const WalshSpectrum& spectrum) {
  std::string out = "mu,w_coeffs,norm_sq_coeffs\n";
  for (std::uint32_t mu = 0; mu < spectrum.size(); ++mu)
    out += std::to_string(mu) + "," + coeff_cell(spectrum[mu]) + "," + coeff_cell(spectrum[mu].norm_sq()) + "\n";
  return out;
}

std::string cross_correlation_csv(const CrossCorrSpectrum& spectrum) {
  std::string out = "tau,theta_coeffs,is_rational,rational_value\n";
  for (std::size_t tau = 0; tau < spectrum.values.size(); ++tau) {
    const auto r = spectrum.values[tau].as_rational_integer();
    out += std::to_string(tau) + "," + coeff_cell(spectrum.values[tau]) + "," + (r ? "true" : "false") + "," +
           (r ? std::to_string(*r) : "") + "\n";
  }
  return out;
}

}  // namespace plateau
