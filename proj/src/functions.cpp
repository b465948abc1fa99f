#include "plateau/functions.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace plateau {

PAryFunction::PAryFunction(FieldPtr field, std::vector<std::uint8_t> values)
    : field_(std::move(field)), values_(std::move(values)) {
  if (!field_) throw std::invalid_argument("PAryFunction: null field");
  if (values_.size() != field_->order())
    throw std::invalid_argument("PAryFunction: table length " + std::to_string(values_.size()) + " != p^n = " +
                                std::to_string(field_->order()));
  const int p = field_->characteristic();
  for (auto v : values_)
    if (v >= p) throw std::invalid_argument("PAryFunction: value " + std::to_string(v) + " outside [0, p)");
}

VectorialFunction::VectorialFunction(FieldPtr domain, FieldPtr codomain, std::vector<std::uint32_t> values)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), values_(std::move(values)) {
  if (!domain_ || !codomain_) throw std::invalid_argument("VectorialFunction: null field");
  if (domain_->characteristic() != codomain_->characteristic())
    throw std::invalid_argument("VectorialFunction: domain and codomain characteristics differ");
  if (values_.size() != domain_->order())
    throw std::invalid_argument("VectorialFunction: table length " + std::to_string(values_.size()) +
                                " != p^n = " + std::to_string(domain_->order()));
  for (auto v : values_)
    if (v >= codomain_->order())
      throw std::invalid_argument("VectorialFunction: value " + std::to_string(v) + " outside [0, p^m)");
}

VectorialFunction power_map(FieldPtr field, std::uint64_t d) {
  std::vector<std::uint32_t> v(field->order());
  for (std::uint32_t x = 0; x < field->order(); ++x) v[x] = field->pow({x}, static_cast<std::int64_t>(d)).index;
  return {field, field, std::move(v)};
}

PAryFunction trace_power(FieldPtr field, std::uint64_t d) {
  std::vector<std::uint8_t> v(field->order());
  for (std::uint32_t x = 0; x < field->order(); ++x)
    v[x] = static_cast<std::uint8_t>(field->trace(field->pow({x}, static_cast<std::int64_t>(d))));
  return {std::move(field), std::move(v)};
}

PAryFunction linear_function(FieldPtr field, FieldElement c) {
  std::vector<std::uint8_t> v(field->order());
  for (std::uint32_t x = 0; x < field->order(); ++x) v[x] = static_cast<std::uint8_t>(field->trace(field->mul(c, {x})));
  return {std::move(field), std::move(v)};
}

PAryFunction trace_polynomial(FieldPtr field, const std::vector<std::pair<FieldElement, std::uint64_t>>& terms) {
  std::vector<std::uint8_t> v(field->order());
  for (std::uint32_t x = 0; x < field->order(); ++x) {
    FieldElement acc = field->zero();
    for (const auto& [a, d] : terms) acc = field->add(acc, field->mul(a, field->pow({x}, static_cast<std::int64_t>(d))));
    v[x] = static_cast<std::uint8_t>(field->trace(acc));
  }
  return {std::move(field), std::move(v)};
}

PAryFunction constant_function(FieldPtr field, int value) {
  const int p = field->characteristic();
  std::vector<std::uint8_t> v(field->order(), static_cast<std::uint8_t>(((value % p) + p) % p));
  return {std::move(field), std::move(v)};
}

PAryFunction component(const VectorialFunction& F, FieldElement b) {
  const auto& cod = *F.codomain();
  if (b.index == 0) throw std::invalid_argument("component: b must be nonzero");
  if (b.index >= cod.order()) throw std::out_of_range("component: b outside the codomain");
  std::vector<std::uint8_t> v(F.size());
  for (std::uint32_t x = 0; x < F.size(); ++x)
    v[x] = static_cast<std::uint8_t>(cod.trace(cod.mul(b, F({x}))));
  return {F.domain(), std::move(v)};
}

VectorialFunction as_vectorial(const PAryFunction& f) {
  auto prime_field = GaloisField::make(f.prime(), 1);
  std::vector<std::uint32_t> v(f.values().begin(), f.values().end());
  return {f.field(), prime_field, std::move(v)};
}

PAryFunction derivative(const PAryFunction& f, FieldElement a) {
  const auto& K = *f.field();
  const int p = f.prime();
  std::vector<std::uint8_t> v(f.size());
  for (std::uint32_t x = 0; x < f.size(); ++x)
    v[x] = static_cast<std::uint8_t>((f(K.add({x}, a)) - f({x}) + p) % p);
  return {f.field(), std::move(v)};
}

PAryFunction second_derivative(const PAryFunction& f, FieldElement a, FieldElement b) {
  const auto& K = *f.field();
  const int p = f.prime();
  const FieldElement ab = K.add(a, b);
  std::vector<std::uint8_t> v(f.size());
  for (std::uint32_t x = 0; x < f.size(); ++x) {
    const int e = f(K.add({x}, ab)) + f({x}) - f(K.add({x}, a)) - f(K.add({x}, b));
    v[x] = static_cast<std::uint8_t>(((e % p) + p) % p);
  }
  return {f.field(), std::move(v)};
}

VectorialFunction vectorial_derivative(const VectorialFunction& F, FieldElement t) {
  const auto& K = *F.domain();
  const auto& L = *F.codomain();
  std::vector<std::uint32_t> v(F.size());
  for (std::uint32_t x = 0; x < F.size(); ++x) v[x] = L.sub(F(K.add({x}, t)), F({x})).index;
  return {F.domain(), F.codomain(), std::move(v)};
}

GraphSet graph(const VectorialFunction& F) {
  GraphSet g{F.domain()->characteristic(), F.domain()->degree(), F.codomain()->degree(), {}};
  const std::uint32_t q = F.size();
  g.members.reserve(q);
  for (std::uint32_t x = 0; x < q; ++x) g.members.push_back(x + q * F.values()[x]);
  g.members = make_element_set(std::move(g.members));
  return g;
}

GraphSet graph(const PAryFunction& f) { return graph(as_vectorial(f)); }

std::vector<ElementSet> level_sets(const PAryFunction& f) {
  std::vector<ElementSet> sets(f.prime());
  for (std::uint32_t x = 0; x < f.size(); ++x) sets[f.at(x)].push_back(x);
  return sets;
}

bool is_balanced(const PAryFunction& f) {
  for (const auto& s : level_sets(f))
    if (s.size() * f.prime() != f.size()) return false;
  return true;
}

std::optional<int> constant_value(const PAryFunction& f) {
  const auto& v = f.values();
  if (std::all_of(v.begin(), v.end(), [&](auto x) { return x == v.front(); })) return v.front();
  return std::nullopt;
}

namespace {

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next non-empty line split into integers.
  std::vector<long long> ints(const char* what) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      std::istringstream is(line);
      std::vector<long long> out;
      std::string tok;
      while (is >> tok) {
        std::size_t used = 0;
        long long v = 0;
        try {
          v = std::stoll(tok, &used);
        } catch (const std::exception&) {
          throw ParseError(line_no_, std::string("expected integer in ") + what + ", got '" + tok + "'");
        }
        if (used != tok.size()) throw ParseError(line_no_, std::string("malformed integer '") + tok + "' in " + what);
        out.push_back(v);
      }
      return out;
    }
    throw ParseError(line_no_ + 1, std::string("unexpected end of file, expected ") + what);
  }

  bool at_end() {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      if (line.find_first_not_of(" \t\r") != std::string::npos) return false;
    }
    return true;
  }

  int line() const { return line_no_; }

 private:
  std::istream& in_;
  int line_no_ = 0;
};

FieldPtr read_field(LineReader& r, int p, int n, const char* what) {
  auto mod = r.ints(what);
  if (mod.size() != static_cast<std::size_t>(n + 1))
    throw ParseError(r.line(), std::string(what) + ": expected " + std::to_string(n + 1) + " coefficients");
  std::vector<int> m(mod.begin(), mod.end());
  try {
    return GaloisField::make(p, n, std::move(m));
  } catch (const std::invalid_argument& e) {
    throw ParseError(r.line(), e.what());
  }
}

}  // namespace

TruthTable read_truth_table(std::istream& in) {
  LineReader r(in);
  auto header = r.ints("header 'p n [m]'");
  if (header.size() != 2 && header.size() != 3) throw ParseError(r.line(), "header must be 'p n' or 'p n m'");
  const auto p = static_cast<int>(header[0]);
  const auto n = static_cast<int>(header[1]);
  if (!is_prime(static_cast<std::uint64_t>(std::max(0, p)))) throw ParseError(r.line(), "p is not prime");
  if (n < 1 || (header.size() == 3 && header[2] < 1)) throw ParseError(r.line(), "degrees must be >= 1");
  FieldPtr dom = read_field(r, p, n, "domain modulus");
  FieldPtr cod;
  if (header.size() == 3) cod = read_field(r, p, static_cast<int>(header[2]), "codomain modulus");
  const std::uint32_t q = dom->order();
  const long long limit = cod ? cod->order() : p;
  std::vector<std::uint32_t> values(q);
  for (std::uint32_t i = 0; i < q; ++i) {
    auto row = r.ints("function value");
    if (row.size() != 1) throw ParseError(r.line(), "expected exactly one value per line");
    if (row[0] < 0 || row[0] >= limit)
      throw ParseError(r.line(), "value " + std::to_string(row[0]) + " outside [0, " + std::to_string(limit) + ")");
    values[i] = static_cast<std::uint32_t>(row[0]);
  }
  if (!r.at_end()) throw ParseError(r.line(), "more than p^n = " + std::to_string(q) + " values");
  if (cod) return VectorialFunction(dom, cod, std::move(values));
  return PAryFunction(dom, std::vector<std::uint8_t>(values.begin(), values.end()));
}

TruthTable read_truth_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_truth_table(in);
}

namespace {

void write_modulus(std::ostream& out, const FieldSpec& s) {
  for (std::size_t i = 0; i < s.modulus.size(); ++i) out << (i ? " " : "") << s.modulus[i];
  out << '\n';
}

}  // namespace

void write_truth_table(std::ostream& out, const PAryFunction& f) {
  const auto& s = f.field()->spec();
  out << s.p << ' ' << s.n << '\n';
  write_modulus(out, s);
  for (auto v : f.values()) out << static_cast<int>(v) << '\n';
}

void write_truth_table(std::ostream& out, const VectorialFunction& F) {
  const auto& s = F.domain()->spec();
  const auto& c = F.codomain()->spec();
  out << s.p << ' ' << s.n << ' ' << c.n << '\n';
  write_modulus(out, s);
  write_modulus(out, c);
  for (auto v : F.values()) out << v << '\n';
}

}  // namespace plateau
