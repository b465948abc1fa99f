#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "plateau/field.hpp"
#include "plateau/group.hpp"

namespace plateau {

/// f: F_{p^n} -> F_p as a dense value table indexed by element index.
class PAryFunction {
 public:
  PAryFunction(FieldPtr field, std::vector<std::uint8_t> values);

  const FieldPtr& field() const { return field_; }
  int prime() const { return field_->characteristic(); }
  std::uint32_t size() const { return static_cast<std::uint32_t>(values_.size()); }
  int operator()(FieldElement x) const { return values_[x.index]; }
  int at(std::uint32_t index) const { return values_[index]; }
  const std::vector<std::uint8_t>& values() const { return values_; }

  friend bool operator==(const PAryFunction& a, const PAryFunction& b) {
    return a.field_->spec() == b.field_->spec() && a.values_ == b.values_;
  }

 private:
  FieldPtr field_;
  std::vector<std::uint8_t> values_;
};

/// F: F_{p^n} -> F_{p^m}; values are codomain element indices.
class VectorialFunction {
 public:
  VectorialFunction(FieldPtr domain, FieldPtr codomain, std::vector<std::uint32_t> values);

  const FieldPtr& domain() const { return domain_; }
  const FieldPtr& codomain() const { return codomain_; }
  std::uint32_t size() const { return static_cast<std::uint32_t>(values_.size()); }
  FieldElement operator()(FieldElement x) const { return {values_[x.index]}; }
  const std::vector<std::uint32_t>& values() const { return values_; }

  friend bool operator==(const VectorialFunction& a, const VectorialFunction& b) {
    return a.domain_->spec() == b.domain_->spec() && a.codomain_->spec() == b.codomain_->spec() &&
           a.values_ == b.values_;
  }

 private:
  FieldPtr domain_;
  FieldPtr codomain_;
  std::vector<std::uint32_t> values_;
};

/// {(x, F(x))} inside F_{p^n} x F_{p^m}; pair index x + p^n * y.
struct GraphSet {
  int p = 0;
  int n = 0;
  int m = 0;
  ElementSet members;
};

VectorialFunction power_map(FieldPtr field, std::uint64_t d);
PAryFunction trace_power(FieldPtr field, std::uint64_t d);
/// x -> Tr(c x).
PAryFunction linear_function(FieldPtr field, FieldElement c);
/// x -> sum_i Tr(a_i x^{d_i}).
PAryFunction trace_polynomial(FieldPtr field, const std::vector<std::pair<FieldElement, std::uint64_t>>& terms);
PAryFunction constant_function(FieldPtr field, int value);

/// Tr_m(b F(x)); b must be nonzero.
PAryFunction component(const VectorialFunction& F, FieldElement b);
/// f as a vectorial function into F_p (p^1).
VectorialFunction as_vectorial(const PAryFunction& f);

PAryFunction derivative(const PAryFunction& f, FieldElement a);
PAryFunction second_derivative(const PAryFunction& f, FieldElement a, FieldElement b);
VectorialFunction vectorial_derivative(const VectorialFunction& F, FieldElement t);

GraphSet graph(const VectorialFunction& F);
GraphSet graph(const PAryFunction& f);

/// D_i = f^{-1}(i) for i in [0, p).
std::vector<ElementSet> level_sets(const PAryFunction& f);

bool is_balanced(const PAryFunction& f);
/// Constant value if f is constant.
std::optional<int> constant_value(const PAryFunction& f);

/// Thrown by the text parsers; carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

using TruthTable = std::variant<PAryFunction, VectorialFunction>;

/// Reads the "p n [m]" / modulus / values text format.
TruthTable read_truth_table(std::istream& in);
TruthTable read_truth_table_file(const std::string& path);
void write_truth_table(std::ostream& out, const PAryFunction& f);
void write_truth_table(std::ostream& out, const VectorialFunction& F);

}  // namespace plateau
