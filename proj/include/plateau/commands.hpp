#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "plateau/report.hpp"

namespace plateau {

/// Bad flags or inconsistent inputs; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class OutputFormat { Json, Csv };

struct CommandOutput {
  Json report;
  /// Filled when the command has a tabular form.
  std::string csv;
  /// 0 pass, 1 a mathematical check failed.
  int exit_code = 0;
};

/// Exactly one of power, trace_power, file.
struct FunctionSource {
  int p = 0;
  int n = 0;
  std::optional<std::uint64_t> power;
  std::optional<std::uint64_t> trace_power;
  std::optional<std::string> file;
};

CommandOutput cmd_field(int p, int n, const std::optional<std::vector<int>>& modulus);
CommandOutput cmd_analyze(const FunctionSource& source, unsigned jobs);
CommandOutput cmd_partition(int p, int n, std::uint64_t d, unsigned jobs);
CommandOutput cmd_xcorr(int p, int n, std::uint64_t d, unsigned jobs);

struct KroneckerInputs {
  std::optional<std::string> f_file;
  std::optional<std::string> g_file;
  /// Generated form: Tr(x^f_power) on F_{p^n} and Tr(x^g_power) on F_{p^m}.
  int p = 0;
  int n = 0;
  int m = 0;
  std::uint64_t f_power = 0;
  std::uint64_t g_power = 0;
};

/// Writes the direct sum as a truth table to `out` when given.
CommandOutput cmd_kronecker(const KroneckerInputs& inputs, const std::optional<std::string>& out);

/// Set file: first line "p n" or "p n m", then element indices; '#' starts a comment.
struct SetFile {
  AbelianGroup group;
  ElementSet members;
};
SetFile read_set_file(const std::string& path);

CommandOutput cmd_pgds_verify(const std::string& set_file, unsigned jobs);
CommandOutput cmd_matrix_verify(const FunctionSource& source, unsigned jobs);

enum class SweepCheck { Classify, GraphPgds, Partition, Xcorr };

struct SweepJob {
  int p = 0;
  int n = 0;
  std::uint64_t d_from = 1;
  /// Exclusive upper end.
  std::uint64_t d_to = 0;
  std::vector<SweepCheck> checks;
  std::string out_dir;
  unsigned jobs = 1;
  bool bijective_only = false;
};

std::vector<SweepCheck> parse_sweep_checks(const std::string& list);

/// One JSON per d, summary.csv and an append-only resume.log under out_dir.
CommandOutput cmd_sweep(const SweepJob& job);

}  // namespace plateau
