#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "plateau/commands.hpp"

using namespace plateau;

namespace {

struct Options {
  int p = 3;
  int n = 3;
  int m = 0;
  std::optional<std::uint64_t> power;
  std::optional<std::uint64_t> trace_power;
  std::uint64_t d = 1;
  std::vector<std::string> files;
  std::string out;
  unsigned jobs = 1;
  bool bijective_only = false;
  std::string format = "json";
  std::vector<int> modulus;
  std::uint64_t d_from = 1;
  std::optional<std::uint64_t> d_to;
  std::string checks = "classify,graph-pgds";
  bool timing = false;
};

FunctionSource source_of(const Options& o) {
  FunctionSource s{o.p, o.n, o.power, o.trace_power, std::nullopt};
  if (o.files.size() > 1) throw UsageError("give at most one --file");
  if (!o.files.empty()) s.file = o.files.front();
  return s;
}

void emit(const CommandOutput& result, const Options& o, bool out_is_report) {
  std::string text;
  if (o.format == "csv") {
    if (result.csv.empty()) throw UsageError("this command has no CSV form");
    text = result.csv;
  } else {
    text = result.report.dump(2) + "\n";
  }
  if (out_is_report && !o.out.empty()) {
    std::ofstream os(o.out, std::ios::binary);
    if (!os) throw std::runtime_error("cannot write " + o.out);
    os << text;
  } else {
    std::cout << text;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact analysis of plateaued functions, partial geometric difference sets and cross-correlation"};
  app.require_subcommand(1);
  Options o;

  auto add_field = [&](CLI::App* c) {
    c->add_option("--p", o.p, "Characteristic")->check(CLI::Range(2, CycInt::kMaxPrime));
    c->add_option("--n", o.n, "Extension degree")->check(CLI::PositiveNumber);
  };
  auto add_common = [&](CLI::App* c) {
    c->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
    c->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    c->add_flag("--timing", o.timing, "Print elapsed time to stderr");
  };
  auto add_source = [&](CLI::App* c) {
    add_field(c);
    c->add_option("--power", o.power, "F(x) = x^d into F_{p^n}");
    c->add_option("--trace-power", o.trace_power, "f(x) = Tr(x^d)");
    c->add_option("--file", o.files, "Truth-table file");
    c->add_option("--out", o.out, "Write the report here instead of stdout");
  };

  auto* field = app.add_subcommand("field", "Canonical modulus, primitive element and trace summary");
  add_field(field);
  add_common(field);
  field->add_option("--modulus", o.modulus, "Monic irreducible modulus c_0,...,c_n")->delimiter(',');
  field->add_option("--out", o.out, "Write the report here instead of stdout");

  auto* analyze = app.add_subcommand("analyze", "Classify a function and cross-check its graph and derivatives");
  add_source(analyze);
  add_common(analyze);

  auto* partition = app.add_subcommand("partition", "Level sets of Tr(x^d) over F_{3^n} as difference sets");
  add_field(partition);
  add_common(partition);
  partition->add_option("--d", o.d, "Exponent")->required();
  partition->add_option("--out", o.out, "Write the report here instead of stdout");

  auto* xcorr = app.add_subcommand("xcorr", "Cross-correlation of an m-sequence and its d-decimation");
  add_field(xcorr);
  add_common(xcorr);
  xcorr->add_option("--d", o.d, "Decimation")->required();
  xcorr->add_option("--out", o.out, "Write the report here instead of stdout");

  auto* kron = app.add_subcommand("kronecker", "Direct sum of two functions and the Kronecker identity");
  add_field(kron);
  add_common(kron);
  kron->add_option("--file", o.files, "Truth-table files f and g")->expected(0, 2);
  kron->add_option("--m", o.m, "Degree of the second field (generated form)");
  kron->add_option("--trace-power", o.trace_power, "f = Tr(x^d) on F_{p^n} (generated form)");
  kron->add_option("--d", o.d, "g = Tr(x^d) on F_{p^m} (generated form)");
  kron->add_option("--out", o.out, "Write the direct sum truth table here");

  auto* pgds = app.add_subcommand("pgds-verify", "Test a subset of an abelian group for the PGDS property");
  add_common(pgds);
  pgds->add_option("--file", o.files, "Set file")->required();
  pgds->add_option("--out", o.out, "Write the report here instead of stdout");

  auto* matrix = app.add_subcommand("matrix-verify", "Matrix, derivative and linear-structure characterizations");
  add_source(matrix);
  add_common(matrix);

  auto* sweep = app.add_subcommand("sweep", "Run checks over a range of exponents, resumably");
  add_field(sweep);
  add_common(sweep);
  sweep->add_option("--d-from", o.d_from, "First exponent");
  sweep->add_option("--d-to", o.d_to, "End of the range (exclusive); default p^n - 1");
  sweep->add_option("--checks", o.checks, "Comma list of classify, graph-pgds, partition, xcorr");
  sweep->add_option("--out", o.out, "Output directory")->required();
  sweep->add_flag("--bijective-only", o.bijective_only, "Skip d with gcd(d, p^n - 1) != 1");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const auto start = std::chrono::steady_clock::now();
  int code = 0;
  try {
    if (*field) {
      std::optional<std::vector<int>> mod;
      if (!o.modulus.empty()) mod = o.modulus;
      auto r = cmd_field(o.p, o.n, mod);
      emit(r, o, true);
      code = r.exit_code;
    } else if (*analyze) {
      auto r = cmd_analyze(source_of(o), o.jobs);
      emit(r, o, true);
      code = r.exit_code;
    } else if (*partition) {
      auto r = cmd_partition(o.p, o.n, o.d, o.jobs);
      emit(r, o, true);
      code = r.exit_code;
    } else if (*xcorr) {
      auto r = cmd_xcorr(o.p, o.n, o.d, o.jobs);
      emit(r, o, true);
      code = r.exit_code;
    } else if (*kron) {
      KroneckerInputs in;
      if (!o.files.empty()) {
        if (o.files.size() != 2) throw UsageError("kronecker needs two --file arguments");
        in.f_file = o.files[0];
        in.g_file = o.files[1];
      } else {
        if (!o.trace_power) throw UsageError("kronecker needs two --file arguments, or --m --trace-power --d");
        in = KroneckerInputs{std::nullopt, std::nullopt, o.p, o.n, o.m, *o.trace_power, o.d};
      }
      std::optional<std::string> out;
      if (!o.out.empty()) out = o.out;
      auto r = cmd_kronecker(in, out);
      emit(r, o, false);
      code = r.exit_code;
    } else if (*pgds) {
      if (o.files.size() != 1) throw UsageError("pgds-verify needs one --file");
      auto r = cmd_pgds_verify(o.files.front(), o.jobs);
      emit(r, o, true);
      code = r.exit_code;
    } else if (*matrix) {
      auto r = cmd_matrix_verify(source_of(o), o.jobs);
      emit(r, o, true);
      code = r.exit_code;
    } else if (*sweep) {
      SweepJob job;
      job.p = o.p;
      job.n = o.n;
      job.d_from = o.d_from;
      if (o.d_to) {
        job.d_to = *o.d_to;
      } else {
        std::uint64_t q = 1;
        for (int i = 0; i < o.n; ++i) q *= static_cast<std::uint64_t>(o.p);
        job.d_to = q - 1;
      }
      job.checks = parse_sweep_checks(o.checks);
      job.out_dir = o.out;
      job.jobs = o.jobs;
      job.bijective_only = o.bijective_only;
      auto r = cmd_sweep(job);
      Options stdout_only = o;
      stdout_only.out.clear();
      emit(r, stdout_only, true);
      code = r.exit_code;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  if (o.timing) {
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
    std::cerr << "elapsed " << dt.count() << " s\n";
  }
  return code;
}
