#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "output_record.hpp"
#include "soncoup/soncoup.h"

namespace {

using soncoup::cli::OutputRecord;

constexpr int kExitOk = 0;
constexpr int kExitFailures = 1;
constexpr int kExitUndefined = 2;
constexpr int kExitUsage = 64;
constexpr int kExitPole = 65;
constexpr int kExitSoftware = 70;
constexpr int kTableMaxL = 8;

struct ValueDeleter {
  void operator()(soncoup_value* v) const { soncoup_value_free(v); }
};
using Value = std::unique_ptr<soncoup_value, ValueDeleter>;

// Failure from the C API, carrying the exit code it maps to.
struct ApiFailure {
  int exit_code;
  std::string message;
};

void check(soncoup_status status) {
  if (status == SONCOUP_OK) return;
  int code = kExitSoftware;
  switch (status) {
  case SONCOUP_ERR_UNDEFINED: code = kExitUndefined; break;
  case SONCOUP_ERR_POLE: code = kExitPole; break;
  case SONCOUP_ERR_INVALID_ARGUMENT:
  case SONCOUP_ERR_PARSE: code = kExitUsage; break;
  default: break;
  }
  throw ApiFailure{code, soncoup_last_error()};
}

// Calls a C API function that hands back an owned string.
template <class F>
std::string api_string(F&& f) {
  char* s = nullptr;
  check(f(&s));
  std::string out(s);
  soncoup_string_free(s);
  return out;
}

enum class Format { json, csv, latex };

struct ModeFlags {
  std::optional<long> n;
  bool symbolic = false;
  long api_n() const { return n ? *n : SONCOUP_SYMBOLIC; }
};

void add_mode_flags(CLI::App* cmd, ModeFlags& mode) {
  auto* n = cmd->add_option("--n", mode.n, "Fixed dimension n (integer >= 2)")->check(CLI::Range(2L, 1L << 30));
  auto* s = cmd->add_flag("--symbolic", mode.symbolic, "Rational function of n");
  n->excludes(s);
}

void add_format_flag(CLI::App* cmd, Format& format) {
  cmd->add_option("--format", format, "Output format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Format>{{"json", Format::json}, {"csv", Format::csv}, {"latex", Format::latex}}));
}

Value compute_value(const std::string& quantity, const std::vector<int>& labels, long n) {
  soncoup_value* raw = nullptr;
  if (quantity == "I") check(soncoup_i_alpha(labels.data(), n, &raw));
  else if (quantity == "calpha") check(soncoup_c_alpha(labels.data(), n, &raw));
  else if (quantity == "sixj2") check(soncoup_sixj_squared(labels.data(), n, &raw));
  else if (quantity == "sixj") check(soncoup_sixj(labels.data(), n, &raw));
  else if (quantity == "threej2") check(soncoup_threej_squared(labels.data(), 0, n, &raw));
  return Value(raw);
}

OutputRecord make_record(const std::string& quantity, const std::vector<int>& labels, const ModeFlags& mode) {
  Value v = compute_value(quantity, labels, mode.api_n());
  OutputRecord r;
  r.labels = labels;
  r.n = mode.n;
  r.quantity = quantity;
  r.value = nlohmann::json::parse(api_string([&](char** s) { return soncoup_value_to_json(v.get(), s); }));
  r.factored = api_string([&](char** s) { return soncoup_value_to_string(v.get(), s); });
  r.latex = api_string([&](char** s) { return soncoup_value_to_latex(v.get(), s); });
  if (soncoup_value_get_kind(v.get()) != SONCOUP_VALUE_SQRT_RATIONAL) {
    char *num = nullptr, *den = nullptr;
    check(soncoup_value_coefficients(v.get(), &num, &den));
    r.num = num;
    r.den = den;
    soncoup_string_free(num);
    soncoup_string_free(den);
  }
  return r;
}

void emit(const std::vector<OutputRecord>& records, Format format) {
  if (format == Format::csv) std::cout << soncoup::cli::csv_header() << '\n';
  for (const auto& r : records) {
    switch (format) {
    case Format::json: std::cout << soncoup::cli::to_json(r).dump() << '\n'; break;
    case Format::csv: std::cout << soncoup::cli::to_csv(r) << '\n'; break;
    case Format::latex: std::cout << soncoup::cli::to_latex_row(r) << '\n'; break;
    }
  }
}

int cmd_compute(const std::string& quantity, const std::vector<int>& labels, const ModeFlags& mode, Format format) {
  const std::size_t want = quantity == "threej2" ? 3 : 6;
  if (labels.size() != want) {
    std::cerr << "error: " << quantity << " takes " << want << " labels, got " << labels.size() << '\n';
    return kExitUsage;
  }
  if (mode.n.has_value() == mode.symbolic) {
    std::cerr << "error: give exactly one of --n N or --symbolic\n";
    return kExitUsage;
  }
  if (quantity == "sixj" && mode.symbolic) {
    std::cerr << "error: the signed 6j-symbol needs a fixed --n (use sixj2 for the symbolic square)\n";
    return kExitUsage;
  }
  emit({make_record(quantity, labels, mode)}, format);
  return kExitOk;
}

int cmd_table(int lmax, const ModeFlags& mode, Format format, bool nonzero_only, const std::string& quantity) {
  std::vector<OutputRecord> rows;
  std::vector<int> l(6, 0);
  int canon[6];
  // Odometer over all tuples in lexicographic order; keep orbit minima.
  for (;;) {
    check(soncoup_canonical_labels(l.data(), canon));
    if (std::equal(l.begin(), l.end(), canon) && (!nonzero_only || soncoup_labels_admissible(l.data()))) {
      OutputRecord r = make_record(quantity, l, mode);
      if (!nonzero_only || r.factored != "0") rows.push_back(std::move(r));
    }
    int i = 5;
    while (i >= 0 && l[i] == lmax) l[i--] = 0;
    if (i < 0) break;
    ++l[i];
  }
  emit(rows, format);
  return kExitOk;
}

int cmd_verify(const std::string& suite, int lmax, std::uint64_t seed) {
  std::size_t passed = 0, failed = 0;
  auto report = [](const char* s, const char* name, int ok, const char* detail, void*) {
    std::printf("%s %s %s%s%s\n", ok ? "PASS" : "FAIL", s, name, ok ? "" : ": ", ok ? "" : detail);
  };
  check(soncoup_verify(suite.c_str(), lmax, seed, report, nullptr, &passed, &failed));
  std::printf("summary: %zu passed, %zu failed\n", passed, failed);
  return failed == 0 ? kExitOk : kExitFailures;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact coupling coefficients of class-one representations of SO(n)"};
  app.set_version_flag("--version", soncoup_version());
  app.require_subcommand(1);

  std::string quantity = "I";
  std::vector<int> labels;
  ModeFlags compute_mode;
  Format compute_format = Format::json;
  auto* compute = app.add_subcommand("compute", "Compute one coefficient");
  compute->add_option("quantity", quantity, "I, threej2, sixj, sixj2 or calpha")
      ->required()
      ->check(CLI::IsMember({"I", "threej2", "sixj", "sixj2", "calpha"}));
  compute->add_option("--labels", labels, "Comma-separated labels l1,...,l6 (three for threej2)")
      ->required()
      ->delimiter(',')
      ->check(CLI::NonNegativeNumber);
  add_mode_flags(compute, compute_mode);
  add_format_flag(compute, compute_format);

  int table_lmax = 0;
  ModeFlags table_mode;
  Format table_format = Format::json;
  bool nonzero_only = false;
  std::string table_quantity = "I";
  auto* table = app.add_subcommand("table", "Tabulate one representative per symmetry orbit");
  table->add_option("--lmax", table_lmax, "Largest label")->required()->check(CLI::Range(0, kTableMaxL));
  add_mode_flags(table, table_mode);
  add_format_flag(table, table_format);
  table->add_flag("--nonzero-only", nonzero_only, "Skip vanishing rows");
  table->add_option("--quantity", table_quantity, "I or calpha")->check(CLI::IsMember({"I", "calpha"}));

  std::string suite = "all";
  int verify_lmax = -1;
  std::uint64_t seed = 1;
  auto* verify = app.add_subcommand("verify", "Run a self-check suite");
  verify->add_option("--suite", suite, "table1, symmetry, oracle3j, oracleG, oracleI3, quadrature or all")
      ->check(CLI::IsMember({"table1", "symmetry", "oracle3j", "oracleG", "oracleI3", "quadrature", "all"}));
  verify->add_option("--lmax", verify_lmax, "Largest label (default depends on the suite)");
  verify->add_option("--seed", seed, "Seed for randomized suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*compute) return cmd_compute(quantity, labels, compute_mode, compute_format);
    if (*table) return cmd_table(table_lmax, table_mode, table_format, nonzero_only, table_quantity);
    return cmd_verify(suite, verify_lmax, seed);
  } catch (const ApiFailure& e) {
    std::cerr << "error: " << e.message << '\n';
    return e.exit_code;
  }
}
