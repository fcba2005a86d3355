#pragma once

// Named self-check suites comparing the coupling module against the
// reference table, its own symmetry properties and the independent oracles.

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace soncoup {

struct CaseResult {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail; // expected vs actual on failure
};

struct SuiteOptions {
  int lmax = -1; // negative: the suite's default
  std::uint64_t seed = 1;
};

struct SuiteSummary {
  std::size_t passed = 0;
  std::size_t failed = 0;
  bool ok() const { return failed == 0; }
};

using CaseSink = std::function<void(const CaseResult&)>;

/// table1, symmetry, oracle3j, oracleG, oracleI3, quadrature, all.
const std::vector<std::string>& suite_names();

/// Runs a suite, reporting every case to sink in a deterministic order.
/// Throws std::invalid_argument for an unknown suite name.
SuiteSummary run_suite(std::string_view suite, const SuiteOptions& options, const CaseSink& sink);

} // namespace soncoup
