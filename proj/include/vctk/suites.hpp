#pragma once

// Self-consistency suites behind `vctk verify <suite>`.

#include <cstdint>
#include <string>
#include <vector>

namespace vctk {

struct CheckResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  /// First failing case, empty when all pass.
  std::string detail;

  bool passed() const { return failures == 0; }
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;

  bool passed() const;
};

struct SuiteOptions {
  std::uint64_t seed = 42;
  /// Number of randomized cases where a suite draws them.
  std::size_t random = 100;
};

const std::vector<std::string>& suite_names();

/// Throws InputError for an unknown suite name.
SuiteReport run_suite(const std::string& name, const SuiteOptions& options = {});

}  // namespace vctk
