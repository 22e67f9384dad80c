#pragma once

#include <string>
#include <vector>

namespace flatstat {

struct VerifyOptions {
  int n_max = 8;
  int d_max = 3;
  // Perturbs one computed distribution so the harness can watch a failure.
  bool inject_fault = false;
};

struct SuiteResult {
  std::string suite;
  int checks = 0;
  bool passed = true;
  std::string first_failure;
};

struct VerifyReport {
  std::vector<SuiteResult> suites;

  bool passed() const;
  /// One row per suite: name, checks run, PASS/FAIL, first failure.
  std::string table() const;
};

/// Runs the property suites of every module against the oracle with sizes
/// bounded by n_max and d_max.
VerifyReport run_verify(const VerifyOptions& options);

}  // namespace flatstat
