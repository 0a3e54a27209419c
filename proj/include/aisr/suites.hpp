#pragma once

// Named verification suites shared by the CLI and the acceptance runner.

#include <cstdint>
#include <string>
#include <vector>

namespace aisr {

struct SuiteCaseResult {
  std::string id;
  bool ok;
  std::string detail;  // witness or note on failure, empty on pass
};

struct SuiteReport {
  std::string suite;
  std::vector<SuiteCaseResult> cases;
  long long passed() const;
  long long failed() const;
  bool ok() const { return failed() == 0 && !cases.empty(); }
};

struct SuiteOptions {
  std::uint64_t seed = 1;
  long long budget = 10'000'000;
  int lemma41_n_max = 6;
  int census_max_order = 4;
};

std::vector<std::string> suite_names();

/// Runs one of: lemma41, prop32, prop41, prop52, basis545, basis634,
/// corollary37, census, distinctness.  Throws std::invalid_argument on an
/// unknown name.
SuiteReport run_suite(const std::string& name, const SuiteOptions& opts = {});

}  // namespace aisr
