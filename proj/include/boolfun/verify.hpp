#pragma once
// Self-contained verification batteries: each check evaluates an identity or
// inequality over exhaustive/random/zoo inputs and records its worst
// residual, its threshold, and a reproduction command.

#include <cstdint>
#include <string>
#include <vector>

namespace boolfun {

struct CheckResult {
  std::string name;
  bool passed = false;
  double worst = 0.0;      // worst residual (or worst margin) observed
  double threshold = 0.0;  // pass iff worst <= threshold
  std::string detail;      // human-readable note on the worst case
  std::string repro;       // command that reproduces the failing check
};

struct VerifySummary {
  std::string suite;
  std::vector<CheckResult> checks;
  int passed() const;
  int failed() const;
  bool all_passed() const { return failed() == 0; }
};

struct VerifyOptions {
  int n_max = 10;
  std::uint64_t seed = 1;
  double s0 = 1.0 / 256.0;
  // Deliberately corrupts one input table so the battery must fail; used to
  // prove the checks can detect bad data.
  bool inject_fault = false;
  // Trims the random-table battery (full scale = 10000 tables per n).
  int random_tables = 10000;
};

VerifySummary verify_identities(const VerifyOptions& opts);
VerifySummary verify_inequalities(const VerifyOptions& opts);
VerifySummary verify_gaussian(const VerifyOptions& opts);
std::vector<VerifySummary> verify_suites(const std::string& suite_id,
                                         const VerifyOptions& opts);

}  // namespace boolfun
