#pragma once

#include <string>
#include <vector>

namespace gbl {

struct CheckResult {
  std::string id;
  std::string description;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

// The full verification gate (the CLI exposes it as the "paper" suite): closed-form parameter values, exact
// enumerated constants, divergence tables, oracle equivalences, pointwise
// symmetry checks, projection separation and weight machinery.
std::vector<CheckResult> run_full_suite();

// Brute-force equivalence checks only (evaluators vs literal enumeration).
std::vector<CheckResult> run_oracle_suite();

// Prints one PASS/FAIL line per check; returns 0 when all pass, 1 otherwise.
int report_results(const std::vector<CheckResult>& results);

// Deterministic differential-test vector library (supports <= 6, indices
// within [1, 24], quantized coefficient levels, seed 0x5EED).
}  // namespace gbl
