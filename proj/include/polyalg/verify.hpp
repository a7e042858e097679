#pragma once

#include <string>
#include <vector>

#include "polyalg/generate.hpp"

namespace polyalg {

enum class Inject { none, attack_flip, formula_sign };

struct VerifyOptions {
  int max_rank = 12;     // main closed-path corpus bound
  int w_rank = 20;       // bound for the W-configuration / zig-zag corpora
  int simple_rank = 7;   // simple-polyomino corpus bound
  int threads = 0;       // 0 = hardware concurrency
  bool with_fixtures = true;     // include the stored ladder3 instances
  Inject inject = Inject::none;  // negative controls for the test harness
};

struct CheckResult {
  std::string name;
  bool pass = true;
  long instances = 0;
  std::vector<std::string> failures;  // per-instance artifacts (grid text + reason)
};

/// Runs every corpus property suite; one CheckResult per suite.
std::vector<CheckResult> run_verification(const VerifyOptions& opts);

/// Smallest known closed paths whose anchored ladder has both blocks of at
/// least three cells (rank 28 and 30); structural preconditions re-checked
/// by the suites that use them.
std::vector<Polyomino> ladder3_fixtures();

}  // namespace polyalg
