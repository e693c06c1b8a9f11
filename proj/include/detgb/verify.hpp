#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "detgb/ring.hpp"

namespace detgb {

/// Verification suites; each one checks a family of identities or Groebner
/// basis claims for a given matrix shape.
enum class Suite { Gb, SkGb, Reduced, Regseq, Syzygy, SpairDescent, Laplace, Cofactor, Colon, Hilbert, All };

Suite parse_suite(std::string_view name);
std::string suite_name(Suite suite);
/// The concrete suites behind `suite` (All expands to the other ten).
std::vector<Suite> expand_suite(Suite suite);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string witness;  // counterexample in polynomial text form, empty on pass
  double millis = 0.0;
};

struct SuiteReport {
  std::string suite;
  MatrixShape shape = MatrixShape::square(1);
  std::vector<CheckResult> checks;  // sorted by name

  bool passed() const;
};

struct VerifyOptions {
  /// Worker threads for independent checks; 0 or 1 runs serially.
  unsigned threads = 0;
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

/// Runs one suite (or all of them) for a shape. Throws BudgetExceeded when
/// the deadline passes.
SuiteReport run_suite(Suite suite, const MatrixShape& shape, const VerifyOptions& options = {});

/// Reads DETGB_THREADS (unset or 0 means serial).
unsigned threads_from_env();

}  // namespace detgb
