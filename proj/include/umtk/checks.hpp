#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace umtk {

struct CheckOptions {
  std::uint64_t seed = 424242;
  /// Overrides every suite's trial count when set.
  std::optional<std::size_t> trials;
  /// Caps the point count of generated instances when set.
  std::optional<std::size_t> max_n;
};

struct SuiteResult {
  int id = 0;
  std::string name;
  std::size_t trials = 0;
  std::size_t failures = 0;
  /// Instances on which the decision was positive (coverage indicator).
  std::size_t positives = 0;
  double seconds = 0.0;
  /// Wall-clock budget in seconds; 0 means none.
  double time_limit = 0.0;
  std::string detail;

  bool correct() const { return failures == 0; }
  bool in_time() const { return time_limit <= 0.0 || seconds < time_limit; }
  bool passed() const { return correct() && in_time(); }
};

inline constexpr int kSuiteCount = 10;
/// Budget for the whole default run.
inline constexpr double kTotalTimeLimit = 180.0;

/// Runs one property suite (1..kSuiteCount) at the given options.
SuiteResult run_suite(int id, const CheckOptions& options);

std::vector<SuiteResult> run_all_suites(const CheckOptions& options);

/// One line, e.g. "[PASS] 1 round-trip ... 500 trials, 0 failures, 0.41 s".
std::string format_result(const SuiteResult& r);

}  // namespace umtk
