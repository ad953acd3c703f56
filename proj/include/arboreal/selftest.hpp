#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace arboreal {

struct SelftestOptions {
  // Criterion ids to run; empty means all.
  std::vector<int> only;
  // Wall-clock cap for the whole run in seconds; 0 means none.
  double budget_seconds = 0;
  // Runs criteria on separate threads.
  bool parallel = true;
  std::uint64_t seed = 1;

  // Defaults with the budget taken from ARBOREAL_SELFTEST_BUDGET.
  static SelftestOptions from_environment();
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  // Ran out of budget before finishing; never counts as a pass.
  bool skipped = false;
  std::size_t cases = 0;
  double seconds = 0;
  std::string detail;
};

inline constexpr int kCriterionCount = 11;

// Runs the acceptance criteria, printing one line per criterion to `out` in id
// order.
std::vector<CriterionResult> run_acceptance(const SelftestOptions& options, std::ostream& out);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace arboreal
