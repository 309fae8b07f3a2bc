#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace pcp {

struct CheckResult {
  std::string suite;
  std::string property;
  bool passed = false;
  std::uint64_t checked = 0;  // objects (or pairs) examined
  std::string detail;
};

struct SuiteReport {
  std::vector<CheckResult> checks;
  bool passed() const noexcept;
};

/// Suite names: counts, bijections, schutzenberger, monoid, conditions,
/// conjecture, dsl, all. Sizes above what a suite can exhaust quickly are
/// clipped per check; the clipped bound shows up in `detail`.
/// Throws Error{UnknownSuite}.
SuiteReport run_suite(std::string_view name, int max_size, unsigned threads = 1);

/// "PASS counts/catalan3 (7 checked) ..." one line per check.
std::string format_report(const SuiteReport& report);

}  // namespace pcp
