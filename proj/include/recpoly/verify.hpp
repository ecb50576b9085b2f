#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "recpoly/cubicroots.hpp"

namespace recpoly {

enum class Suite { All, Recursion, Roots, Moments, Dist };

std::optional<Suite> parse_suite(std::string_view name);
std::string suite_name(Suite s);

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;
};

struct Check {
  Suite suite;
  std::string name;
  std::function<CheckResult()> run;
};

struct VerifyReport {
  std::vector<CheckResult> results;

  bool passed() const;
  int exit_code() const { return passed() ? 0 : 1; }
};

/// Closed-form identities at one parameter point: nu > 0, cubic residual of mu +- i nu,
/// the product and trace identities, sign of the discriminant, angle ranges,
/// |c1| > |c3| and r > lambda3. On failure `why` names the first violated one.
bool fundamental_invariants_hold(const FundamentalRoots& fr, std::string* why = nullptr);

/// The built-in checks of one suite (All selects every suite).
std::vector<Check> default_checks(Suite suite);

/// Runs the checks in order. A check that throws is recorded as a failure.
VerifyReport run_checks(const std::vector<Check>& checks);

inline VerifyReport verify(Suite suite) { return run_checks(default_checks(suite)); }

}  // namespace recpoly
