#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "grasp/boson.hpp"

namespace grasp {

inline constexpr const char* kSuiteVersion = "1.0.0";

enum class VerifyScope { Fermion, Boson, All };

std::optional<VerifyScope> parse_scope(const std::string& text);
std::string scope_name(VerifyScope scope);

/// One executed identity check.  `anchor` names the identity or behavior
/// the check pins.  Guard checks invert the pass condition: they assert
/// that a residual EXCEEDS the threshold (e.g. that a deliberately wrong
/// sign rule breaks a resolution of the identity).
struct CheckResult {
  std::string name;
  std::string anchor;
  bool guard = false;
  bool passed = false;
  double residual = 0.0;
  double tolerance = 0.0;
  double elapsed_ms = 0.0;
  std::string error;  // non-empty when the check threw
};

/// Grid/truncation parameters for the bosonic checks that are not pinned
/// to fixed values.
struct BosonVerifyParams {
  int dim = 20;
  double halfwidth = 6.0;
  int points = 121;
};

struct VerificationReport {
  std::string suite_version = kSuiteVersion;
  std::string scope;
  std::uint64_t seed = 1;
  std::vector<std::string> notes;
  std::vector<CheckResult> checks;

  int passed_count() const;
  int failed_count() const;
  bool all_passed() const { return failed_count() == 0; }
  const CheckResult* find(const std::string& name) const;
};

/// Runs every identity check in the requested scope.  Deterministic for a
/// fixed seed (except for the elapsed timings).
VerificationReport run_verification(VerifyScope scope, std::uint64_t seed,
                                    const BosonVerifyParams& params = {});

std::string report_to_json(const VerificationReport& report);

/// Acceptance criteria: named groups of suite checks, optionally with a
/// wall-clock budget in milliseconds (0 = none).
struct CriterionSpec {
  int number = 0;
  std::string title;
  std::vector<std::string> check_names;
  double budget_ms = 0.0;
};

const std::vector<CriterionSpec>& acceptance_criteria();

}  // namespace grasp
