#pragma once

#include "wonderful/catalog.hpp"

#include <map>
#include <string>
#include <vector>

namespace wonderful {

/// Structural identities checked on built records, grouped by suite.
/// Check names are "<suite>/<name>".
std::vector<CheckResult> root_core_suite(const RootSystem& rs);
std::vector<CheckResult> dimension_suite(const SymmetricSpaceRecord& rec);
std::vector<CheckResult> nilpotent_suite(const SymmetricSpaceRecord& rec);
std::vector<CheckResult> restricted_suite(const SymmetricSpaceRecord& rec);
std::vector<CheckResult> curve_suite(const SymmetricSpaceRecord& rec);

/// All suites above for one record, root-core included.
std::vector<CheckResult> invariant_checks(const SymmetricSpaceRecord& rec);

struct CheckFailure {
  std::string instance;
  std::string check;
  std::string detail;
};

struct CheckSummary {
  std::size_t instances = 0;
  std::map<std::string, std::pair<std::size_t, std::size_t>> counts;  // check → (passed, total)
  std::vector<CheckFailure> failures;
  bool ok() const { return failures.empty(); }
};

/// Table checks plus every invariant suite over the given instances.
CheckSummary run_checks(const std::vector<InstanceData>& items);

}  // namespace wonderful
