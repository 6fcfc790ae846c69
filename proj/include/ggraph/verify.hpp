#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace ggraph {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  int n = 0;
  std::vector<CheckResult> checks;
  bool ok() const;
};

// "insertion", "partners", "gelfand", "wgraph", "kl", "conjecture".
const std::vector<std::string>& suite_names();

// Runs the invariant checks of one suite for every size 1..n. Throws
// PreconditionError for an unknown suite name. The kl suite stops at n = 6.
SuiteReport run_suite(std::string_view suite, int n);

}  // namespace ggraph
