#pragma once

#include <string>
#include <vector>

namespace holowave {

// One identity or invariant check: `defect` against `tol`, both recorded so
// the report is auditable.
struct SelftestCheck {
  std::string name;
  double defect = 0.0;
  double tol = 0.0;
  bool pass = false;
};

struct SelftestReport {
  unsigned long long seed = 0;
  std::vector<SelftestCheck> checks;
  int failed = 0;
};

// Runs the operator, projection, reduction and certificate identity suites
// with seeded randomized inputs. Deterministic: the same seed reproduces the
// report exactly.
SelftestReport run_selftest(unsigned long long seed);

std::string selftest_report_to_json(const SelftestReport& report);

}  // namespace holowave
