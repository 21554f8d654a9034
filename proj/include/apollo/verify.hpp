#pragma once

#include <string>
#include <vector>

namespace apollo {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

/// Fast self-checks of the library's exact identities and cross-module
/// agreements; each check runs in well under a second.
std::vector<CheckResult> run_verify_suite(unsigned threads = 1);

}  // namespace apollo
