#pragma once

#include <string>
#include <vector>

namespace lke {

struct CheckResult {
  std::string name;
  bool pass;
  std::string detail;
};

// Runs every module invariant and returns one result per check.
std::vector<CheckResult> run_verification(unsigned threads = 1);

}  // namespace lke
