#ifndef WALIGN_VERIFY_HPP
#define WALIGN_VERIFY_HPP

#include <string>
#include <vector>

namespace walign::verify {

struct PropertyResult {
  std::string name;
  bool passed = false;
  std::string counterexample;  // empty when passed
};

// Exhaustive property suite at window n (intended n <= 5); pure
// recomputation, no golden files, no network.
std::vector<PropertyResult> run_suites(int n);

bool all_passed(const std::vector<PropertyResult>& results);

}  // namespace walign::verify

#endif
