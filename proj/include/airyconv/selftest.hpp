#ifndef AIRYCONV_SELFTEST_HPP
#define AIRYCONV_SELFTEST_HPP

#include <string>
#include <vector>

namespace airyconv {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;  // measured value(s) and threshold, fixed format
};

struct SelfTestReport {
  std::vector<CriterionResult> criteria;
  std::string text;  // printable per-criterion PASS/FAIL lines
  bool all_passed = false;
};

// Runs the full verification battery (identities, oracle equivalences,
// order checks, determinism). Deterministic: repeated runs produce
// byte-identical text.
SelfTestReport run_selftest();

}  // namespace airyconv

#endif  // AIRYCONV_SELFTEST_HPP
