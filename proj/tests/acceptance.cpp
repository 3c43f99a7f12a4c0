// Acceptance battery: runs the library self-test (identities, oracle
// equivalences, order and growth checks, determinism) and asserts every
// criterion, printing one PASS/FAIL line each.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>

#include "airyconv/selftest.hpp"

TEST_CASE("acceptance criteria") {
  const auto rep = airyconv::run_selftest();
  std::fputs(rep.text.c_str(), stdout);
  std::fflush(stdout);
  for (const auto& c : rep.criteria) {
    CAPTURE(c.id);
    CAPTURE(c.name);
    CAPTURE(c.detail);
    CHECK_MESSAGE(c.passed, "criterion ", c.id, " (", c.name, "): ", c.detail);
  }
}
