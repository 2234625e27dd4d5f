// Acceptance gate: runs every verification check once and prints one
// pass/fail line per check.
//
// Two checks assert inequalities that are genuinely violated at small
// moduli (see README): they are reported FAIL but tracked as expected, so
// the gate's exit status flags only *changes* in any check's status.

#include <cstdio>
#include <set>
#include <string>

#include "klsp4/verify.hpp"

int main() {
  const std::set<std::string> expected_red = {"term count bound",
                                             "classical rank-one bound"};
  std::vector<klsp4::CheckResult> results = klsp4::run_all_checks();
  int unexpected = 0;
  int index = 0;
  for (const klsp4::CheckResult& res : results) {
    ++index;
    bool expect_fail = expected_red.count(res.name) > 0;
    const char* status = res.pass ? "PASS" : (expect_fail ? "FAIL (expected)" : "FAIL");
    std::printf("[%2d/%2d] %s  %s: %s\n", index, static_cast<int>(results.size()),
                status, res.name.c_str(), res.details.c_str());
    if (res.pass == expect_fail) ++unexpected;
  }
  if (unexpected > 0)
    std::printf("%d of %d checks changed status unexpectedly\n", unexpected, index);
  return unexpected == 0 ? 0 : 1;
}
