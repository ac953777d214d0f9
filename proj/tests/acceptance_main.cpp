#include <cstdio>

#include "eqm/acceptance.hpp"

int main() {
  bool all = true;
  double total = 0.0;
  for (int id = 1; id <= 10; ++id) {
    const eqm::CriterionResult r = eqm::run_criterion(id);
    std::printf("criterion %2d  %-40s %s  (%6.2fs)  %s\n", r.id, r.title.c_str(),
                r.pass ? "PASS" : "FAIL", r.seconds, r.detail.c_str());
    std::fflush(stdout);
    all = all && r.pass;
    total += r.seconds;
  }
  std::printf("%s (%.2fs total)\n",
              all ? "ACCEPTANCE: all 10 criteria passed" : "ACCEPTANCE: FAILURES PRESENT",
              total);
  return all ? 0 : 1;
}
