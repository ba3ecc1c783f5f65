// One line per acceptance criterion. A criterion passes when its check passes and
// it finishes inside its runtime budget.
#include <cstdio>
#include <string>

#include "ptb/suite.hpp"

int main(int argc, char** argv) {
  ptb::SuiteConfig cfg;
  cfg.seed = 20240611;
  if (argc > 1) cfg.seed = std::stoull(argv[1]);

  int failed = 0;
  for (int id : ptb::selected_criteria(cfg)) {
    const ptb::CheckResult c = ptb::run_criterion(id, cfg);
    const bool in_budget = c.seconds <= c.budget_seconds;
    const bool ok = c.pass && in_budget;
    failed += !ok;
    std::printf("%s  %2d  %-62s %8.2fs / %5.0fs%s\n", ok ? "PASS" : "FAIL", c.id, c.title.c_str(), c.seconds,
                c.budget_seconds, in_budget ? "" : "  (over budget)");
    std::printf("      %s\n", c.summary.c_str());
    std::printf("      tolerances %s\n", c.tolerances.dump().c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %d criteria failed\n", failed, ptb::kCriteriaCount);
  return failed == 0 ? 0 : 1;
}
