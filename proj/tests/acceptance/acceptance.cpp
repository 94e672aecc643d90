#include <cstdio>

#include "verify.hpp"

int main() {
  int failed = 0;
  double total = 0;
  for (const auto& c : zal::verify::run_all()) {
    std::printf("%s criterion %2d  %-45s %8.3fs (budget %gs)  %s\n", c.pass() ? "PASS" : "FAIL", c.id, c.name.c_str(),
                c.seconds, c.budget_seconds, c.detail.c_str());
    total += c.seconds;
    if (!c.pass()) ++failed;
  }
  std::printf("%d of 11 criteria failed, %.2fs total\n", failed, total);
  return failed == 0 ? 0 : 1;
}
