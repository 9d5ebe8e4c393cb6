// Runs the twelve acceptance criteria and prints one line per criterion.

#include <cstdio>

#include "gba/scenarios.hpp"

int main() {
  int failed = 0;
  const auto& ids = gba::acceptance_scenarios();
  for (std::size_t i = 0; i < ids.size(); ++i) {
    gba::Report r;
    try {
      r = gba::run(ids[i]);
    } catch (const std::exception& e) {
      r.id = ids[i];
      r.check(false, e.what());
    }
    const bool ok = r.result == gba::status::pass;
    failed += !ok;
    std::printf("criterion %2zu %-22s %s (%.2fs)\n", i + 1, ids[i].c_str(), ok ? "PASS" : "FAIL", r.seconds);
    for (const auto& f : r.failures) std::printf("    %s\n", f.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failed, ids.size());
  return failed ? 1 : 0;
}
