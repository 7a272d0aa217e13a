#include <chrono>
#include <cstdio>

#include "checks.hpp"

// Runs AC1..AC9 and prints one PASS/FAIL line per criterion. Every
// criterion demands exact equality; no floating-point tolerance applies.
int main() {
  using namespace bigwitt::checks;
  const CheckOptions opts{};
  bool all = true;
  for (const Check& c : acceptance_criteria()) {
    const auto start = std::chrono::steady_clock::now();
    const CheckResult r = run_check(c, opts);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %s %s: %s [%.1fs]\n", r.id.c_str(), r.pass ? "PASS" : "FAIL", r.name.c_str(), r.detail.c_str(), secs);
    std::fflush(stdout);
    all = all && r.pass;
  }
  return all ? 0 : 1;
}
