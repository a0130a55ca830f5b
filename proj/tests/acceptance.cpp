// Acceptance suite: one PASS/FAIL line per criterion, then the failing checks.
#include <iomanip>
#include <iostream>

#include "horo/verify.hpp"

int main() {
  const auto results = horo::run_acceptance();
  int failed = 0;
  for (const auto& r : results) {
    std::cout << (r.pass ? "PASS" : "FAIL") << " criterion " << std::setw(2) << r.id << ": " << r.title
              << " (" << std::fixed << std::setprecision(2) << r.seconds << " s)\n";
    for (const auto& c : r.checks) {
      if (!c.pass) {
        std::cout << "     - " << c.name << ": max_error " << std::scientific << std::setprecision(3)
                  << c.max_error << " > tolerance " << c.tolerance << std::fixed << "\n";
      }
    }
    failed += r.pass ? 0 : 1;
  }
  std::cout << results.size() - failed << "/" << results.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
