// Runs every acceptance criterion and prints one line per criterion.
// Optional argument: --jobs W.

#include <cstdlib>
#include <cstring>
#include <iostream>

#include "ospcohom/verify.hpp"

int main(int argc, char** argv) {
  ospcohom::RunConfig cfg;
  for (int i = 1; i + 1 < argc; ++i)
    if (std::strcmp(argv[i], "--jobs") == 0) cfg.jobs = std::atoi(argv[i + 1]);
  int failed = 0;
  for (int n = 1; n <= ospcohom::criterion_count; ++n) {
    const auto c = ospcohom::run_criterion(n, cfg);
    int passed = 0;
    for (const auto& x : c.cases) passed += x.pass;
    std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << n << ". " << c.title << " (" << passed << "/" << c.cases.size()
              << ")\n";
    for (const auto& x : c.cases)
      if (!x.pass) std::cout << "       " << x.id << ": " << x.witness.dump() << "\n";
    for (const auto& note : c.notes) std::cout << "       note: " << note << "\n";
    std::cout.flush();
    failed += !c.pass;
  }
  std::cout << (failed ? "acceptance: FAILED " : "acceptance: all passed ") << "(" << failed << " of "
            << ospcohom::criterion_count << " failing)\n";
  return failed ? 1 : 0;
}
