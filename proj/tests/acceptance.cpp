// One PASS/FAIL line per acceptance criterion. --slow adds the E7 brute-force stabilizer.
#include <cstdio>
#include <cstring>

#include "rootforge/verify.hpp"

int main(int argc, char** argv) {
  rootforge::VerifyOptions options;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--slow") == 0) options.slow = true;
  bool ok = true;
  rootforge::run_acceptance(options, [&](const rootforge::CriterionResult& r) {
    std::printf("%s criterion %d: %s (%.2fs) %s\n", r.pass ? "PASS" : "FAIL", r.id, r.title.c_str(), r.seconds,
                r.detail.c_str());
    std::fflush(stdout);
    ok = ok && r.pass;
  });
  return ok ? 0 : 1;
}
