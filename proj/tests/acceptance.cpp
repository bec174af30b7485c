#include <cstdio>
#include <cstdlib>

#include "lht/verify.hpp"

int main(int argc, char** argv) {
  lht::VerifyOptions options;
  if (const char* s = std::getenv("LHL_SEED")) options.seed = std::strtoull(s, nullptr, 10);
  auto print = [](const lht::CheckResult& r) {
    std::printf("criterion %2d %s: %s (%.1fs) %s\n", r.id, r.passed ? "PASS" : "FAIL", r.name.c_str(), r.seconds,
                r.detail.c_str());
    std::fflush(stdout);
  };
  bool ok = true;
  if (argc > 1) {
    for (int i = 1; i < argc; ++i) {
      const auto r = lht::run_criterion(std::atoi(argv[i]), options);
      print(r);
      ok = ok && r.passed;
    }
  } else {
    for (const auto& r : lht::run_acceptance(options, print)) ok = ok && r.passed;
  }
  return ok ? 0 : 1;
}
