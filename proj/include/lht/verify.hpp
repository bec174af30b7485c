#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace lht {

struct CheckResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

struct VerifyOptions {
  std::uint64_t seed = 20240601;
  unsigned workers = 0;  // 0: hardware concurrency
  int max_cells = 6;     // oracle suite size
};

constexpr int kCriteria = 12;

std::string criterion_name(int id);
CheckResult run_criterion(int id, const VerifyOptions& options = {});

// Runs every criterion in order, reporting each result as soon as it is known.
std::vector<CheckResult> run_acceptance(const VerifyOptions& options = {},
                                        const std::function<void(const CheckResult&)>& report = {});

// Exact cross-checks over every shape with at most max_cells cells, n <= 3, t <= 3.
std::vector<CheckResult> run_oracles(const VerifyOptions& options = {},
                                     const std::function<void(const CheckResult&)>& report = {});

}  // namespace lht
