#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sqw {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;  // worst deviation or the failing case
};

struct VerifyOptions {
  int count = 100;         // random stochastic matrices; half as many symmetric/circulant ones
  std::uint64_t seed = 0;
};

/// Classical limits, class equivalence, unitarity, symmetric fixed points, the
/// cycle closed forms and the circulant symmetry regression over seeded random
/// corpora.
std::vector<CheckResult> run_verification(const VerifyOptions& options = {});

bool all_passed(const std::vector<CheckResult>& results) noexcept;

}  // namespace sqw
