#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace knotcert {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

inline constexpr std::uint64_t kDefaultAcceptanceSeed = 0x5eed2003;

/// Runs the end-to-end reproduction checks (criteria 1-8), in order.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed = kDefaultAcceptanceSeed);

/// "[PASS] 4 distinctness certificates ... (0.12s)"
std::string format_result(const CriterionResult& r);

}  // namespace knotcert
