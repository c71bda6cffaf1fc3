// One line per acceptance criterion; nonzero exit if any fails.
#include <cstdlib>
#include <iostream>
#include <string>

#include "knotcert/acceptance.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = knotcert::kDefaultAcceptanceSeed;
  if (argc > 1) seed = std::stoull(argv[1], nullptr, 0);
  const auto results = knotcert::run_acceptance(seed);
  int failed = 0;
  for (const auto& r : results) {
    std::cout << knotcert::format_result(r) << "\n";
    if (!r.passed) {
      ++failed;
      if (!r.detail.empty()) std::cout << "    " << r.detail << "\n";
    }
  }
  std::cout << (results.size() - failed) << "/" << results.size() << " criteria passed\n";
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
