#include "permfix/acceptance.hpp"

#include <iostream>

int main() {
  auto results = permfix::run_acceptance_suite(&std::cout);
  unsigned failed = 0;
  for (const auto& r : results)
    if (!r.passed) ++failed;
  if (failed != 0) {
    std::cout << failed << " of " << results.size() << " criteria failed\n";
    return 1;
  }
  std::cout << "all " << results.size() << " criteria passed\n";
  return 0;
}
