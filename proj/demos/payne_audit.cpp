// Exact output law of the fixed-point repair pass. One left-to-right pass
// always lands on a derangement, but whether the law is uniform depends on
// the starting point and the swap rule; the choice tree settles it exactly.

#include <iostream>
#include <string>

#include "permfix/samplers.hpp"

using namespace permfix;

namespace {

void report(unsigned n, PayneStart start) {
  ChoiceTreeResult r = payne_exact_distribution(n, start);
  std::cout << "degree " << n << ", "
            << (start == PayneStart::Uniform ? "uniform" : "identity")
            << " start: ";
  if (r.uniform) {
    std::cout << "uniform over derangements\n";
    return;
  }
  std::cout << "not uniform (ratio to uniform in [" << r.min_ratio << ", "
            << r.max_ratio << "])\n";
}

}  // namespace

int main() {
  for (unsigned n = 3; n <= 6; ++n) {
    report(n, PayneStart::Uniform);
    report(n, PayneStart::Identity);
  }

  std::cout << "\nswap-with-later leaks mass onto non-derangements:\n";
  for (unsigned n = 3; n <= 6; ++n) {
    ChoiceTreeResult r = payne_exact_distribution(n, PayneStart::Uniform,
                                                  PayneVariant::SwapWithLater);
    std::cout << "  degree " << n << ": non-derangement mass "
              << r.non_derangement_mass << '\n';
  }

  std::cout << "\nmost and least likely outputs, degree 4, uniform start:\n";
  ChoiceTreeResult r = payne_exact_distribution(4, PayneStart::Uniform);
  for (const auto& [w, p] : r.distribution)
    std::cout << "  " << one_line(w) << "  " << p << '\n';
  return 0;
}
