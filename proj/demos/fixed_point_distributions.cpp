// Exact fixed-point laws for the k-set and matching actions, with the
// rank sandwich around the no-fixed-point probability.

#include <iomanip>
#include <iostream>

#include "permfix/distributions.hpp"
#include "permfix/limits.hpp"

using namespace permfix;

namespace {

void print_law(const ExactDistribution& d, const char* name) {
  std::cout << name << " (degree " << d.degree << ")\n";
  for (const auto& [value, p] : d.support)
    std::cout << "  P(F = " << value << ") = " << p << "  ~ " << std::fixed
              << std::setprecision(6) << to_double(p) << '\n';
  std::cout << "  mean " << d.mean() << ", variance " << d.variance() << '\n';
  RankBounds b = rank_bounds(d);
  std::cout << "  rank sandwich: " << b.lower << " <= P(F = 0) = "
            << derangement_proportion(d) << " <= " << b.upper << "\n\n";
}

}  // namespace

int main() {
  print_law(distribution_ksets(8, 2), "2-sets of an 8-point set");
  print_law(distribution_ksets(10, 3), "3-sets of a 10-point set");
  print_law(distribution_matchings(8), "perfect matchings on 8 points");

  std::cout << "convergence of P(F = 0) toward its limit, k = 2:\n";
  CertifiedProbability limit = limit_prob_exact(2, Int(0));
  for (unsigned n = 4; n <= 24; n += 4) {
    Rat p = derangement_proportion(distribution_ksets(n, 2));
    std::cout << "  n = " << std::setw(2) << n << ": " << std::fixed
              << std::setprecision(10) << to_double(p) << "  (limit "
              << limit.value << ")\n";
  }
  return 0;
}
