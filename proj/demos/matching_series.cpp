// Generating functions for permutations fixing perfect matchings: low-order
// coefficients, the closed forms behind the asymptotic prefactors, and the
// square-root decay visible at degree 400.

#include <cmath>
#include <iomanip>
#include <iostream>

#include "permfix/series.hpp"

using namespace permfix;

int main() {
  PowerSeries<Rat> count = matchings_nonderangement_series<Rat>(8);
  std::cout << "P(some matching on 2n points is fixed), coefficient of u^n:\n";
  for (unsigned n = 0; n <= count.order(); ++n)
    std::cout << "  n = " << n << ": " << count[n] << '\n';

  std::cout << "\nprefactor values p_j(1), j odd:\n";
  for (unsigned j : {1u, 3u, 5u, 7u})
    std::cout << "  j = " << j << ": " << pj_at_one(j) << '\n';

  AsymptoticConstant a = A1();
  AsymptoticConstant b = B1();
  std::cout << '\n'
            << a.description << ":\n  " << std::setprecision(15) << a.value
            << "  (tail below " << std::setprecision(2) << a.tail_bound
            << ")\n";
  std::cout << b.description << ":\n  " << std::setprecision(15) << b.value
            << "  (tail below " << std::setprecision(2) << b.tail_bound
            << ")\n";

  const unsigned order = 200;
  PowerSeries<BigFloat> deep = matchings_nonderangement_series<BigFloat>(order);
  double scaled = (deep[order] * sqrt(pi_constant() * order)).convert_to<double>();
  std::cout << "\ncoefficient decay at degree " << 2 * order
            << ": coeff * sqrt(pi n) = " << std::setprecision(6) << scaled
            << ", constant " << a.value << " (ratio "
            << std::setprecision(4) << scaled / a.value << ")\n";
  return 0;
}
