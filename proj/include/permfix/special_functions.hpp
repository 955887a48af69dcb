#pragma once

#include "permfix/numbers.hpp"

#include <boost/math/constants/constants.hpp>

#include <vector>

// zeta and gamma from first principles (Euler-Maclaurin; Stirling series
// with upward shift). Arguments here are always real and positive, and the
// 240-bit working precision leaves the stated 1e-10 budgets far behind.

namespace permfix {

inline BigFloat pi_constant() {
  return boost::math::constants::pi<BigFloat>();
}

inline BigFloat euler_gamma_constant() {
  return boost::math::constants::euler<BigFloat>();
}

// B_0..B_count via sum_{j<=m} C(m+1,j) B_j = 0 (B_1 = -1/2 convention).
inline std::vector<Rat> bernoulli_numbers(unsigned count) {
  std::vector<Rat> b(count + 1);
  b[0] = 1;
  for (unsigned m = 1; m <= count; ++m) {
    Rat acc = 0;
    for (unsigned j = 0; j < m; ++j) acc += Rat(binomial(m + 1, j)) * b[j];
    b[m] = -acc / Rat(m + 1);
  }
  return b;
}

// zeta(s) for integer s >= 2 by Euler-Maclaurin at pivot N:
//   sum_{n<N} n^-s + N^(1-s)/(s-1) + N^-s/2
//   + sum_k B_2k/(2k)! (s)_(2k-1) N^(-s-2k+1),
// remainder below the first omitted term; N = 40, 20 correction terms put
// that near 1e-60.
inline BigFloat zeta_value(unsigned s) {
  if (s < 2) throw domain_error("zeta_value: need s >= 2");
  constexpr unsigned pivot = 40;
  constexpr unsigned terms = 20;
  static const std::vector<Rat> bernoulli = bernoulli_numbers(2 * terms + 2);
  BigFloat sum = 0;
  for (unsigned n = 1; n < pivot; ++n)
    sum += 1 / boost::multiprecision::pow(BigFloat(n), static_cast<int>(s));
  BigFloat npow =
      boost::multiprecision::pow(BigFloat(pivot), static_cast<int>(s));
  sum += BigFloat(pivot) / (npow * (s - 1));
  sum += 1 / (2 * npow);
  Rat rising = s;  // (s)_(2k-1) = s(s+1)...(s+2k-2)
  Int fact2k = 2;  // (2k)!
  BigFloat nshift = npow * pivot;  // N^(s+2k-1)
  for (unsigned k = 1; k <= terms; ++k) {
    sum += to_bigfloat(bernoulli[2 * k] * rising / fact2k) / nshift;
    rising *= Rat((s + 2 * k - 1) * (s + 2 * k));
    fact2k *= Int(2 * k + 1) * Int(2 * k + 2);
    nshift *= pivot * pivot;
  }
  return sum;
}

// log Gamma by the Stirling series after shifting the argument above 50:
//   (z-1/2) log z - z + log(2 pi)/2 + sum_k B_2k / (2k(2k-1) z^(2k-1)).
inline BigFloat log_gamma_value(BigFloat x) {
  if (x <= 0) throw domain_error("log_gamma_value: need x > 0");
  constexpr unsigned floor_arg = 50;
  constexpr unsigned terms = 30;
  static const std::vector<Rat> bernoulli = bernoulli_numbers(2 * terms);
  BigFloat shift_log = 0;
  while (x < floor_arg) {
    shift_log += boost::multiprecision::log(x);
    x += 1;
  }
  BigFloat result = (x - BigFloat(1) / 2) * boost::multiprecision::log(x) - x +
                    boost::multiprecision::log(2 * pi_constant()) / 2;
  BigFloat zpow = x;  // z^(2k-1)
  for (unsigned k = 1; k <= terms; ++k) {
    result += to_bigfloat(bernoulli[2 * k] / Rat(2 * k * (2 * k - 1))) / zpow;
    zpow *= x * x;
  }
  return result - shift_log;
}

inline BigFloat gamma_value(const BigFloat& x) {
  return boost::multiprecision::exp(log_gamma_value(x));
}

}  // namespace permfix
