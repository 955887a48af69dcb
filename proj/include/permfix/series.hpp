#pragma once

#include "permfix/numbers.hpp"
#include "permfix/partitions.hpp"
#include "permfix/power_series.hpp"
#include "permfix/special_functions.hpp"

#include <string>

// Generating functions for the matching action and the wreath-product
// bound. Every series here is even in t and stored in u = t^2, so "order"
// counts u-coefficients: index n corresponds to permutations of 2n points
// (matchings) or to n blocks (wreath).

namespace permfix {

struct AsymptoticConstant {
  double value;
  double tail_bound;  // rigorous bound on the truncation error
  std::string description;
};

namespace series_detail {

// cosh(t^s / s) for odd s, in u: sum_m u^{s m} / (s^{2m} (2m)!).
template <typename T>
PowerSeries<T> cosh_factor(unsigned order, unsigned s) {
  PowerSeries<T> f(order);
  f[0] = T(1);
  Rat denom = 1;
  for (unsigned m = 1; m * s <= order; ++m) {
    denom *= Rat(Int(s) * s * Int(2 * m - 1) * Int(2 * m));
    f[m * s] = from_rat<T>(1 / denom);
  }
  return f;
}

// (1 + u^i/(2i)) exp(-u^i/(2i)) for even cycle length 2i.
template <typename T>
PowerSeries<T> damped_pair_factor(unsigned order, unsigned i) {
  PowerSeries<T> f(order);
  Rat c = 1;
  for (unsigned m = 0; m * i <= order; ++m) {
    f[m * i] = from_rat<T>(c);
    c *= Rat(-1, Int(2 * i) * Int(m + 1));
  }
  PowerSeries<T> lin(order);
  lin[0] = T(1);
  if (i <= order) lin[i] = from_rat<T>(Rat(1, 2 * i));
  return f * lin;
}

// Common factor of every fixed-count series:
//   prod_i (1 + u^i/(2i)) exp(-u^i/(2i)) / sqrt(1-u).
template <typename T>
PowerSeries<T> matchings_count_base(unsigned order) {
  PowerSeries<T> s = inverse_sqrt_one_minus<T>(order);
  for (unsigned i = 1; i <= order; ++i) s *= damped_pair_factor<T>(order, i);
  return s;
}

}  // namespace series_detail

// [u^n] = 1 - P_{2n}(0), the proportion of S_{2n} fixing some matching:
//   prod over odd s of cosh(t^s/s), over sqrt(1-t^2).
template <typename T>
PowerSeries<T> matchings_nonderangement_series(unsigned order) {
  PowerSeries<T> s = inverse_sqrt_one_minus<T>(order);
  for (unsigned odd = 1; odd <= order; odd += 2)
    s *= series_detail::cosh_factor<T>(order, odd);
  return s;
}

// Prefactor polynomial/rational function for the fixed-count series at
// value j; rational denominators expand as alternating geometric series.
// The j = 5 numerator is (t^4/4)^2: the pair of 4-cycles case contributes
// the square of the t^4/4 term (the two-cross-matchings weight), which the
// value of P_5(1) = 27/400 pins down.
template <typename T>
PowerSeries<T> matchings_count_prefactor(unsigned j, unsigned order) {
  PowerSeries<T> lin(order);
  lin[0] = T(1);
  if (order >= 1) lin[1] = from_rat<T>(Rat(1, 2));  // 1 + t^2/2

  switch (j) {
    case 1:
      return lin;
    case 3: {
      // t^4/6 + t^6/18 + t^8/36
      PowerSeries<T> p(order);
      if (order >= 2) p[2] = from_rat<T>(Rat(1, 6));
      if (order >= 3) p[3] = from_rat<T>(Rat(1, 18));
      if (order >= 4) p[4] = from_rat<T>(Rat(1, 36));
      return p;
    }
    case 5: {
      // (1+t^2/2) [ (1/2)(t^4/4)^2/(1+t^4/4) + (1/2)(t^5/5)^2 ]
      PowerSeries<T> inner(order);
      Rat c(1, 32);
      for (unsigned m = 0; 4 + 2 * m <= order; ++m) {
        inner[4 + 2 * m] += from_rat<T>(c);
        c *= Rat(-1, 4);
      }
      if (order >= 5) inner[5] += from_rat<T>(Rat(1, 50));
      return lin * inner;
    }
    case 7: {
      // (1+t^2/2) [ (1/2)(t^6/6)^2/(1+t^6/6) + (1/2)(t^7/7)^2 ]
      //   + (1/6)(t^2/2)^3
      PowerSeries<T> inner(order);
      Rat c(1, 72);
      for (unsigned m = 0; 6 + 3 * m <= order; ++m) {
        inner[6 + 3 * m] += from_rat<T>(c);
        c *= Rat(-1, 6);
      }
      if (order >= 7) inner[7] += from_rat<T>(Rat(1, 98));
      PowerSeries<T> p = lin * inner;
      if (order >= 3) p[3] += from_rat<T>(Rat(1, 48));
      return p;
    }
    default:
      throw domain_error("matchings prefactor: j must be one of 1,3,5,7");
  }
}

// [u^n] = P_{2n}(j) for j in {1,3,5,7}.
template <typename T>
PowerSeries<T> matchings_j_series(unsigned j, unsigned order) {
  return matchings_count_prefactor<T>(j, order) *
         series_detail::matchings_count_base<T>(order);
}

// Exact value of the prefactor at t = 1 (the constant C(j) in the
// asymptotics of P_{2n}(j)).
inline Rat pj_at_one(unsigned j) {
  switch (j) {
    case 1:
      return Rat(3, 2);
    case 3:
      return Rat(1, 6) + Rat(1, 18) + Rat(1, 36);
    case 5:
      return Rat(3, 2) * (Rat(1, 32) / Rat(5, 4) + Rat(1, 50));
    case 7:
      return Rat(3, 2) * (Rat(1, 72) / Rat(7, 6) + Rat(1, 98)) + Rat(1, 48);
    default:
      throw domain_error("pj_at_one: j must be one of 1,3,5,7");
  }
}

// prod_{i>=1} cosh(1/(2i-1)): the non-derangement constant. First N factors
// directly; the rest through log cosh y = sum_m c_m y^{2m} with exact c_m
// and sum_{i>N} (2i-1)^{-2m} = (1-2^{-2m}) zeta(2m) - partial sum. The
// remainder is below (2N-1)^{-(2M+1)}, harmless against the reported bound.
inline AsymptoticConstant A1() {
  constexpr unsigned direct = 200;
  constexpr unsigned tail_terms = 7;  // M
  using boost::multiprecision::cosh;
  using boost::multiprecision::exp;
  using boost::multiprecision::log;
  using boost::multiprecision::pow;

  BigFloat log_total = 0;
  for (unsigned i = 1; i <= direct; ++i)
    log_total += log(cosh(BigFloat(1) / (2 * i - 1)));

  PowerSeries<Rat> cosh_series(tail_terms);
  Rat denom = 1;
  cosh_series[0] = 1;
  for (unsigned m = 1; m <= tail_terms; ++m) {
    denom *= Rat(Int(2 * m - 1) * Int(2 * m));
    cosh_series[m] = 1 / denom;
  }
  PowerSeries<Rat> log_cosh = PowerSeries<Rat>::logarithm(cosh_series);

  for (unsigned m = 1; m <= tail_terms; ++m) {
    BigFloat full = (1 - pow(BigFloat(2), -2 * static_cast<int>(m))) *
                    zeta_value(2 * m);
    for (unsigned i = 1; i <= direct; ++i)
      full -= pow(BigFloat(2 * i - 1), -2 * static_cast<int>(m));
    log_total += to_bigfloat(log_cosh[m]) * full;
  }

  BigFloat value = exp(log_total);
  BigFloat remainder =
      value * (pow(BigFloat(2 * direct - 1),
                   -static_cast<int>(2 * tail_terms + 1)) +
               BigFloat("1e-40"));
  return {value.convert_to<double>(), remainder.convert_to<double>(),
          "infinite product of cosh(1/(2i-1))"};
}

// prod_{i>=1} (1 + 1/(2i)) exp(-1/(2i)): the fixed-count constant. Same
// scheme with log(1+x) - x = sum_{m>=2} (-1)^{m+1} x^m / m and
// sum_{i>N} (2i)^{-m} = 2^{-m} (zeta(m) - partial).
inline AsymptoticConstant B1() {
  constexpr unsigned direct = 200;
  constexpr unsigned tail_terms = 12;  // M
  using boost::multiprecision::exp;
  using boost::multiprecision::log;
  using boost::multiprecision::pow;

  BigFloat log_total = 0;
  for (unsigned i = 1; i <= direct; ++i) {
    BigFloat x = BigFloat(1) / (2 * i);
    log_total += log(1 + x) - x;
  }
  for (unsigned m = 2; m <= tail_terms; ++m) {
    BigFloat tail = zeta_value(m);
    for (unsigned i = 1; i <= direct; ++i)
      tail -= pow(BigFloat(i), -static_cast<int>(m));
    tail *= pow(BigFloat(2), -static_cast<int>(m));
    log_total += (m % 2 == 1 ? tail : -tail) / m;
  }

  BigFloat value = exp(log_total);
  BigFloat remainder =
      value *
      (2 * pow(BigFloat(2 * direct), -static_cast<int>(tail_terms)) +
       BigFloat("1e-40"));
  return {value.convert_to<double>(), remainder.convert_to<double>(),
          "infinite product of (1+1/(2i)) exp(-1/(2i))"};
}

// exp( sum_k u^k (1/k)(1/k+1)...(1/k+a-1) / a! ): [u^n] bounds the
// proportion of S_{an} with an invariant system of n blocks of size a.
template <typename T>
PowerSeries<T> wreath_bound_series(unsigned a, unsigned order) {
  if (a == 0) throw domain_error("wreath_bound_series: a must be positive");
  PowerSeries<T> logs(order);
  for (unsigned k = 1; k <= order; ++k)
    logs[k] = from_rat<T>(rising_factorial_sum(a, k));
  return PowerSeries<T>::exponential(logs);
}

// Leading asymptotics of those coefficients:
//   [u^n] ~ constant * n^(1/a - 1),
//   constant = exp(sum_{r=2..a} p(a,r) zeta(r)) / Gamma(1/a).
inline AsymptoticConstant wreath_bound_asymptotic(unsigned a) {
  if (a == 0)
    throw domain_error("wreath_bound_asymptotic: a must be positive");
  if (a == 1) return {1.0, 0.0, "degenerate: every permutation counts"};
  auto proportions = cycle_count_proportions(a);
  BigFloat exponent_sum = 0;
  for (unsigned r = 2; r <= a; ++r)
    exponent_sum += to_bigfloat(proportions[r - 1]) * zeta_value(r);
  BigFloat constant =
      boost::multiprecision::exp(exponent_sum) / gamma_value(BigFloat(1) / a);
  return {constant.convert_to<double>(), 1e-12,
          "coefficient scale for decay n^(1/a-1)"};
}

// [u^m] of the a = n = m wreath bound.
inline Rat block_system_bound(unsigned m) {
  if (m == 0) throw domain_error("block_system_bound: m must be positive");
  return wreath_bound_series<Rat>(m, m)[m];
}

}  // namespace permfix
