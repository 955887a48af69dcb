#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace permfix {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Asymptotic evaluations run at 240 binary digits; exact cross-checks never
// leave Rat, so BigFloat shows up only where a limit or a transcendental
// constant is genuinely irrational.
using BigFloat = boost::multiprecision::number<
    boost::multiprecision::cpp_bin_float<240, boost::multiprecision::digit_base_2>>;

// Precondition violations (bad degree, k out of range, odd degree for
// matchings, ...).
struct domain_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Requests past a configured cap (degree cap, series order cap, ...).
struct capacity_error : std::length_error {
  using std::length_error::length_error;
};

inline Int factorial(unsigned n) {
  Int r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

inline Int binomial(const Int& n, unsigned k) {
  if (n >= 0 && Int(k) > n) return 0;
  Int num = 1;
  for (unsigned i = 0; i < k; ++i) num *= n - i;
  return num / factorial(k);
}

inline Int binomial(unsigned n, unsigned k) { return binomial(Int(n), k); }

// (2k-1)!! = 1*3*5*...*(2k-1); the k=0 empty product is 1.
inline Int odd_double_factorial(unsigned k) {
  Int r = 1;
  for (unsigned i = 1; i < 2 * k; i += 2) r *= i;
  return r;
}

inline Int int_pow(Int base, unsigned e) {
  Int r = 1;
  while (e) {
    if (e & 1u) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

inline Rat rat_pow(const Rat& base, unsigned e) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  return Rat(int_pow(numerator(base), e), int_pow(denominator(base), e));
}

inline BigFloat to_bigfloat(const Rat& r) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  return BigFloat(numerator(r)) / BigFloat(denominator(r));
}

inline double to_double(const Rat& r) { return to_bigfloat(r).convert_to<double>(); }

// Canonical "p/q" form, with "/q" omitted for integers; inverse of
// rat_from_string.
inline std::string rat_to_string(const Rat& r) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

inline Rat rat_from_string(const std::string& s) {
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (num.empty() || den.empty())
    throw domain_error("not a rational literal: " + s);
  try {
    return Rat(Int(num), Int(den));
  } catch (const std::exception&) {
    throw domain_error("not a rational literal: " + s);
  }
}

}  // namespace permfix
