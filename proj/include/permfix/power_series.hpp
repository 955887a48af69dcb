#pragma once

#include "permfix/numbers.hpp"

#include <type_traits>
#include <utility>
#include <vector>

namespace permfix {

// Coefficient conversion: series code is generic over exact rationals (for
// identities) and 240-bit floats (for high-order asymptotic runs).
template <typename T>
T from_rat(const Rat& r) {
  if constexpr (std::is_same_v<T, Rat>)
    return r;
  else
    return T(to_bigfloat(r));
}

// Truncated formal power series, coefficients indexed 0..order. Binary
// operations demand matching orders so truncation is never silent.
template <typename T>
class PowerSeries {
 public:
  explicit PowerSeries(unsigned order) : c_(order + 1, T(0)) {}

  static PowerSeries one(unsigned order) {
    PowerSeries s(order);
    s.c_[0] = T(1);
    return s;
  }

  unsigned order() const { return static_cast<unsigned>(c_.size()) - 1; }
  T& operator[](unsigned i) { return c_.at(i); }
  const T& operator[](unsigned i) const { return c_.at(i); }
  const std::vector<T>& coefficients() const { return c_; }

  PowerSeries& operator+=(const PowerSeries& o) {
    check_order(o);
    for (unsigned i = 0; i <= order(); ++i) c_[i] += o.c_[i];
    return *this;
  }

  PowerSeries& operator-=(const PowerSeries& o) {
    check_order(o);
    for (unsigned i = 0; i <= order(); ++i) c_[i] -= o.c_[i];
    return *this;
  }

  friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) {
    return a += b;
  }
  friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) {
    return a -= b;
  }

  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    a.check_order(b);
    PowerSeries p(a.order());
    for (unsigned i = 0; i <= a.order(); ++i) {
      if (a.c_[i] == 0) continue;
      for (unsigned j = 0; i + j <= a.order(); ++j) {
        if (b.c_[j] == 0) continue;
        p.c_[i + j] += a.c_[i] * b.c_[j];
      }
    }
    return p;
  }

  PowerSeries& operator*=(const PowerSeries& o) { return *this = *this * o; }

  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

  // exp(a) for a with zero constant term, by the derivative recurrence
  // n b_n = sum_{j=1..n} j a_j b_{n-j}.
  static PowerSeries exponential(const PowerSeries& a) {
    if (a.c_[0] != 0)
      throw domain_error("series exp: constant term must be zero");
    PowerSeries b(a.order());
    b.c_[0] = T(1);
    for (unsigned n = 1; n <= a.order(); ++n) {
      T acc(0);
      for (unsigned j = 1; j <= n; ++j) {
        if (a.c_[j] == 0) continue;
        acc += T(static_cast<int>(j)) * a.c_[j] * b.c_[n - j];
      }
      b.c_[n] = acc / T(static_cast<int>(n));
    }
    return b;
  }

  // log(b) for b with constant term one; inverse of exponential.
  static PowerSeries logarithm(const PowerSeries& b) {
    if (b.c_[0] != T(1))
      throw domain_error("series log: constant term must be one");
    PowerSeries a(b.order());
    for (unsigned n = 1; n <= b.order(); ++n) {
      T acc(0);
      for (unsigned j = 1; j < n; ++j) {
        if (a.c_[j] == 0 || b.c_[n - j] == 0) continue;
        acc += T(static_cast<int>(j)) * a.c_[j] * b.c_[n - j];
      }
      a.c_[n] = b.c_[n] - acc / T(static_cast<int>(n));
    }
    return a;
  }

  // Value at a point; exact for polynomial contents, otherwise the caller
  // owns the truncation question.
  T evaluate(const T& x) const {
    T v(0);
    for (unsigned i = order() + 1; i-- > 0;) v = v * x + c_[i];
    return v;
  }

 private:
  void check_order(const PowerSeries& o) const {
    if (o.order() != order()) throw domain_error("series order mismatch");
  }

  std::vector<T> c_;
};

// (1-u)^(-1/2) = sum_m C(2m,m) 4^(-m) u^m.
template <typename T>
PowerSeries<T> inverse_sqrt_one_minus(unsigned order) {
  PowerSeries<T> s(order);
  Rat c = 1;
  for (unsigned m = 0; m <= order; ++m) {
    s[m] = from_rat<T>(c);
    // C(2m+2,m+1)/4^{m+1} = C(2m,m)/4^m * (2m+1)/(2m+2)
    c *= Rat(2 * m + 1, 2 * m + 2);
  }
  return s;
}

// 1 / (1 + c u^s) as an alternating geometric series.
template <typename T>
PowerSeries<T> geometric_inverse(unsigned order, unsigned s, const Rat& c) {
  if (s == 0) throw domain_error("geometric_inverse: exponent must be >= 1");
  PowerSeries<T> out(order);
  Rat pow = 1;
  for (unsigned m = 0; m * s <= order; ++m) {
    out[m * s] = from_rat<T>(pow);
    pow *= -c;
  }
  return out;
}

}  // namespace permfix
