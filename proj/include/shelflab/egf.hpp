#pragma once

// Truncated power series over exact rationals, used to extract integer
// sequences from exponential generating functions.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <vector>

namespace shelflab {

using Rational = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

class PowerSeries {
 public:
  explicit PowerSeries(int len) : c_(len) {
    if (len < 1) throw std::invalid_argument("series length must be >= 1");
  }

  static PowerSeries exponential(int len) {  // e^x
    PowerSeries s(len);
    Int fact = 1;
    for (int k = 0; k < len; ++k) {
      if (k > 0) fact *= k;
      s.c_[k] = Rational(1, fact);
    }
    return s;
  }

  static PowerSeries geometric(int len) {  // 1/(1-x)
    PowerSeries s(len);
    for (int k = 0; k < len; ++k) s.c_[k] = 1;
    return s;
  }

  int length() const { return static_cast<int>(c_.size()); }
  const Rational& coeff(int k) const { return c_.at(k); }
  Rational& coeff(int k) { return c_.at(k); }

  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    int len = std::min(a.length(), b.length());
    PowerSeries r(len);
    for (int i = 0; i < len; ++i) {
      if (a.c_[i] == 0) continue;
      for (int j = 0; i + j < len; ++j)
        if (b.c_[j] != 0) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return r;
  }

  /// Multiplies by a sparse integer polynomial given as (degree, coefficient).
  PowerSeries times_poly(const std::vector<std::pair<int, long>>& poly) const {
    PowerSeries r(length());
    for (auto [deg, co] : poly)
      for (int k = 0; k + deg < length(); ++k)
        if (c_[k] != 0) r.c_[k + deg] += c_[k] * co;
    return r;
  }

  /// n! * [x^n], which must come out a non-negative integer.
  Int egf_count(int n) const {
    Rational v = c_.at(n);
    Int fact = 1;
    for (int k = 2; k <= n; ++k) fact *= k;
    v *= fact;
    if (denominator(v) != 1 || v < 0)
      throw std::logic_error("egf coefficient did not scale to a non-negative integer");
    return numerator(v);
  }

 private:
  std::vector<Rational> c_;
};

}  // namespace shelflab
