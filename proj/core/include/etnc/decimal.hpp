#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <string>
#include <string_view>

#include "etnc/rational.hpp"

namespace etnc {

// 100 significant decimal digits.
using Real = boost::multiprecision::mpfr_float_100;

Real to_real(const Rational& r);
// Exact binary value of x as a rational.
Rational to_rational(const Real& x);
// Bound on the rounding error of one operation producing a value of size |x|.
Real rounding_slack(const Real& x);
std::string format_real(const Real& x, int digits = 30);

// A real number known up to an absolute error bound. All arithmetic widens the
// bound to cover both input uncertainty and working-precision rounding.
class DecimalWithError {
 public:
  DecimalWithError();
  DecimalWithError(Real value, Real abs_error);

  static DecimalWithError exact(const Rational& r);
  // Parses decimal strings; the parse rounding is folded into the error.
  static DecimalWithError parse(std::string_view value, std::string_view abs_error = "0");

  const Real& value() const { return value_; }
  const Real& abs_error() const { return error_; }
  Real lower() const { return value_ - error_; }
  Real upper() const { return value_ + error_; }

  bool contains(const Real& x) const;
  bool excludes_zero() const;
  // Intervals intersect.
  bool overlaps(const DecimalWithError& other) const;
  DecimalWithError widened(const Real& extra) const;

  DecimalWithError operator-() const;
  friend DecimalWithError operator+(const DecimalWithError& a, const DecimalWithError& b);
  friend DecimalWithError operator-(const DecimalWithError& a, const DecimalWithError& b);
  friend DecimalWithError operator*(const DecimalWithError& a, const DecimalWithError& b);
  // Throws division-by-zero when b's interval contains zero.
  friend DecimalWithError operator/(const DecimalWithError& a, const DecimalWithError& b);
  DecimalWithError& operator+=(const DecimalWithError& b) { return *this = *this + b; }
  DecimalWithError& operator*=(const DecimalWithError& b) { return *this = *this * b; }

  std::string to_string(int digits = 30) const;

 private:
  Real value_;
  Real error_;
};

// Throws not-real when the interval lies entirely below zero.
DecimalWithError sqrt(const DecimalWithError& x);
DecimalWithError abs(const DecimalWithError& x);

}  // namespace etnc
