#include "etnc/decimal.hpp"

#include <mpfr.h>

#include <iomanip>
#include <sstream>

#include "etnc/error.hpp"

namespace etnc {

namespace {

const Real& relative_epsilon() {
  static const Real eps("1e-96");
  return eps;
}

const Real& absolute_floor() {
  static const Real tiny("1e-200");
  return tiny;
}

Real parse_real(std::string_view text) {
  std::string s(text);
  if (s.empty()) fail(Errc::invalid_input, "empty decimal literal");
  if (s.find('/') != std::string::npos) return to_real(parse_rational(s));
  try {
    return Real(s);
  } catch (const std::exception&) {
    fail(Errc::invalid_input, "malformed decimal literal '" + s + "'");
  }
}

}  // namespace

Real to_real(const Rational& r) {
  Real num(r.get_num().get_mpz_t());
  Real den(r.get_den().get_mpz_t());
  return num / den;
}

Rational to_rational(const Real& x) {
  if (x == 0) return 0;
  if (!boost::multiprecision::isfinite(x)) fail(Errc::invalid_input, "non-finite value");
  mpz_class mantissa;
  mpfr_exp_t exponent = mpfr_get_z_2exp(mantissa.get_mpz_t(), x.backend().data());
  Rational r(mantissa);
  if (exponent >= 0) {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, static_cast<unsigned long>(exponent));
    r *= scale;
  } else {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, static_cast<unsigned long>(-exponent));
    r /= scale;
  }
  r.canonicalize();
  return r;
}

Real rounding_slack(const Real& x) { return boost::multiprecision::abs(x) * relative_epsilon() + absolute_floor(); }

std::string format_real(const Real& x, int digits) {
  std::ostringstream out;
  out << std::setprecision(digits) << x;
  return out.str();
}

DecimalWithError::DecimalWithError() : value_(0), error_(0) {}

DecimalWithError::DecimalWithError(Real value, Real abs_error)
    : value_(std::move(value)), error_(std::move(abs_error)) {
  if (error_ < 0) fail(Errc::invalid_input, "negative error bound");
  if (!boost::multiprecision::isfinite(value_) || !boost::multiprecision::isfinite(error_))
    fail(Errc::invalid_input, "non-finite decimal");
}

DecimalWithError DecimalWithError::exact(const Rational& r) {
  Real v = to_real(r);
  Real rounding = to_rational(v) == r ? Real(0) : rounding_slack(v);
  return {v, rounding};
}

DecimalWithError DecimalWithError::parse(std::string_view value, std::string_view abs_error) {
  Real v = parse_real(value);
  Real e = abs_error.empty() ? Real(0) : parse_real(abs_error);
  if (e < 0) fail(Errc::invalid_input, "negative error bound");
  return {v, e + rounding_slack(v)};
}

bool DecimalWithError::contains(const Real& x) const { return lower() <= x && x <= upper(); }

bool DecimalWithError::excludes_zero() const { return boost::multiprecision::abs(value_) > error_; }

bool DecimalWithError::overlaps(const DecimalWithError& other) const {
  return boost::multiprecision::abs(value_ - other.value_) <= error_ + other.error_;
}

DecimalWithError DecimalWithError::widened(const Real& extra) const {
  return {value_, error_ + boost::multiprecision::abs(extra)};
}

DecimalWithError DecimalWithError::operator-() const { return {-value_, error_}; }

DecimalWithError operator+(const DecimalWithError& a, const DecimalWithError& b) {
  Real v = a.value_ + b.value_;
  return {v, a.error_ + b.error_ + rounding_slack(v)};
}

DecimalWithError operator-(const DecimalWithError& a, const DecimalWithError& b) {
  Real v = a.value_ - b.value_;
  return {v, a.error_ + b.error_ + rounding_slack(v)};
}

DecimalWithError operator*(const DecimalWithError& a, const DecimalWithError& b) {
  using boost::multiprecision::abs;
  Real v = a.value_ * b.value_;
  Real e = abs(a.value_) * b.error_ + abs(b.value_) * a.error_ + a.error_ * b.error_;
  return {v, e + rounding_slack(v)};
}

DecimalWithError operator/(const DecimalWithError& a, const DecimalWithError& b) {
  using boost::multiprecision::abs;
  if (!b.excludes_zero()) fail(Errc::division_by_zero, "divisor interval contains zero");
  Real v = a.value_ / b.value_;
  Real bmin = abs(b.value_) - b.error_;
  Real e = (abs(a.value_) * b.error_ + abs(b.value_) * a.error_) / (abs(b.value_) * bmin);
  return {v, e + rounding_slack(v)};
}

std::string DecimalWithError::to_string(int digits) const {
  std::ostringstream out;
  out << std::setprecision(digits) << value_ << " +/- " << std::setprecision(3) << error_;
  return out.str();
}

DecimalWithError sqrt(const DecimalWithError& x) {
  using boost::multiprecision::sqrt;
  if (x.upper() < 0) fail(Errc::not_real, "square root of a negative interval");
  Real lo = x.lower() > 0 ? x.lower() : Real(0);
  Real v = x.value() > 0 ? sqrt(x.value()) : Real(0);
  Real e = (x.value() > 0 && lo > 0) ? x.abs_error() / (v + sqrt(lo)) : sqrt(x.abs_error() + (x.value() > 0 ? Real(0) : -x.value()));
  if (x.value() > 0 && lo == 0) e = sqrt(x.upper());
  return {v, e + rounding_slack(v)};
}

DecimalWithError abs(const DecimalWithError& x) {
  return {boost::multiprecision::abs(x.value()), x.abs_error()};
}

}  // namespace etnc
