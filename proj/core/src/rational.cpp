#include "etnc/rational.hpp"

#include <cctype>

#include "etnc/error.hpp"

namespace etnc {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) fail(Errc::division_by_zero, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  size_t start = 0;
  while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start]))) ++start;
  s = s.substr(start);
  if (s.empty()) fail(Errc::invalid_input, "empty rational literal");
  try {
    if (auto slash = s.find('/'); slash != std::string::npos) {
      Integer num(s.substr(0, slash), 10);
      Integer den(s.substr(slash + 1), 10);
      return make_rational(num, den);
    }
    if (auto dot = s.find('.'); dot != std::string::npos) {
      bool negative = s[0] == '-';
      std::string digits = s.substr(negative || s[0] == '+' ? 1 : 0);
      dot = digits.find('.');
      std::string whole = digits.substr(0, dot);
      std::string frac = digits.substr(dot + 1);
      if (whole.empty()) whole = "0";
      if (frac.empty()) frac = "0";
      Integer num(whole + frac, 10);
      Integer den;
      mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
      Rational r = make_rational(num, den);
      return negative ? Rational(-r) : r;
    }
    if (s[0] == '+') s = s.substr(1);
    return Rational(Integer(s, 10));
  } catch (const std::invalid_argument&) {
    fail(Errc::invalid_input, "malformed rational literal '" + s + "'");
  }
}

std::string to_string(const Integer& n) { return n.get_str(); }

std::string to_string(const Rational& r) { return r.get_str(); }

long valuation(const Integer& n, unsigned long p) {
  if (n == 0) fail(Errc::infinite_valuation, "valuation of zero");
  if (p < 2) fail(Errc::invalid_input, "valuation needs a prime");
  Integer m = abs(n);
  long v = 0;
  while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
    mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
    ++v;
  }
  return v;
}

long valuation(const Rational& r, unsigned long p) {
  if (r == 0) fail(Errc::infinite_valuation, "valuation of zero");
  return valuation(r.get_num(), p) - valuation(r.get_den(), p);
}

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_perfect_square(const Integer& n) {
  return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

bool is_square_rational(const Rational& r) {
  if (r == 0) fail(Errc::invalid_input, "square test of zero");
  return r > 0 && is_perfect_square(r.get_num()) && is_perfect_square(r.get_den());
}

bool mod_square_equivalent(const Rational& a, const Rational& b) {
  if (a == 0 || b == 0) fail(Errc::invalid_input, "mod-square comparison with zero");
  return is_square_rational(a / b);
}

Rational pow(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) fail(Errc::division_by_zero, "negative power of zero");
    Rational inv = 1 / base;
    return pow(inv, -exponent);
  }
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return make_rational(num, den);
}

}  // namespace etnc
