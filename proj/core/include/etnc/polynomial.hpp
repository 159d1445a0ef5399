#pragma once

#include <string>
#include <vector>

#include "etnc/cyclotomic.hpp"
#include "etnc/decimal.hpp"
#include "etnc/rational.hpp"

namespace etnc {

// Dense univariate polynomial over Q, coefficients from the constant term up.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coeffs);
  // prod (x - r)
  static RationalPolynomial from_roots(const std::vector<Rational>& roots);

  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  const Rational& leading() const { return coeffs_.back(); }

  Rational operator()(const Rational& x) const;
  CyclotomicNumber operator()(const CyclotomicNumber& x) const;
  DecimalWithError operator()(const DecimalWithError& x) const;

  RationalPolynomial derivative() const;
  RationalPolynomial monic() const;

  friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);
  friend RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b);
  friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) = default;

  // Euclidean division; throws division-by-zero for a zero divisor.
  static void divmod(const RationalPolynomial& a, const RationalPolynomial& b, RationalPolynomial& q,
                     RationalPolynomial& r);

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

// Monic gcd.
RationalPolynomial gcd(const RationalPolynomial& a, const RationalPolynomial& b);
// f / gcd(f, f'), monic.
RationalPolynomial squarefree_part(const RationalPolynomial& f);

}  // namespace etnc
