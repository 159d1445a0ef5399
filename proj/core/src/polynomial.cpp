#include "etnc/polynomial.hpp"

#include <sstream>

#include "etnc/error.hpp"

namespace etnc {

RationalPolynomial::RationalPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

RationalPolynomial RationalPolynomial::from_roots(const std::vector<Rational>& roots) {
  RationalPolynomial f(std::vector<Rational>{Rational(1)});
  for (const auto& r : roots) f = f * RationalPolynomial({Rational(-r), Rational(1)});
  return f;
}

void RationalPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational RationalPolynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

CyclotomicNumber RationalPolynomial::operator()(const CyclotomicNumber& x) const {
  CyclotomicNumber acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + CyclotomicNumber(*it);
  return acc;
}

DecimalWithError RationalPolynomial::operator()(const DecimalWithError& x) const {
  DecimalWithError acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + DecimalWithError::exact(*it);
  return acc;
}

RationalPolynomial RationalPolynomial::derivative() const {
  std::vector<Rational> d;
  for (size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * Rational(static_cast<long>(i)));
  return RationalPolynomial(std::move(d));
}

RationalPolynomial RationalPolynomial::monic() const {
  if (is_zero()) return *this;
  std::vector<Rational> c = coeffs_;
  Rational lead = leading();
  for (auto& v : c) v /= lead;
  return RationalPolynomial(std::move(c));
}

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (size_t i = 0; i < a.coeffs_.size(); ++i)
    for (size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return RationalPolynomial(std::move(c));
}

RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
  return RationalPolynomial(std::move(c));
}

void RationalPolynomial::divmod(const RationalPolynomial& a, const RationalPolynomial& b, RationalPolynomial& q,
                                RationalPolynomial& r) {
  if (b.is_zero()) fail(Errc::division_by_zero, "polynomial division by zero");
  std::vector<Rational> rem = a.coeffs_;
  long db = b.degree();
  std::vector<Rational> quot(std::max<long>(a.degree() - db + 1, 0));
  for (long k = a.degree() - db; k >= 0; --k) {
    Rational c = rem[static_cast<size_t>(k + db)] / b.leading();
    quot[static_cast<size_t>(k)] = c;
    if (c == 0) continue;
    for (long j = 0; j <= db; ++j) rem[static_cast<size_t>(k + j)] -= c * b.coeffs_[static_cast<size_t>(j)];
  }
  q = RationalPolynomial(std::move(quot));
  r = RationalPolynomial(std::move(rem));
}

std::string RationalPolynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (long i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<size_t>(i)];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first)
      out << (c < 0 ? "-" : "");
    else
      out << (c < 0 ? " - " : " + ");
    first = false;
    if (i == 0 || mag != 1) out << mag.get_str();
    if (i > 0 && mag != 1) out << "*";
    if (i > 0) out << var;
    if (i > 1) out << "^" << i;
  }
  return out.str();
}

RationalPolynomial gcd(const RationalPolynomial& a, const RationalPolynomial& b) {
  RationalPolynomial x = a, y = b;
  while (!y.is_zero()) {
    RationalPolynomial q, r;
    RationalPolynomial::divmod(x, y, q, r);
    x = y;
    y = r;
  }
  return x.monic();
}

RationalPolynomial squarefree_part(const RationalPolynomial& f) {
  if (f.degree() <= 0) return f.monic();
  RationalPolynomial g = gcd(f, f.derivative());
  RationalPolynomial q, r;
  RationalPolynomial::divmod(f, g, q, r);
  return q.monic();
}

}  // namespace etnc
