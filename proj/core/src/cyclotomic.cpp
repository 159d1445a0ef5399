#include "etnc/cyclotomic.hpp"

#include <boost/math/constants/constants.hpp>

#include <numeric>
#include <sstream>

#include "etnc/error.hpp"

namespace etnc {

namespace {

long mod(long a, unsigned long m) {
  long r = a % static_cast<long>(m);
  return r < 0 ? r + static_cast<long>(m) : r;
}

// Reduces a full length-m vector (exponents mod m) to phi(m) coefficients.
std::vector<Rational> reduce_full(unsigned long m, std::vector<Rational> full) {
  if (m == 1) return {full.empty() ? Rational(0) : full[0]};
  auto [p, n] = *odd_prime_power(m);
  unsigned long s = ipow(p, n - 1);
  unsigned long phi = (p - 1) * s;
  for (unsigned long k = m; k-- > phi;) {
    if (full[k] == 0) continue;
    unsigned long r = k - phi;
    for (unsigned long j = 0; j + 1 < p; ++j) full[j * s + r] -= full[k];
    full[k] = 0;
  }
  full.resize(phi);
  return full;
}

void check_conductor(unsigned long m) {
  if (m == 0) fail(Errc::unsupported_conductor, "conductor 0");
  if (m != 1 && !odd_prime_power(m))
    fail(Errc::unsupported_conductor, "conductor " + std::to_string(m) + " is not an odd prime power");
}

}  // namespace

unsigned long ipow(unsigned long base, unsigned exponent) {
  unsigned long r = 1;
  for (unsigned i = 0; i < exponent; ++i) r *= base;
  return r;
}

std::optional<std::pair<unsigned long, unsigned>> odd_prime_power(unsigned long m) {
  if (m < 3 || m % 2 == 0) return std::nullopt;
  unsigned long p = 0;
  for (unsigned long d = 3; d * d <= m; d += 2) {
    if (m % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return std::make_pair(m, 1u);
  unsigned n = 0;
  while (m % p == 0) {
    m /= p;
    ++n;
  }
  if (m != 1) return std::nullopt;
  return std::make_pair(p, n);
}

unsigned long euler_phi(unsigned long m) {
  unsigned long result = m;
  unsigned long x = m;
  for (unsigned long d = 2; d * d <= x; ++d) {
    if (x % d == 0) {
      while (x % d == 0) x /= d;
      result -= result / d;
    }
  }
  if (x > 1) result -= result / x;
  return result;
}

long mod_inverse(long a, unsigned long m) {
  mpz_class r;
  mpz_class aa(mod(a, m));
  mpz_class mm(m);
  if (mpz_invert(r.get_mpz_t(), aa.get_mpz_t(), mm.get_mpz_t()) == 0)
    fail(Errc::invalid_input, "no inverse of " + std::to_string(a) + " mod " + std::to_string(m));
  return r.get_si();
}

long legendre_symbol(long a, unsigned long p) {
  mpz_class aa(mod(a, p));
  mpz_class pp(p);
  return mpz_legendre(aa.get_mpz_t(), pp.get_mpz_t());
}

unsigned long common_conductor(unsigned long a, unsigned long b) {
  if (a == 1) return b;
  if (b == 1) return a;
  auto pa = odd_prime_power(a);
  auto pb = odd_prime_power(b);
  if (!pa || !pb || pa->first != pb->first)
    fail(Errc::unsupported_conductor,
         "conductors " + std::to_string(a) + " and " + std::to_string(b) + " have no common prime-power field");
  return std::max(a, b);
}

CyclotomicNumber::CyclotomicNumber() : m_(1), coeffs_{Rational(0)} {}

CyclotomicNumber::CyclotomicNumber(const Rational& r) : m_(1), coeffs_{r} {}

CyclotomicNumber::CyclotomicNumber(long n) : m_(1), coeffs_{Rational(n)} {}

CyclotomicNumber::CyclotomicNumber(unsigned long m, std::vector<Rational> coeffs) : m_(m) {
  check_conductor(m);
  if (coeffs.size() > m) fail(Errc::invalid_input, "more coefficients than the conductor");
  coeffs.resize(m);
  coeffs_ = reduce_full(m, std::move(coeffs));
  // Descend to the smallest conductor containing the value.
  while (m_ > 1) {
    auto [p, n] = *odd_prime_power(m_);
    bool only_multiples = true;
    for (size_t i = 0; i < coeffs_.size() && only_multiples; ++i)
      if (i % p != 0 && coeffs_[i] != 0) only_multiples = false;
    if (!only_multiples) break;
    unsigned long smaller = n == 1 ? 1 : m_ / p;
    std::vector<Rational> next(euler_phi(smaller));
    for (size_t i = 0; i < coeffs_.size(); i += p) next[i / p] = coeffs_[i];
    m_ = smaller;
    coeffs_ = std::move(next);
  }
}

CyclotomicNumber CyclotomicNumber::zeta(unsigned long m, long k) {
  check_conductor(m);
  std::vector<Rational> full(m);
  full[static_cast<size_t>(mod(k, m))] = 1;
  return {m, std::move(full)};
}

bool CyclotomicNumber::is_zero() const {
  return m_ == 1 && coeffs_[0] == 0;
}

Rational CyclotomicNumber::to_rational() const {
  if (m_ != 1) fail(Errc::invalid_input, "value " + to_string() + " is not rational");
  return coeffs_[0];
}

std::vector<Rational> CyclotomicNumber::coefficients_at(unsigned long target) const {
  unsigned long common = common_conductor(m_, target);
  if (common != target) fail(Errc::unsupported_conductor, "cannot write the value over a smaller field");
  std::vector<Rational> full(target);
  unsigned long step = target / m_;
  for (size_t i = 0; i < coeffs_.size(); ++i) full[i * step] = coeffs_[i];
  return reduce_full(target, std::move(full));
}

CyclotomicNumber CyclotomicNumber::operator-() const {
  CyclotomicNumber r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CyclotomicNumber operator+(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  unsigned long m = common_conductor(a.m_, b.m_);
  auto x = a.coefficients_at(m);
  auto y = b.coefficients_at(m);
  for (size_t i = 0; i < x.size(); ++i) x[i] += y[i];
  return {m, std::move(x)};
}

CyclotomicNumber operator-(const CyclotomicNumber& a, const CyclotomicNumber& b) { return a + (-b); }

CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  if (a.m_ == 1 || b.m_ == 1) {
    const CyclotomicNumber& scalar = a.m_ == 1 ? a : b;
    const CyclotomicNumber& other = a.m_ == 1 ? b : a;
    std::vector<Rational> c = other.coeffs_;
    for (auto& v : c) v *= scalar.coeffs_[0];
    return {other.m_, std::move(c)};
  }
  unsigned long m = common_conductor(a.m_, b.m_);
  auto x = a.coefficients_at(m);
  auto y = b.coefficients_at(m);
  std::vector<Rational> full(m);
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (size_t j = 0; j < y.size(); ++j) {
      if (y[j] == 0) continue;
      full[(i + j) % m] += x[i] * y[j];
    }
  }
  return {m, std::move(full)};
}

CyclotomicNumber operator/(const CyclotomicNumber& a, const CyclotomicNumber& b) { return a * b.inverse(); }

CyclotomicNumber CyclotomicNumber::inverse() const {
  if (is_zero()) fail(Errc::division_by_zero, "inverse of zero");
  if (m_ == 1) return CyclotomicNumber(Rational(1 / coeffs_[0]));
  CyclotomicNumber conjugates(1);
  for (unsigned long a = 2; a < m_; ++a)
    if (std::gcd(a, m_) == 1) conjugates *= galois_apply(*this, static_cast<long>(a));
  Rational n = (*this * conjugates).to_rational();
  return conjugates * CyclotomicNumber(Rational(1 / n));
}

Rational CyclotomicNumber::norm() const {
  if (m_ == 1) return coeffs_[0];
  CyclotomicNumber product = *this;
  for (unsigned long a = 2; a < m_; ++a)
    if (std::gcd(a, m_) == 1) product *= galois_apply(*this, static_cast<long>(a));
  return product.to_rational();
}

Rational CyclotomicNumber::trace() const {
  if (m_ == 1) return coeffs_[0];
  auto [p, n] = *odd_prime_power(m_);
  // Tr(z^i) = phi(m) for i = 0, -p^(n-1) when p^(n-1) | i, else 0.
  unsigned long s = ipow(p, n - 1);
  Rational t = coeffs_[0] * Rational(euler_phi(m_));
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (i % s == 0) t -= coeffs_[i] * Rational(s);
  return t;
}

std::string CyclotomicNumber::to_string() const {
  if (m_ == 1) return coeffs_[0].get_str();
  std::ostringstream out;
  bool first = true;
  const std::string z = "z" + std::to_string(m_);
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << "*";
    out << z;
    if (i > 1) out << "^" << i;
  }
  return out.str();
}

CyclotomicNumber galois_apply(const CyclotomicNumber& x, long a) {
  return galois_apply(x, a, x.conductor());
}

CyclotomicNumber galois_apply(const CyclotomicNumber& x, long a, unsigned long m) {
  if (std::gcd(static_cast<unsigned long>(std::labs(a)), m) != 1 && m != 1)
    fail(Errc::invalid_automorphism, std::to_string(a) + " is not a unit mod " + std::to_string(m));
  unsigned long c = x.conductor();
  if (c == 1) return x;
  if (std::gcd(static_cast<unsigned long>(std::labs(a)), c) != 1)
    fail(Errc::invalid_automorphism, std::to_string(a) + " is not a unit mod " + std::to_string(c));
  const auto& coeffs = x.coefficients();
  std::vector<Rational> full(c);
  long am = mod(a, c);
  for (size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0) full[(static_cast<unsigned long>(am) * i) % c] += coeffs[i];
  return {c, std::move(full)};
}

Rational p_valuation(const CyclotomicNumber& x, unsigned long p) {
  if (x.is_zero()) fail(Errc::infinite_valuation, "valuation of zero");
  unsigned long m = x.conductor();
  if (m == 1) return Rational(valuation(x.to_rational(), p));
  auto pp = odd_prime_power(m);
  if (!pp || pp->first != p)
    fail(Errc::unsupported_conductor, "conductor " + std::to_string(m) + " is not a power of " + std::to_string(p));
  return make_rational(Integer(valuation(x.norm(), p)), Integer(euler_phi(m)));
}

bool is_p_unit(const CyclotomicNumber& x, unsigned long p) {
  return !x.is_zero() && p_valuation(x, p) == 0;
}

bool is_p_integral(const CyclotomicNumber& x, unsigned long p) {
  return x.is_zero() || p_valuation(x, p) >= 0;
}

std::pair<DecimalWithError, DecimalWithError> complex_embedding(const CyclotomicNumber& x, long k) {
  unsigned long m = x.conductor();
  if (m == 1) return {DecimalWithError::exact(x.to_rational()), DecimalWithError()};
  if (std::gcd(static_cast<unsigned long>(mod(k, m)), m) != 1)
    fail(Errc::invalid_input, "embedding index not coprime to the conductor");
  const Real pi = boost::math::constants::pi<Real>();
  Real re = 0, im = 0, magnitude = 0;
  const auto& coeffs = x.coefficients();
  long km = mod(k, m);
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    Real c = to_real(coeffs[i]);
    Real angle = 2 * pi * Real(static_cast<unsigned long>((km * i) % m)) / Real(m);
    re += c * boost::multiprecision::cos(angle);
    im += c * boost::multiprecision::sin(angle);
    magnitude += boost::multiprecision::abs(c);
  }
  Real err = rounding_slack(magnitude) * Real(4 * coeffs.size() + 4);
  return {DecimalWithError(re, err), DecimalWithError(im, err)};
}

DecimalWithError real_embedding(const CyclotomicNumber& x, long k) {
  auto [re, im] = complex_embedding(x, k);
  if (im.excludes_zero()) fail(Errc::not_real, "value " + x.to_string() + " has a non-real embedding");
  return re;
}

CyclotomicNumber quadratic_gauss_sum(unsigned long p) {
  if (!is_prime(p) || p == 2) fail(Errc::invalid_input, "quadratic Gauss sum needs an odd prime");
  std::vector<Rational> full(p);
  for (unsigned long a = 1; a < p; ++a) full[a] = legendre_symbol(static_cast<long>(a), p);
  return {p, std::move(full)};
}

}  // namespace etnc
