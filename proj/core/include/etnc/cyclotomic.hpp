#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "etnc/decimal.hpp"
#include "etnc/rational.hpp"

namespace etnc {

// (p, n) with m = p^n for an odd prime p; nullopt for anything else (m = 1 included).
std::optional<std::pair<unsigned long, unsigned>> odd_prime_power(unsigned long m);
unsigned long euler_phi(unsigned long m);
unsigned long ipow(unsigned long base, unsigned exponent);

// Element of Q(zeta_m), m = 1 or an odd prime power, in the power basis
// 1, z, ..., z^(phi(m)-1). Values are stored at the smallest admissible
// conductor, so equality is coefficient-wise.
class CyclotomicNumber {
 public:
  CyclotomicNumber();
  CyclotomicNumber(const Rational& r);  // NOLINT(google-explicit-constructor)
  CyclotomicNumber(long n);             // NOLINT(google-explicit-constructor)
  // coeffs may have any length up to m; they are reduced modulo Phi_m.
  CyclotomicNumber(unsigned long m, std::vector<Rational> coeffs);

  // zeta_m^k
  static CyclotomicNumber zeta(unsigned long m, long k = 1);

  unsigned long conductor() const { return m_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  bool is_zero() const;
  bool is_rational() const { return m_ == 1; }
  // Throws invalid-input when not rational.
  Rational to_rational() const;

  // Same element written over Q(zeta_target); target must be a power of the same prime.
  std::vector<Rational> coefficients_at(unsigned long target) const;

  CyclotomicNumber operator-() const;
  friend CyclotomicNumber operator+(const CyclotomicNumber& a, const CyclotomicNumber& b);
  friend CyclotomicNumber operator-(const CyclotomicNumber& a, const CyclotomicNumber& b);
  friend CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b);
  friend CyclotomicNumber operator/(const CyclotomicNumber& a, const CyclotomicNumber& b);
  CyclotomicNumber& operator+=(const CyclotomicNumber& b) { return *this = *this + b; }
  CyclotomicNumber& operator-=(const CyclotomicNumber& b) { return *this = *this - b; }
  CyclotomicNumber& operator*=(const CyclotomicNumber& b) { return *this = *this * b; }
  friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) = default;

  // Throws division-by-zero for 0.
  CyclotomicNumber inverse() const;
  // Norm and trace down to Q from Q(zeta_conductor).
  Rational norm() const;
  Rational trace() const;

  std::string to_string() const;

 private:
  unsigned long m_;
  std::vector<Rational> coeffs_;
};

// Common conductor of two values; throws unsupported-conductor for different primes.
unsigned long common_conductor(unsigned long a, unsigned long b);

// sigma_a: zeta -> zeta^a. Throws invalid-automorphism when gcd(a, m) != 1.
CyclotomicNumber galois_apply(const CyclotomicNumber& x, long a);
// Same, with the coprimality checked against the ambient conductor m.
CyclotomicNumber galois_apply(const CyclotomicNumber& x, long a, unsigned long m);

// Valuation at the prime above p normalised by v(p) = 1.
Rational p_valuation(const CyclotomicNumber& x, unsigned long p);
bool is_p_unit(const CyclotomicNumber& x, unsigned long p);
// v >= 0 at the prime above p.
bool is_p_integral(const CyclotomicNumber& x, unsigned long p);

// Image under zeta -> exp(2 pi i k/m). Throws not-real for non-real images.
DecimalWithError real_embedding(const CyclotomicNumber& x, long k);
std::pair<DecimalWithError, DecimalWithError> complex_embedding(const CyclotomicNumber& x, long k);

// sqrt(p*) with p* = (-1)^((p-1)/2) p, as the quadratic Gauss sum in Q(zeta_p).
CyclotomicNumber quadratic_gauss_sum(unsigned long p);

long legendre_symbol(long a, unsigned long p);
long mod_inverse(long a, unsigned long m);

}  // namespace etnc
