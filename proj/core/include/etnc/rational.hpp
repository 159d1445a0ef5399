#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace etnc {

using Integer = mpz_class;
using Rational = mpq_class;

// Builds num/den in lowest terms. Throws division-by-zero when den == 0.
Rational make_rational(const Integer& num, const Integer& den);

// Accepts "a", "-a/b" and plain decimals such as "0.25".
Rational parse_rational(std::string_view text);

std::string to_string(const Integer& n);
std::string to_string(const Rational& r);

// Exponent of p in n. Throws infinite-valuation for n == 0.
long valuation(const Integer& n, unsigned long p);
long valuation(const Rational& r, unsigned long p);

bool is_prime(unsigned long n);
bool is_perfect_square(const Integer& n);

// r = s^2 for some rational s. Throws invalid-input for r == 0.
bool is_square_rational(const Rational& r);

// a/b is a square in Q^x. Throws invalid-input when either is zero.
bool mod_square_equivalent(const Rational& a, const Rational& b);

Rational pow(const Rational& base, long exponent);

}  // namespace etnc
