#pragma once

#include <span>
#include <vector>

#include "etnc/cyclotomic.hpp"
#include "etnc/decimal.hpp"
#include "etnc/polynomial.hpp"

namespace etnc {

inline const Integer kDefaultDenBound{1000000};

// Unique p/q with q <= den_bound inside [x - 2e, x + 2e].
// Throws recognition-failure when none exists and ambiguous-recognition when
// a second candidate with q <= den_bound shares the interval.
Rational rational_reconstruct(const DecimalWithError& x, const Integer& den_bound = kDefaultDenBound);

// Simplest rational (smallest denominator) in the closed interval [lo, hi].
Rational simplest_rational_between(const Rational& lo, const Rational& hi);

struct AlgebraicOrbit {
  unsigned long conductor = 1;
  // values[i] is the exact root matched to input i.
  std::vector<CyclotomicNumber> values;
  RationalPolynomial min_poly;
};

// Recognises a Galois-stable list of real numbers as exact elements of Q(zeta_m).
// tol widens every numeric comparison on top of the inputs' own error bounds.
AlgebraicOrbit recognize_orbit(std::span<const DecimalWithError> xs, unsigned long m, const Real& tol,
                               const Integer& den_bound = kDefaultDenBound);

}  // namespace etnc
