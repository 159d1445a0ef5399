// Independent reference implementations. They share no code with the library beyond
// the GMP number types, and favour brute force over cleverness.
#pragma once

#include <cmath>
#include <complex>
#include <map>
#include <optional>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using Z = mpz_class;
using Q = mpq_class;

inline Q frac(long a, long b) {
  Q r(a, b);
  r.canonicalize();
  return r;
}

// v_p by repeated division.
inline long valuation(Z n, long p) {
  if (n == 0) return 1000000;
  long v = 0;
  if (n < 0) n = -n;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}
inline long valuation(const Q& r, long p) { return valuation(r.get_num(), p) - valuation(r.get_den(), p); }

// Every fraction with denominator <= B inside [lo, hi].
inline std::vector<Q> fractions_in(const Q& lo, const Q& hi, long B) {
  std::vector<Q> out;
  for (long q = 1; q <= B; ++q) {
    Z a = Z(lo * q);  // truncation; widen by one either way
    for (Z num = a - 1; num <= a + 2; ++num) {
      Q c(num, q);
      c.canonicalize();
      if (c >= lo && c <= hi && c.get_den() == q) out.push_back(c);
    }
  }
  return out;
}

// a + b sqrt(d).
struct QuadraticNumber {
  Q a, b;
  long d;
  QuadraticNumber operator+(const QuadraticNumber& o) const { return {a + o.a, b + o.b, d}; }
  QuadraticNumber operator-(const QuadraticNumber& o) const { return {a - o.a, b - o.b, d}; }
  QuadraticNumber operator*(const QuadraticNumber& o) const { return {a * o.a + d * b * o.b, a * o.b + b * o.a, d}; }
  QuadraticNumber conj() const { return {a, -b, d}; }
  Q norm() const { return a * a - d * b * b; }
  double value() const { return a.get_d() + b.get_d() * std::sqrt(static_cast<double>(d)); }
};

// Complex value of sum_k c_k zeta_m^(k e) in long double.
inline std::complex<long double> embed(const std::vector<Q>& coeffs, unsigned long m, long e = 1) {
  const long double pi = std::acos(-1.0L);
  std::complex<long double> z = 0;
  for (size_t k = 0; k < coeffs.size(); ++k) {
    long double ang = 2 * pi * static_cast<long double>((static_cast<long>(k) * e) % static_cast<long>(m)) / m;
    z += static_cast<long double>(coeffs[k].get_d()) * std::complex<long double>(std::cos(ang), std::sin(ang));
  }
  return z;
}

// Cofactor expansion in long double.
inline long double det(const std::vector<std::vector<long double>>& m) {
  const size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  long double acc = 0;
  for (size_t c = 0; c < n; ++c) {
    std::vector<std::vector<long double>> minor;
    for (size_t r = 1; r < n; ++r) {
      std::vector<long double> row;
      for (size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(m[r][j]);
      minor.push_back(row);
    }
    acc += (c % 2 ? -1 : 1) * m[0][c] * det(minor);
  }
  return acc;
}

// Points on y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over F_p, including infinity.
inline long count_points(long p, long a1, long a2, long a3, long a4, long a6) {
  long n = 1;
  for (long x = 0; x < p; ++x)
    for (long y = 0; y < p; ++y) {
      long lhs = (y * y + a1 * x * y + a3 * y) % p;
      long rhs = (((x * x % p) * x) + a2 * x * x + a4 * x + a6) % p;
      if (((lhs - rhs) % p + p) % p == 0) ++n;
    }
  return n;
}

// Points over F_{p^2} = F_p[i]/(i^2 - r) for a non-residue r, same Weierstrass form.
inline long count_points_quadratic(long p, long a1, long a2, long a3, long a4, long a6) {
  long r = 2;
  auto is_residue = [&](long x) {
    for (long y = 0; y < p; ++y)
      if ((y * y) % p == x % p) return true;
    return false;
  };
  while (is_residue(r)) ++r;
  struct F {
    long u, v;
  };
  auto mul = [&](F a, F b) { return F{((a.u * b.u + r * (a.v * b.v % p)) % p + p) % p, ((a.u * b.v + a.v * b.u) % p + p) % p}; };
  auto add = [&](F a, F b) { return F{(a.u + b.u) % p, (a.v + b.v) % p}; };
  auto sc = [&](long c, F a) { return F{((c * a.u) % p + p) % p, ((c * a.v) % p + p) % p}; };
  long n = 1;
  for (long xu = 0; xu < p; ++xu)
    for (long xv = 0; xv < p; ++xv)
      for (long yu = 0; yu < p; ++yu)
        for (long yv = 0; yv < p; ++yv) {
          F x{xu, xv}, y{yu, yv};
          F lhs = add(add(mul(y, y), sc(a1, mul(x, y))), sc(a3, y));
          F x2 = mul(x, x);
          F rhs = add(add(add(mul(x2, x), sc(a2, x2)), sc(a4, x)), F{((a6 % p) + p) % p, 0});
          if (lhs.u == rhs.u && lhs.v == rhs.v) ++n;
        }
  return n;
}

// D_{2m} as pairs (k, t) meaning s^k tau^t, tau s tau = s^-1.
struct Dihedral {
  long m;
  std::pair<long, int> mul(std::pair<long, int> a, std::pair<long, int> b) const {
    long k = a.second ? a.first - b.first : a.first + b.first;
    return {((k % m) + m) % m, a.second ^ b.second};
  }
};

}  // namespace oracle
