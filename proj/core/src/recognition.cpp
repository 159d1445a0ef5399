#include "etnc/recognition.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include <boost/math/constants/constants.hpp>

#include "etnc/error.hpp"

namespace etnc {

namespace {

Integer floor_of(const Rational& x) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

// Simplest rational in [lo, hi] with 0 < lo <= hi, by continued fractions. Gives up (nullopt) as soon
// as the denominator is known to exceed bound.
std::optional<Rational> simplest_positive_gap(Rational lo, Rational hi, const std::optional<Integer>& bound) {
  // x = (h1 y + h0) / (k1 y + k0) for the remaining y in [lo, hi].
  Integer h1 = 1, h0 = 0, k1 = 0, k0 = 1;
  while (true) {
    Integer fl = floor_of(lo);
    Integer c = fl == lo ? fl : Integer(fl + 1);
    if (Rational(c) <= hi) return make_rational(h1 * c + h0, k1 * c + k0);
    Integer h = h1 * fl + h0, k = k1 * fl + k0;
    h0 = h1, k0 = k1, h1 = h, k1 = k;
    if (bound && k1 > *bound) return std::nullopt;
    Rational nlo = 1 / (hi - fl), nhi = 1 / (lo - fl);
    lo = std::move(nlo);
    hi = std::move(nhi);
  }
}

// Largest d <= bound with d = residue (mod b).
Integer largest_congruent(const Integer& residue, const Integer& b, const Integer& bound) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), residue.get_mpz_t(), b.get_mpz_t());
  if (r > bound) return 0;
  Integer k;
  mpz_fdiv_q(k.get_mpz_t(), Integer(bound - r).get_mpz_t(), b.get_mpz_t());
  return r + k * b;
}

}  // namespace

Rational simplest_rational_between(const Rational& lo, const Rational& hi) {
  if (lo > hi) fail(Errc::invalid_input, "empty interval");
  if (lo <= 0 && hi >= 0) return 0;
  if (hi < 0) return -*simplest_positive_gap(-hi, -lo, std::nullopt);
  return *simplest_positive_gap(lo, hi, std::nullopt);
}

Rational rational_reconstruct(const DecimalWithError& x, const Integer& den_bound) {
  if (den_bound < 1) fail(Errc::invalid_input, "den_bound must be at least 1");
  Rational center = to_rational(x.value());
  Rational radius = 2 * to_rational(x.abs_error());
  Rational lo = center - radius, hi = center + radius;
  std::optional<Rational> found;
  if (lo <= 0 && hi >= 0)
    found = Rational(0);
  else if (hi < 0) {
    found = simplest_positive_gap(-hi, -lo, den_bound);
    if (found) found = -*found;
  } else {
    found = simplest_positive_gap(lo, hi, den_bound);
  }
  if (!found || found->get_den() > den_bound)
    fail(Errc::recognition_failure,
         "no rational with denominator <= " + den_bound.get_str() + " within " + x.to_string(20));
  const Rational best = *found;
  // The Farey neighbours of best in F_B are the nearest fractions with q <= B on either side.
  const Integer a = best.get_num(), b = best.get_den();
  Integer inv = 0;
  if (b > 1) mpz_invert(inv.get_mpz_t(), Integer(a % b + b).get_mpz_t(), b.get_mpz_t());
  Integer d_right = b == 1 ? den_bound : largest_congruent(-inv, b, den_bound);
  Integer d_left = b == 1 ? den_bound : largest_congruent(inv, b, den_bound);
  if (d_right > 0) {
    Rational right = make_rational((1 + a * d_right) / b, d_right);
    if (right <= hi)
      fail(Errc::ambiguous_recognition, best.get_str() + " and " + right.get_str() + " both fit " + x.to_string(20));
  }
  if (d_left > 0) {
    Rational left = make_rational((a * d_left - 1) / b, d_left);
    if (left >= lo)
      fail(Errc::ambiguous_recognition, best.get_str() + " and " + left.get_str() + " both fit " + x.to_string(20));
  }
  return best;
}

namespace {

struct NumericRoot {
  DecimalWithError value;
  std::vector<size_t> inputs;
};

bool close(const DecimalWithError& a, const DecimalWithError& b, const Real& tol) {
  return boost::multiprecision::abs(a.value() - b.value()) <= a.abs_error() + b.abs_error() + tol;
}

// Tr_{Q(zeta_m)/Q}(zeta^k) for m = p^n.
Rational trace_of_power(long k, unsigned long p, unsigned n) {
  unsigned long m = ipow(p, n), s = ipow(p, n - 1);
  long km = ((k % static_cast<long>(m)) + static_cast<long>(m)) % static_cast<long>(m);
  if (km == 0) return Rational(euler_phi(m));
  if (km % static_cast<long>(s) == 0) return Rational(-static_cast<long>(s));
  return 0;
}

// Solves A x = b exactly; nullopt when singular.
std::optional<std::vector<Rational>> solve(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  size_t n = b.size();
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col] == 0) continue;
      Rational f = a[row][col] / a[col][col];
      for (size_t k = col; k < n; ++k) a[row][k] -= f * a[col][k];
      b[row] -= f * b[col];
    }
  }
  for (size_t i = 0; i < n; ++i) b[i] /= a[i][i];
  return b;
}

unsigned long primitive_root(unsigned long m, unsigned long p) {
  unsigned long phi = euler_phi(m);
  for (unsigned long g = 2; g < m; ++g) {
    if (g % p == 0) continue;
    unsigned long x = 1, order = 0;
    do {
      x = x * g % m;
      ++order;
    } while (x != 1);
    if (order == phi) return g;
  }
  return 1;
}

// Tries to find y in Q(zeta_m) whose conjugates over the index-d coset
// decomposition reproduce the numeric values roots[perm[t]].
std::optional<std::vector<CyclotomicNumber>> solve_orbit(const std::vector<NumericRoot>& roots,
                                                          const RationalPolynomial& h, unsigned long m,
                                                          const Real& tol, const Integer& den_bound) {
  auto [p, n] = *odd_prime_power(m);
  unsigned long phi = euler_phi(m);
  size_t d = roots.size();
  unsigned long g = primitive_root(m, p);
  // coset index of a: discrete log mod d.
  std::vector<size_t> coset(m, 0);
  std::vector<unsigned long> units;
  unsigned long x = 1;
  for (unsigned long e = 0; e < phi; ++e) {
    coset[x] = e % d;
    units.push_back(x);
    x = x * g % m;
  }
  const Real pi = boost::math::constants::pi<Real>();
  std::vector<DecimalWithError> cosines(m);
  for (unsigned long r = 0; r < m; ++r) {
    Real c = boost::multiprecision::cos(2 * pi * Real(r) / Real(m));
    cosines[r] = DecimalWithError(c, rounding_slack(c));
  }
  std::vector<std::vector<Rational>> tmat(phi, std::vector<Rational>(phi));
  for (unsigned long j = 0; j < phi; ++j)
    for (unsigned long i = 0; i < phi; ++i) tmat[j][i] = trace_of_power(static_cast<long>(i) - static_cast<long>(j), p, n);

  std::vector<size_t> perm(d);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<DecimalWithError> traces(phi);
    bool ok = true;
    std::vector<Rational> t(phi);
    for (unsigned long j = 0; j < phi && ok; ++j) {
      DecimalWithError acc;
      for (unsigned long a : units) acc = acc + roots[perm[coset[a]]].value * cosines[(a * j) % m];
      try {
        t[j] = rational_reconstruct(acc.widened(tol * Real(phi)), den_bound * Integer(phi));
      } catch (const Error&) {
        ok = false;
      }
    }
    if (!ok) continue;
    auto coeffs = solve(tmat, t);
    if (!coeffs) continue;
    CyclotomicNumber y(m, *coeffs);
    if (!h(y).is_zero()) continue;
    std::vector<CyclotomicNumber> conj(d);
    bool match = true;
    unsigned long gt = 1;
    for (size_t k = 0; k < d && match; ++k) {
      conj[k] = galois_apply(y, static_cast<long>(gt), m);
      DecimalWithError v = real_embedding(conj[k], 1);
      if (!close(v, roots[perm[k]].value, tol)) match = false;
      gt = gt * g % m;
    }
    if (!match) continue;
    std::vector<CyclotomicNumber> by_root(d);
    for (size_t k = 0; k < d; ++k) by_root[perm[k]] = conj[k];
    return by_root;
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return std::nullopt;
}

}  // namespace

AlgebraicOrbit recognize_orbit(std::span<const DecimalWithError> xs, unsigned long m, const Real& tol,
                               const Integer& den_bound) {
  if (xs.empty()) fail(Errc::invalid_input, "empty orbit");
  if (m != 1 && !odd_prime_power(m)) fail(Errc::unsupported_conductor, "conductor " + std::to_string(m));
  const size_t k = xs.size();

  // Elementary symmetric functions e_0..e_k.
  std::vector<DecimalWithError> e(k + 1);
  e[0] = DecimalWithError::exact(1);
  for (const auto& x : xs)
    for (size_t j = k; j >= 1; --j) e[j] = e[j] + e[j - 1] * x;
  std::vector<Rational> f(k + 1);
  f[k] = 1;
  for (size_t j = 1; j <= k; ++j) {
    Rational ej;
    try {
      ej = rational_reconstruct(e[j].widened(tol), den_bound);
    } catch (const Error& err) {
      fail(err.code(), "symmetric function e_" + std::to_string(j) + ": " + err.what());
    }
    f[k - j] = (j % 2 == 0) ? ej : Rational(-ej);
  }
  RationalPolynomial full(f);
  for (const auto& x : xs) {
    DecimalWithError fx = full(x);
    if (boost::multiprecision::abs(fx.value()) > fx.abs_error() + tol)
      fail(Errc::recognition_failure, "recognised polynomial " + full.to_string() + " misses an input");
  }
  RationalPolynomial g = squarefree_part(full);

  std::vector<NumericRoot> distinct;
  for (size_t i = 0; i < k; ++i) {
    auto it = std::find_if(distinct.begin(), distinct.end(),
                           [&](const NumericRoot& r) { return close(r.value, xs[i], tol); });
    if (it == distinct.end())
      distinct.push_back({xs[i], {i}});
    else
      it->inputs.push_back(i);
  }

  std::vector<CyclotomicNumber> values(k);
  std::vector<NumericRoot> irrational;
  std::vector<Rational> rational_roots;
  for (const auto& root : distinct) {
    std::optional<Rational> r;
    try {
      r = rational_reconstruct(root.value.widened(tol), den_bound);
    } catch (const Error&) {
    }
    if (r && g(*r) == 0) {
      rational_roots.push_back(*r);
      for (size_t i : root.inputs) values[i] = CyclotomicNumber(*r);
    } else {
      irrational.push_back(root);
    }
  }
  RationalPolynomial h, rem;
  RationalPolynomial::divmod(g, RationalPolynomial::from_roots(rational_roots), h, rem);
  if (!rem.is_zero()) fail(Errc::recognition_failure, "rational roots do not divide the minimal polynomial");
  if (h.degree() != static_cast<long>(irrational.size()))
    fail(Errc::recognition_failure, "minimal polynomial " + g.to_string() + " has no full root set among the inputs");
  if (!irrational.empty()) {
    if (m == 1) fail(Errc::recognition_failure, "irrational roots of " + g.to_string() + " over Q");
    size_t d = irrational.size();
    if ((euler_phi(m) / 2) % d != 0)
      fail(Errc::recognition_failure,
           "orbit size " + std::to_string(d) + " does not divide phi(" + std::to_string(m) + ")/2");
    if (d > 8) fail(Errc::recognition_failure, "orbit of size " + std::to_string(d) + " is too large to label");
    auto solved = solve_orbit(irrational, h, m, tol, den_bound);
    if (!solved)
      fail(Errc::recognition_failure, "minimal polynomial " + g.to_string() + " has no full root set in Q(zeta_" +
                                          std::to_string(m) + ")");
    for (size_t r = 0; r < irrational.size(); ++r)
      for (size_t i : irrational[r].inputs) values[i] = (*solved)[r];
  }
  return {m, std::move(values), g};
}

}  // namespace etnc
