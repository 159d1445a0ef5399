#include <doctest.h>

#include <random>

#include "etnc/dihedral.hpp"
#include "etnc/error.hpp"
#include "etnc/heights.hpp"
#include "oracles.hpp"

using namespace etnc;

namespace {

DecimalWithError dec(double x) { return DecimalWithError(Real(x), Real("1e-15")); }

// A symmetric positive translate function g -> <Q, gQ>: a Gram matrix of random vectors
// under the regular representation, so Gram(g, h) depends on g^-1 h only.
std::vector<double> random_translates(const DihedralGroup& G, std::mt19937_64& rng) {
  std::normal_distribution<double> nd;
  const auto els = G.elements();
  std::vector<double> v(els.size());
  for (auto& x : v) x = nd(rng);
  std::vector<double> out(els.size());
  // <Q, gQ> = sum_x v(x) v(g^-1 x).
  for (size_t gi = 0; gi < els.size(); ++gi) {
    double acc = 0;
    for (size_t xi = 0; xi < els.size(); ++xi) acc += v[xi] * v[G.index(G.multiply(G.inverse(els[gi]), els[xi]))];
    out[gi] = acc;
  }
  return out;
}

}  // namespace

TEST_CASE("equivariant heights against the double sum") {
  std::mt19937_64 rng(23);
  for (auto [p, f] : std::vector<std::pair<unsigned long, std::vector<unsigned long>>>{{3, {3}}, {5, {5}}, {7, {7}}}) {
    DihedralGroup G(p, f);
    const auto els = G.elements();
    for (int trial = 0; trial < 5; ++trial) {
      auto tr = random_translates(G, rng);
      std::vector<DecimalWithError> xs;
      for (double x : tr) xs.push_back(dec(x));
      GramMatrix gram(G, xs);
      for (const auto& psi : irreducible_characters(G)) {
        std::complex<long double> acc = 0;
        for (const auto& g : els)
          for (const auto& h : els) {
            auto a = oracle::embed(character_value(G, psi, G.inverse(g)).coefficients_at(G.exponent()), G.exponent());
            auto b = oracle::embed(character_value(G, psi, G.inverse(h)).coefficients_at(G.exponent()), G.exponent());
            acc += a * b * static_cast<long double>(tr[G.index(G.multiply(G.inverse(g), h))]);
          }
        long double want = acc.real() * psi.dimension() / (2.0L * G.order());
        DecimalWithError got = equivariant_height(G, psi, gram);
        CHECK(std::abs(static_cast<long double>(got.value()) - want) < 1e-8L);
        // Heights of a positive definite pairing are non-negative.
        CHECK(got.value() > Real(-1e-8));
      }
    }
  }
}

TEST_CASE("Gram matrix lookup") {
  DihedralGroup G(3, {3});
  std::vector<DecimalWithError> xs;
  for (int i = 0; i < 6; ++i) xs.push_back(dec(i + 1));
  GramMatrix gram(G, xs);
  GroupElement s = G.generator(0);
  CHECK(gram.translate(s).value() == Real(2));
  CHECK(gram.entry(s, s).value() == Real(1));
  CHECK(gram.entry(G.identity(), G.tau()).value() == xs[G.index(G.tau())].value());
}

TEST_CASE("regulators against cofactor expansion") {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> ud(-2, 2);
  for (size_t n = 1; n <= 5; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<std::vector<long double>> m(n, std::vector<long double>(n));
      std::vector<std::vector<DecimalWithError>> gm(n, std::vector<DecimalWithError>(n));
      for (size_t i = 0; i < n; ++i)
        for (size_t j = i; j < n; ++j) {
          double x = ud(rng) + (i == j ? 4 : 0);
          m[i][j] = m[j][i] = x;
          gm[i][j] = gm[j][i] = DecimalWithError(Real(x), Real(0));
        }
      RegulatorResult r = regulator(gm);
      CHECK_FALSE(r.rank_deficient);
      CHECK(std::abs(static_cast<long double>(r.value.value()) - oracle::det(m)) < 1e-9L);
    }
  }
  CHECK(regulator({}).value.value() == Real(1));
  std::vector<std::vector<DecimalWithError>> singular{{dec(1), dec(2)}, {dec(2), dec(4)}};
  CHECK(regulator(singular).rank_deficient);
  std::vector<std::vector<DecimalWithError>> big(9, std::vector<DecimalWithError>(9, dec(1)));
  CHECK_THROWS_AS(regulator(big), Error);
}

TEST_CASE("H and Htilde") {
  DihedralGroup G(3, {3});
  std::vector<DecimalWithError> xs{dec(2), dec(0.5), dec(0.5), dec(0.25), dec(0.25), dec(0.25)};
  GramMatrix gram(G, xs);
  CHECK(H_value(G, epsilon_character(), epsilon_character(), gram).value() == Real(1));
  CHECK(H_value(G, trivial_character(), epsilon_character(), gram).value() ==
        equivariant_height(G, trivial_character(), gram).value());
  auto k = dec(2), K = dec(6), L = dec(10);
  CHECK(H_tilde_value(trivial_character(), k, K, L).value() == Real(2));
  CHECK(H_tilde_value(epsilon_character(), k, K, L).value() == Real(3));
  CHECK(H_tilde_value(parse_character(G, "psi[1]"), k, K, L).value() == Real(5));
}

TEST_CASE("periods by character") {
  DihedralGroup G(5, {5});
  auto plus = DecimalWithError::parse("2.5"), minus = DecimalWithError::parse("1.5");
  Character psi = parse_character(G, "psi[1]");
  CHECK(omega_value(trivial_character(), plus, minus, true).value() == Real(2.5));
  CHECK(omega_value(epsilon_character(), plus, minus, true).value() == Real(2.5));
  CHECK(omega_value(epsilon_character(), plus, minus, false).value() == Real(1.5));
  CHECK(omega_value(psi, plus, minus, true).value() == Real(6.25));
  CHECK(omega_value(psi, plus, minus, false).value() == Real(3.75));
}
