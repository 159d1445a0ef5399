#include <doctest.h>

#include <random>

#include "etnc/congruence.hpp"
#include "etnc/dataset.hpp"
#include "etnc/error.hpp"
#include "etnc/group_ring.hpp"
#include "oracles.hpp"
#include "synthetic.hpp"

using namespace etnc;

namespace {

std::string dataset_path(const std::string& name) { return std::string(ETNC_TEST_DATASET_DIR) + "/" + name + ".json"; }

CharacterMap exact_Q(const Dataset& d, Route route) {
  QVector num = assemble_Q(d, route);
  return recognize_Q(d.group, num, d.options.den_bound, Real(0)).exact();
}

// Random Galois-consistent Q vector with p-integral entries (odd p).
CharacterMap random_Q(const DihedralGroup& G, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-30, 30), den(0, 3);
  auto r = [&] {
    long n = num(rng);
    return make_rational(n == 0 ? 1 : n, 1L << den(rng));
  };
  CharacterMap Q;
  Q[trivial_character()] = r();
  Q[epsilon_character()] = r();
  for (const auto& orbit : induced_orbits(G)) {
    // a + b (z + z^-1) in the real subfield, spread over the orbit by sigma_a.
    const Character& base = orbit.front();
    CyclotomicNumber z = CyclotomicNumber::zeta(character_order(G, base.chi), 1);
    CyclotomicNumber x = CyclotomicNumber(r()) + CyclotomicNumber(r()) * (z + z.inverse());
    for (long a = 1; a < static_cast<long>(G.exponent()); ++a) {
      if (a % static_cast<long>(G.p()) == 0) continue;
      Q[galois_conjugate(G, base, a)] = galois_apply(x, a);
    }
  }
  return Q;
}

}  // namespace

TEST_CASE("routes") {
  CHECK(parse_route("direct") == Route::direct);
  CHECK(parse_route("gz") == Route::gz);
  CHECK_FALSE(parse_route("auto").has_value());
  CHECK_THROWS_AS(parse_route("heegner"), Error);
  CHECK(to_string(Route::qhat) == "qhat");
}

TEST_CASE("37a1 exact Q vector and congruences") {
  Dataset d = load_dataset(dataset_path("37a1"));
  const auto& G = d.group;
  CharacterMap Q = exact_Q(d, Route::qhat);
  CHECK(Q.at(trivial_character()) == CyclotomicNumber(make_rational(-578, 577)));
  CHECK(Q.at(epsilon_character()) == CyclotomicNumber(4));
  for (const char* k : {"psi[1]", "psi[2]", "psi[3]"})
    CHECK(Q.at(parse_character(G, k)) == CyclotomicNumber(make_rational(-2312, 577)));
  for (const auto& row : check_condition_i(G, Q)) CHECK(row.passed());
  CongruenceReport c = check_congruences(G, Q, default_modulus_exponent(G));
  CHECK(c.n == 1);
  CHECK(c.passed);
  CHECK(c.labelings_agree);
  CHECK(c.shortcut_agrees);
  REQUIRE(c.residues.size() == 7);
  CHECK(c.residues[0].value == make_rational(-16184, 577));
  CHECK(c.residues[0].valuation == 1);
  for (size_t i = 1; i < 7; ++i) {
    CHECK(c.residues[i].value == 0);
    CHECK_FALSE(c.residues[i].valuation.has_value());
  }
}

TEST_CASE("37a1 with a perturbed eps value fails") {
  Dataset d = load_dataset(dataset_path("37a1"));
  CharacterMap Q = exact_Q(d, Route::qhat);
  Q[epsilon_character()] = 5;
  for (const auto& row : check_condition_i(d.group, Q)) CHECK(row.passed());
  CongruenceReport c = check_congruences(d.group, Q, 1);
  CHECK_FALSE(c.passed);
  CHECK(c.residues[0].value == make_rational(-16762, 577));
}

TEST_CASE("21a1 exact Q vector") {
  Dataset d = load_dataset(dataset_path("21a1"));
  const auto& G = d.group;
  QVector num = assemble_Q(d, Route::qhat);
  QVector ex = recognize_Q(G, num, d.options.den_bound, Real(0));
  CharacterMap Q = ex.exact();
  CHECK(Q.at(trivial_character()) == CyclotomicNumber(make_rational(8, 19)));
  CHECK(Q.at(epsilon_character()) == CyclotomicNumber(make_rational(24, 19)));
  REQUIRE(ex.orbits.size() == 1);
  CHECK(ex.orbits[0].min_poly.to_string() == "x^2 - 48*x + 256");
  CHECK(ex.orbits[0].sum == CyclotomicNumber(-96));
  CongruenceReport c = check_congruences(G, Q, 1);
  CHECK(c.passed);
  std::vector<Rational> want{make_rational(-69120, 361), make_rational(-11360, 361), make_rational(-11360, 361),
                             make_rational(46400, 361), make_rational(46400, 361)};
  std::vector<Rational> got;
  for (const auto& r : c.residues) got.push_back(r.value);
  std::sort(want.begin(), want.end());
  std::sort(got.begin(), got.end());
  CHECK(got == want);
}

TEST_CASE("condition (i) rejects non-units and broken equivariance") {
  DihedralGroup G(5, {5});
  std::mt19937_64 rng(1);
  CharacterMap Q = random_Q(G, rng);
  Q[trivial_character()] = 1;
  Q[epsilon_character()] = make_rational(1, 5);
  bool eps_failed = false;
  for (const auto& row : check_condition_i(G, Q))
    if (row.psi == epsilon_character()) {
      eps_failed = !row.passed();
      CHECK(row.valuation == -1);
    }
  CHECK(eps_failed);

  CharacterMap skew = Q;
  skew[parse_character(G, "psi[2]")] = skew.at(parse_character(G, "psi[1]"));
  bool some_inequivariant = false;
  for (const auto& row : check_condition_i(G, skew)) some_inequivariant |= !row.equivariant;
  // Equal values on a nontrivial orbit are equivariant only when rational.
  if (!skew.at(parse_character(G, "psi[1]")).is_rational()) CHECK(some_inequivariant);
}

TEST_CASE("sum of S over P equals |P| Q_1 Q_eps") {
  std::mt19937_64 rng(99);
  for (auto [p, f] : std::vector<std::pair<unsigned long, std::vector<unsigned long>>>{{3, {3}}, {5, {5}}, {7, {7}}, {3, {9}}}) {
    DihedralGroup G(p, f);
    for (int i = 0; i < 20; ++i) {
      CharacterMap Q = random_Q(G, rng);
      CongruenceReport c = check_congruences(G, Q, 1);
      Rational sum = 0;
      for (const auto& r : c.residues) sum += r.value;
      CHECK(sum == Rational(G.order_P()) * Q.at(trivial_character()).to_rational() * Q.at(epsilon_character()).to_rational());
      CHECK(c.labelings_agree);
      // With p-integral entries every S(pi) is congruent to S(1) modulo p.
      if (f.size() == 1 && f[0] == p) CHECK(c.shortcut_agrees);
    }
  }
}

TEST_CASE("verdicts are stable under p-unit scaling") {
  std::mt19937_64 rng(7);
  DihedralGroup G(5, {5});
  for (int i = 0; i < 50; ++i) {
    CharacterMap Q = random_Q(G, rng);
    CongruenceReport base = check_congruences(G, Q, 1);
    for (long lam : {2L, 3L, -7L}) {
      CharacterMap R = Q;
      R[trivial_character()] = R.at(trivial_character()) * CyclotomicNumber(lam);
      for (auto& [psi, v] : R)
        if (psi.kind == CharacterKind::induced) v = v * CyclotomicNumber(lam);
      CongruenceReport scaled = check_congruences(G, R, 1);
      CHECK(scaled.passed == base.passed);
      for (size_t k = 0; k < base.residues.size(); ++k) CHECK(scaled.residues[k].valuation == base.residues[k].valuation);
    }
  }
}

TEST_CASE("the Heegner route satisfies the congruences") {
  Dataset d = load_dataset(dataset_path("37a1"));
  CHECK(gz_constant(d.curve) == 2);
  for (unsigned long p : {3UL, 5UL, 7UL}) {
    DihedralGroup G(p, {p});
    CharacterMap Q = synth::gz_vector(G, 2, 0, 577);
    for (const auto& row : check_condition_i(G, Q)) CHECK(row.passed());
    CHECK(check_congruences(G, Q, 1).passed);
    CharacterMap bad = synth::gz_vector(G, Rational(p), 0, 577);
    bool ok = true;
    for (const auto& row : check_condition_i(G, bad)) ok = ok && row.passed();
    CHECK_FALSE(ok);
  }
}

TEST_CASE("modulus exponent") {
  CHECK(default_modulus_exponent(DihedralGroup(7, {7})) == 1);
  CHECK(default_modulus_exponent(DihedralGroup(3, {9})) == 2);
  CHECK(default_modulus_exponent(DihedralGroup(3, {3, 3})) == 2);
}

TEST_CASE("route agreement on 37a1") {
  Dataset d = load_dataset(dataset_path("37a1"));
  try {
    CharacterMap direct = exact_Q(d, Route::direct);
    CHECK(direct == exact_Q(d, Route::qhat));
  } catch (const Error& e) {
    CHECK(e.code() == Errc::route_unavailable);
  }
  CHECK_THROWS_AS(assemble_Q(d, Route::gz), Error);
}
