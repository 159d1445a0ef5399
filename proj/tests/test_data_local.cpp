#include <doctest.h>

#include "etnc/dataset.hpp"
#include "etnc/error.hpp"
#include "etnc/hypotheses.hpp"
#include "etnc/local_factors.hpp"
#include "oracles.hpp"

using namespace etnc;

namespace {

std::string dataset_path(const std::string& name) { return std::string(ETNC_TEST_DATASET_DIR) + "/" + name + ".json"; }

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an etnc::Error");
  return Errc::invalid_input;
}

const HypothesisResult& hyp(const std::vector<HypothesisResult>& hs, const std::string& id) {
  for (const auto& h : hs)
    if (h.id == id) return h;
  throw std::runtime_error("no hypothesis " + id);
}

PlaceData make_place(const DihedralGroup& G, long q, long a, const std::string& inertia, const std::string& frob) {
  PlaceData pl;
  pl.label = std::to_string(q);
  pl.q = q;
  pl.a = a;
  pl.inertia = {G.parse_element(inertia)};
  pl.frobenius = G.parse_element(frob);
  return pl;
}

}  // namespace

TEST_CASE("bundled datasets parse") {
  Dataset a = load_dataset(dataset_path("37a1"));
  CHECK(a.group.order() == 14);
  CHECK(a.curve.conductor == 37);
  CHECK(a.analytic.characters.size() == 5);
  Dataset b = load_dataset(dataset_path("21a1"));
  CHECK(b.group.order() == 10);
  CHECK(b.analytic.characters.size() == 4);
  CHECK(b.bsd.has_value());
}

TEST_CASE("serialisation round trip") {
  for (const char* name : {"37a1", "21a1"}) {
    Dataset d = load_dataset(dataset_path(name));
    std::string s = serialize_dataset(d);
    Dataset e = parse_dataset(s);
    CHECK(e == d);
    CHECK(serialize_dataset(e) == s);
  }
}

TEST_CASE("schema and data errors") {
  Dataset d = load_dataset(dataset_path("37a1"));
  std::string s = serialize_dataset(d);
  CHECK(code_of([] { parse_dataset("{not json"); }) == Errc::schema_violation);
  CHECK(code_of([] { parse_dataset("{}"); }) == Errc::schema_violation);
  CHECK(code_of([] { load_dataset("/nonexistent/x.json"); }) == Errc::data_error);

  // Dropping one induced character leaves the character table incomplete.
  Dataset broken = d;
  broken.analytic.characters.erase(parse_character(d.group, "psi[3]"));
  CHECK(code_of([&] { parse_dataset(serialize_dataset(broken)); }) == Errc::data_error);

  Dataset hasse = d;
  hasse.places[0].a = 100;
  CHECK(code_of([&] { parse_dataset(serialize_dataset(hasse)); }) == Errc::data_error);
}

TEST_CASE("hypotheses") {
  Dataset d = load_dataset(dataset_path("37a1"));
  auto hs = check_hypotheses(d);
  CHECK(hs.size() == 9);
  CHECK(hyp(hs, "e").status == HypothesisStatus::holds);
  // |A(kappa_w)| = 578 = 2 * 17^2 is prime to 7.
  CHECK(hyp(hs, "f").status == HypothesisStatus::holds);
  CHECK(hyp(hs, "h").status == HypothesisStatus::holds);
  CHECK(hyp(hs, "i").status == HypothesisStatus::holds);
  CHECK(hyp(hs, "g").status == HypothesisStatus::undetermined);

  Dataset overlap = d;
  overlap.tower.S_b.push_back("577");
  CHECK(hyp(check_hypotheses(overlap), "e").status == HypothesisStatus::fails);

  Dataset divisible = d;
  divisible.tower.S_r = {"577"};
  divisible.places[0].a = -20;  // N = 598 = 2 * 13 * 23, still prime to 7
  CHECK(hyp(check_hypotheses(divisible), "f").status == HypothesisStatus::holds);
  divisible.places[0].a = 4;  // N = 574 = 2 * 7 * 41
  CHECK(hyp(check_hypotheses(divisible), "f").status == HypothesisStatus::fails);

  Dataset orders = d;
  orders.analytic.characters[epsilon_character()].order = 2;
  CHECK(hyp(check_hypotheses(orders), "i").status == HypothesisStatus::fails);
}

TEST_CASE("expected vanishing orders") {
  DihedralGroup G(7, {7});
  auto r1 = expected_vanishing_orders(G, 1);
  CHECK(r1.at(trivial_character()) == 1);
  CHECK(r1.at(epsilon_character()) == 0);
  CHECK(r1.at(parse_character(G, "psi[2]")) == 1);
  auto r0 = expected_vanishing_orders(G, 0);
  CHECK(r0.at(trivial_character()) == 0);
  CHECK(r0.at(epsilon_character()) == 1);
  CHECK(rho_A(0) == trivial_character());
  CHECK(code_of([&] { expected_vanishing_orders(G, 2); }) == Errc::out_of_scope);
}

TEST_CASE("local correction table over a grid of (a, q)") {
  DihedralGroup G(3, {3});
  const Character one = trivial_character(), eps = epsilon_character(), psi = parse_character(G, "psi[1]");
  for (long q : {5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L}) {
    for (long a = -10; a <= 10; ++a) {
      if (a * a > 4 * q) continue;
      const Rational Nq = make_rational(q + 1 - a, q);
      auto check = [&](const PlaceData& pl, const Character& c, long u, const Rational& t) {
        CorrectionPair cp = local_correction(G, c, pl);
        CHECK(cp.u == CyclotomicNumber(u));
        CHECK(cp.t == CyclotomicNumber(t));
      };
      PlaceData e2 = make_place(G, q, a, "t", "1");
      check(e2, one, -1, Nq);
      check(e2, eps, 1, 1);
      check(e2, psi, -1, Nq);
      PlaceData e3 = make_place(G, q, a, "s1", "1");
      check(e3, one, -1, Nq);
      check(e3, eps, -1, Nq);
      check(e3, psi, 1, 1);
      PlaceData e32 = make_place(G, q, a, "s1", "t");
      check(e32, one, -1, Nq);
      check(e32, eps, 1, make_rational(q + 1 + a, q));
      check(e32, psi, 1, 1);
      // (N_w / q_w)(q_v / N_v) with N_w = N (2q + 2 - N).
      Rational ratio = Rational(quadratic_point_count(q + 1 - a, q)) / Rational(q * q) / Nq;
      CHECK(ratio == make_rational(q + 1 + a, q));
    }
  }
}

TEST_CASE("unramified places contribute a local factor") {
  DihedralGroup G(5, {5});
  PlaceData pl = make_place(G, 11, 2, "1", "s1");
  pl.inertia.clear();
  CorrectionPair cp = local_correction(G, parse_character(G, "psi[1]"), pl);
  // Frobenius s1 has eigenvalues z, z^-1: u = 1, t = prod(1 - a/(l q) + 1/(l^2 q)).
  CHECK(cp.u == CyclotomicNumber(1));
  CyclotomicNumber z = CyclotomicNumber::zeta(5, 1);
  CyclotomicNumber t = 1;
  for (const auto& l : {z, z.inverse()})
    t *= CyclotomicNumber(1) - CyclotomicNumber(make_rational(2, 11)) / l + CyclotomicNumber(make_rational(1, 11)) / (l * l);
  CHECK(cp.t == t);
}

TEST_CASE("point counts over the quadratic residue extension") {
  CHECK(quadratic_point_count(16, 19) == 384);
  CHECK(quadratic_point_count(578, 577) == 578 * 578);
  CHECK(code_of([] { quadratic_point_count(100, 19); }) == Errc::data_error);
  // Brute force: for every curve y^2 = x^3 + a4 x + a6 over small F_p, compare with F_{p^2}.
  for (long p : {5L, 7L, 11L}) {
    for (long a4 = 0; a4 < p; ++a4)
      for (long a6 = 0; a6 < p; ++a6) {
        long disc = (4 * a4 * a4 * a4 + 27 * a6 * a6) % p;
        if (disc == 0) continue;
        long N = oracle::count_points(p, 0, 0, 0, a4, a6);
        long Nw = oracle::count_points_quadratic(p, 0, 0, 0, a4, a6);
        CHECK(quadratic_point_count(N, p) == Nw);
      }
  }
  // 37a1 at 577 has a_577 = 0.
  CHECK(oracle::count_points(577, 0, 0, 1, -1, 0) == 578);
  // 21a1: y^2 + xy = x^3 - 4x - 1 has a_19 = 4.
  CHECK(oracle::count_points(19, 1, 0, 0, -4, -1) == 16);
}

TEST_CASE("Gauss ratios and discriminant factors") {
  Dataset d = load_dataset(dataset_path("37a1"));
  const auto& G = d.group;
  CHECK(d_psi(d.tower, trivial_character()) == 1);
  CHECK(d_psi(d.tower, epsilon_character()) == 577);
  CHECK(d_psi(d.tower, parse_character(G, "psi[1]")) == 577);
  CHECK(gauss_ratio(d, trivial_character()).unit == CyclotomicNumber(-1));
  CHECK(gauss_ratio(d, epsilon_character()).unit == CyclotomicNumber(1));
  GaussRatio g = gauss_ratio(d, parse_character(G, "psi[2]"));
  CHECK(g.unit == CyclotomicNumber(-1));
  CHECK(g.radicand == 577);
}

TEST_CASE("global corrections") {
  Dataset d = load_dataset(dataset_path("37a1"));
  const auto& G = d.group;
  CHECK(global_correction(d, trivial_character()).product() == CyclotomicNumber(make_rational(-578, 577)));
  CHECK(global_correction(d, epsilon_character()).product() == CyclotomicNumber(1));
  for (const char* k : {"psi[1]", "psi[2]", "psi[3]"})
    CHECK(global_correction(d, parse_character(G, k)).product() == CyclotomicNumber(make_rational(-578, 577)));

  Dataset b = load_dataset(dataset_path("21a1"));
  CHECK(global_correction(b, trivial_character()).product() == CyclotomicNumber(make_rational(32, 19)));
  CHECK(global_correction(b, epsilon_character()).product() == CyclotomicNumber(make_rational(48, 19)));
  CHECK(global_correction(b, parse_character(b.group, "psi[1]")).product() == CyclotomicNumber(-2));

  Dataset missing = d;
  missing.tower.S_r = {"999"};
  CHECK_THROWS_AS(global_correction(missing, trivial_character()), Error);
}
