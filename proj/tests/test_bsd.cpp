#include <doctest.h>

#include <random>

#include "etnc/bsd.hpp"
#include "etnc/congruence.hpp"
#include "etnc/error.hpp"
#include "synthetic.hpp"

using namespace etnc;

namespace {

std::string dataset_path(const std::string& name) { return std::string(ETNC_TEST_DATASET_DIR) + "/" + name + ".json"; }

BSDPlace place(unsigned order, const std::string& kodaira, std::vector<Integer> k, std::vector<Integer> K,
               std::vector<Integer> L) {
  BSDPlace pl;
  pl.label = "v";
  pl.q = 5;
  pl.decomposition_order = order;
  pl.kodaira = kodaira;
  pl.tamagawa = {{"k", std::move(k)}, {"K", std::move(K)}, {"L", std::move(L)}};
  return pl;
}

std::map<std::string, Rational> sha_by_field(const BSDSquaresReport& r) {
  std::map<std::string, Rational> out;
  for (const auto& s : r.sha) out[s.field] = s.sha;
  return out;
}

}  // namespace

TEST_CASE("Tamagawa congruences by decomposition order") {
  CHECK(tamagawa_congruence(place(1, "I2", {2}, {2, 2}, {2, 2, 2})).holds);
  CHECK(tamagawa_congruence(place(2, "I3", {3}, {5}, {3, 5})).holds);
  CHECK_FALSE(tamagawa_congruence(place(2, "I3", {3}, {5}, {1, 5})).holds);
  TamagawaCheck eq = tamagawa_congruence(place(3, "I1", {1}, {1, 1}, {1}));
  CHECK(eq.holds);
  CHECK(eq.rule_conforming);
  CHECK(eq.note.empty());
  TamagawaCheck i0 = tamagawa_congruence(place(3, "I0*", {1}, {1, 1}, {4}));
  CHECK(i0.holds);
  CHECK(i0.rule_conforming);
  TamagawaCheck odd = tamagawa_congruence(place(3, "I2", {1}, {1, 1}, {4}));
  CHECK(odd.holds);
  CHECK_FALSE(odd.rule_conforming);
  CHECK_FALSE(odd.note.empty());
  TamagawaCheck broken = tamagawa_congruence(place(3, "I1", {2}, {2, 2}, {1}));
  CHECK_FALSE(broken.holds);
  CHECK(broken.lhs == 8);
  CHECK_THROWS_AS(tamagawa_congruence(place(3, "I1", {1}, {1}, {1})), Error);
  BSDPlace inf = place(3, "", {1}, {1, 1}, {1});
  inf.infinite = true;
  CHECK_THROWS_AS(tamagawa_congruence(inf), Error);
}

TEST_CASE("Neron differential check") {
  BSDPlace pl = place(1, "I1", {1}, {1, 1}, {1, 1, 1});
  CHECK(neron_quotient_check(pl));
  pl.differential_valuation = 1;
  pl.differential_exponents = {{"k", {1}}, {"K", {1, 1}}, {"L", {1, 1, 1}}};
  CHECK(neron_quotient_check(pl));
  pl.differential_exponents = {{"K", {2}}, {"L", {2, 1}}};
  CHECK(neron_quotient_check(pl));
  pl.differential_exponents = {{"k", {1}}, {"K", {1, 1}}, {"L", {1, 1}}};
  CHECK_FALSE(neron_quotient_check(pl));
}

TEST_CASE("Sha predictions for the bundled curves") {
  Dataset b = load_dataset(dataset_path("21a1"));
  BSDSquaresReport r = run_bsd_squares(b, b.options.den_bound, Real(0));
  auto sha = sha_by_field(r);
  CHECK(sha.at("k") == 1);
  CHECK(sha.at("K") == 1);
  CHECK(sha.at("L") == 4);
  CHECK(sha.at("F") == 32);
  for (const auto& s : r.sha) {
    CHECK(s.integral);
    CHECK(s.square == (s.field != "F"));
  }
  CHECK_FALSE(r.s3);

  Dataset a = load_dataset(dataset_path("37a1"));
  auto sha37 = sha_by_field(run_bsd_squares(a, a.options.den_bound, Real(0)));
  CHECK(sha37.at("k") == 1);
  CHECK(sha37.at("K") == 1);
}

TEST_CASE("synthetic S3 towers") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 40; ++i) {
    synth::S3Case c = synth::make_s3_case(rng);
    BSDSquaresReport r = run_bsd_squares(c.d, c.d.options.den_bound, Real(0));
    CHECK(r.s3);
    CHECK(r.congruence);
    CHECK(r.local_conditions);
    auto sha = sha_by_field(r);
    for (const auto& [f, v] : c.sha) CHECK(sha.at(f) == Rational(v));
  }
  for (int i = 0; i < 10; ++i) {
    synth::S3Case c = synth::make_s3_case(rng, true);
    BSDSquaresReport r = run_bsd_squares(c.d, c.d.options.den_bound, Real(0));
    CHECK(r.s3);
    CHECK_FALSE(r.congruence);
    CHECK_FALSE(r.local_conditions);
  }
}

TEST_CASE("Qtilde values read off the field left-hand sides") {
  std::mt19937_64 rng(5);
  synth::S3Case c = synth::make_s3_case(rng);
  BSDSquaresReport r = run_bsd_squares(c.d, c.d.options.den_bound, Real(0));
  REQUIRE(r.qtilde.size() == 3);
  for (const auto& [eta, q] : r.qtilde) CHECK(q.source == "bsd-lhs");
  CHECK(r.product == r.qtilde.at(trivial_character()).exact * r.qtilde.at(epsilon_character()).exact);
}
