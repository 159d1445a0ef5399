#include <chrono>
#include <filesystem>
#include <functional>
#include <ostream>
#include <random>

#include "cli.hpp"
#include "etnc/bsd.hpp"
#include "etnc/group_ring.hpp"
#include "etnc/pipeline.hpp"
#include "etnc/recognition.hpp"

namespace etnc::cli {

namespace {

bool recognition_round_trips() {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> den(1, 10000), num(-100000, 100000);
  for (int i = 0; i < 500; ++i) {
    Rational r = make_rational(num(rng), den(rng));
    DecimalWithError x(to_real(r), Real("1e-15") * (1 + abs(to_real(r))));
    if (rational_reconstruct(x, 10000) != r) return false;
  }
  return true;
}

bool kolyvagin_range() {
  for (long m = 3; m <= 25; m += 2)
    if (!kolyvagin_identity(m)) return false;
  return true;
}

bool idempotents_orthogonal() {
  DihedralGroup G(5, {5});
  auto chars = irreducible_characters(G);
  GroupRingElement sum(G);
  for (const auto& a : chars) {
    GroupRingElement ea = idempotent(G, a);
    sum = sum + ea;
    for (const auto& b : chars) {
      GroupRingElement prod = ea * idempotent(G, b);
      if (a == b ? !(prod == ea) : !(prod == GroupRingElement(G))) return false;
    }
  }
  return sum == GroupRingElement::basis(G, G.identity());
}

bool tamagawa_rules() {
  BSDPlace inert{"v", false, 5, 3, "I0*", {{"k", {1}}, {"K", {1, 1}}, {"L", {4}}}, 0, {}};
  BSDPlace planted{"v", false, 5, 3, "I1", {{"k", {2}}, {"K", {2, 2}}, {"L", {1}}}, 0, {}};
  return tamagawa_congruence(inert).holds && !tamagawa_congruence(planted).holds;
}

std::function<bool()> dataset_check(const std::string& dir, const std::string& file) {
  return [dir, file] {
    Dataset d = load_dataset((std::filesystem::path(dir) / file).string());
    return verify(d).verdict == "pass" && verify_bsd_squares(d).verdict != "inconclusive";
  };
}

}  // namespace

int run_selftest(const std::string& dataset_dir, std::ostream& out) {
  std::vector<std::pair<std::string, std::function<bool()>>> checks = {
      {"rational reconstruction round trip", recognition_round_trips},
      {"Kolyvagin identity for odd m <= 25", kolyvagin_range},
      {"central idempotents of D10", idempotents_orthogonal},
      {"Tamagawa case rules", tamagawa_rules},
      {"dataset 37a1", dataset_check(dataset_dir, "37a1.json")},
      {"dataset 21a1", dataset_check(dataset_dir, "21a1.json")},
  };
  int failures = 0;
  auto start = std::chrono::steady_clock::now();
  for (const auto& [name, check] : checks) {
    bool ok = false;
    std::string why;
    try {
      ok = check();
    } catch (const std::exception& e) {
      why = e.what();
    }
    out << (ok ? "ok    " : "FAIL  ") << name;
    if (!why.empty()) out << " (" << why << ")";
    out << "\n";
    failures += ok ? 0 : 1;
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  out << failures << " failure(s) in " << ms << " ms\n";
  return failures;
}

}  // namespace etnc::cli
