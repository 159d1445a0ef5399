// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "etnc/bsd.hpp"
#include "etnc/congruence.hpp"
#include "etnc/dataset.hpp"
#include "etnc/error.hpp"
#include "etnc/group_ring.hpp"
#include "etnc/local_factors.hpp"
#include "etnc/pipeline.hpp"
#include "etnc/recognition.hpp"
#include "oracles.hpp"
#include "synthetic.hpp"

using namespace etnc;

namespace {

std::string dataset_path(const std::string& name) { return std::string(ETNC_TEST_DATASET_DIR) + "/" + name + ".json"; }

// Collects the first few mismatches of one criterion.
struct Check {
  long failures = 0;
  std::vector<std::string> messages;
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    ++failures;
    if (messages.size() < 5) messages.push_back(what);
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

CharacterMap recognised(const Dataset& d) {
  return recognize_Q(d.group, assemble_Q(d, Route::qhat), d.options.den_bound, Real(0)).exact();
}

void c1(Check& c) {
  auto t0 = Clock::now();
  Dataset d = load_dataset(dataset_path("37a1"));
  VerificationReport rep = verify(d);
  CharacterMap Q = recognised(d);
  double dt = seconds_since(t0);
  const auto& G = d.group;
  c.expect(Q.at(trivial_character()) == CyclotomicNumber(make_rational(-578, 577)), "Q_1");
  c.expect(Q.at(epsilon_character()) == CyclotomicNumber(4), "Q_eps");
  for (const auto& orbit : induced_orbits(G))
    for (const auto& psi : orbit)
      c.expect(Q.at(psi) == CyclotomicNumber(make_rational(-2312, 577)), "Q_" + psi.key());
  for (const auto& row : check_condition_i(G, Q)) c.expect(row.passed(), "condition (i) at " + row.psi.key());
  CongruenceReport cr = check_congruences(G, Q, 1);
  for (const auto& r : cr.residues) {
    c.expect(!r.valuation || *r.valuation >= 1, "v_7 S(" + G.format(r.pi) + ")");
    bool identity = r.pi == G.identity();
    c.expect(identity ? r.value == make_rational(-16184, 577) : r.value == 0, "S(" + G.format(r.pi) + ")");
  }
  c.expect(rep.verdict == "pass", "verdict " + rep.verdict);
  c.expect(dt < 1.0, "runtime " + std::to_string(dt) + " s");
}

void c2(Check& c) {
  auto t0 = Clock::now();
  Dataset d = load_dataset(dataset_path("21a1"));
  VerificationReport rep = verify(d);
  QVector ex = recognize_Q(d.group, assemble_Q(d, Route::qhat), d.options.den_bound, Real(0));
  double dt = seconds_since(t0);
  const auto& G = d.group;
  CharacterMap Q = ex.exact();
  c.expect(Q.at(trivial_character()) == CyclotomicNumber(make_rational(8, 19)), "Q_1");
  c.expect(Q.at(epsilon_character()) == CyclotomicNumber(make_rational(24, 19)), "Q_eps");
  c.expect(ex.orbits.size() == 1, "one induced orbit");
  if (!ex.orbits.empty()) {
    c.expect(ex.orbits[0].sum == CyclotomicNumber(-96), "orbit sum");
    c.expect(ex.orbits[0].min_poly.to_string() == "x^2 - 48*x + 256", "minimal polynomial " + ex.orbits[0].min_poly.to_string());
  }
  // Both labelings: as given and with the two induced characters swapped.
  CharacterMap swapped = Q;
  Character a = parse_character(G, "psi[1]"), b = parse_character(G, "psi[2]");
  std::swap(swapped[a], swapped[b]);
  for (const CharacterMap* m : {&Q, &swapped}) {
    CongruenceReport cr = check_congruences(G, *m, 1);
    for (const auto& r : cr.residues) c.expect(!r.valuation || *r.valuation >= 1, "v_5 S(" + G.format(r.pi) + ")");
    c.expect(cr.labelings_agree, "labelings");
  }
  c.expect(rep.verdict == "pass", "verdict " + rep.verdict);
  c.expect(dt < 1.0, "runtime " + std::to_string(dt) + " s");
}

void c3(Check& c) {
  DihedralGroup G(3, {3});
  const Character one = trivial_character(), eps = epsilon_character(), psi = parse_character(G, "psi[1]");
  struct Shape {
    const char* inertia;
    const char* frob;
  };
  for (long q : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L, 41L, 577L}) {
    for (long a = -48; a <= 48; ++a) {
      if (a * a > 4 * q) continue;
      const Rational Nq = make_rational(q + 1 - a, q);
      // (u, t) for 1, eps, psi in the shapes (e, f) = (2, 1), (3, 1), (3, 2).
      const std::vector<std::pair<Shape, std::vector<std::pair<long, Rational>>>> table{
          {{"t", "1"}, {{-1, Nq}, {1, 1}, {-1, Nq}}},
          {{"s1", "1"}, {{-1, Nq}, {-1, Nq}, {1, 1}}},
          {{"s1", "t"}, {{-1, Nq}, {1, make_rational(q + 1 + a, q)}, {1, 1}}},
      };
      for (const auto& [shape, cells] : table) {
        PlaceData pl;
        pl.label = std::to_string(q);
        pl.q = q;
        pl.a = a;
        pl.inertia = {G.parse_element(shape.inertia)};
        pl.frobenius = G.parse_element(shape.frob);
        const Character chars[] = {one, eps, psi};
        for (int i = 0; i < 3; ++i) {
          CorrectionPair cp = local_correction(G, chars[i], pl);
          std::ostringstream where;
          where << "(" << shape.inertia << ", " << shape.frob << ") " << chars[i].key() << " a=" << a << " q=" << q;
          c.expect(cp.u == CyclotomicNumber(cells[i].first), "u " + where.str());
          c.expect(cp.t == CyclotomicNumber(cells[i].second), "t " + where.str());
        }
      }
      const Integer Nw = quadratic_point_count(q + 1 - a, q);
      const Rational ratio = Rational(Nw) / Rational(q * q) * Rational(q) / Rational(q + 1 - a);
      c.expect(ratio == make_rational(q + 1 + a, q), "(N_w/q_w)(q_v/N_v) at q=" + std::to_string(q));
    }
  }
}

void c4(Check& c) {
  auto t0 = Clock::now();
  for (long m = 3; m <= 25; m += 2) c.expect(kolyvagin_identity(m), "m = " + std::to_string(m));
  double dt = seconds_since(t0);
  c.expect(dt < 1.0, "runtime " + std::to_string(dt) + " s");
}

void c5(Check& c) {
  DihedralGroup G(3, {3});
  std::mt19937_64 rng(555);
  std::uniform_int_distribution<long> num(-27, 27);
  std::uniform_int_distribution<int> den_pick(0, 4);
  const long dens[] = {1, 1, 2, 3, 9};
  long units = 0;
  for (int i = 0; i < 5000; ++i) {
    std::vector<oracle::Q> co(3);
    for (auto& x : co) x = oracle::frac(num(rng), dens[den_pick(rng)]);
    // E_chi = sum_pi c_pi chi(pi) written in the basis 1, zeta_3 with zeta^2 = -1 - zeta.
    const std::vector<std::pair<oracle::Q, oracle::Q>> E{
        {co[0] + co[1] + co[2], 0}, {co[0] - co[2], co[1] - co[2]}, {co[0] - co[1], co[2] - co[1]}};
    bool all_units = true;
    for (const auto& [x, y] : E) {
      oracle::Q norm = x * x - x * y + y * y;
      all_units = all_units && norm != 0 && oracle::valuation(norm, 3) == 0;
    }
    bool integral = true;
    for (const auto& x : co) integral = integral && (x == 0 || oracle::valuation(x, 3) >= 0);
    PCharacterMap input;
    for (unsigned long b = 0; b < 3; ++b) input[PCharacter{b}] = CyclotomicNumber(3, {E[b].first, E[b].second});
    std::ostringstream where;
    where << "c = (" << co[0] << ", " << co[1] << ", " << co[2] << ")";
    try {
      bool got = zp_P_membership(G, input);
      c.expect(all_units && got == integral, "membership " + where.str());
      ++units;
    } catch (const Error& e) {
      c.expect(!all_units && e.code() == Errc::precondition_violation, std::string("unexpected ") + e.what() + " " + where.str());
    }
  }
  c.expect(units >= 1000, "only " + std::to_string(units) + " unit inputs");

  for (auto [p, f] : std::vector<std::pair<unsigned long, std::vector<unsigned long>>>{{3, {3}}, {5, {5}}, {7, {7}}, {3, {9}}}) {
    DihedralGroup H(p, f);
    auto chars = irreducible_characters(H);
    CharacterMap ones;
    for (const auto& psi : chars) ones[psi] = 1;
    c.expect(static_cast<bool>(center_integrality(H, ones)), "all-ones");
    for (const auto& h : H.elements()) {
      long centraliser = 0;
      for (const auto& g : H.elements())
        if (H.multiply(H.multiply(g, h), H.inverse(g)) == h) ++centraliser;
      const long cls = static_cast<long>(H.order()) / centraliser;
      CharacterMap row;
      for (const auto& psi : chars)
        row[psi] = cls * character_value(H, psi, h) / CyclotomicNumber(static_cast<long>(psi.dimension()));
      c.expect(static_cast<bool>(center_integrality(H, row)), "character row at " + H.format(h));
    }
    for (const auto& psi : chars) {
      CharacterMap planted = ones;
      planted[psi] = make_rational(1, static_cast<long>(p));
      c.expect(!center_integrality(H, planted), "planted 1/p at " + psi.key());
    }
  }
}

void c6(Check& c) {
  std::mt19937_64 rng(6);
  for (int i = 0; i < 500; ++i) {
    synth::S3Case s = synth::make_s3_case(rng);
    try {
      BSDSquaresReport r = run_bsd_squares(s.d, s.d.options.den_bound, Real(0));
      c.expect(r.s3 && r.congruence, "case " + std::to_string(i) + " congruence false");
    } catch (const Error& e) {
      c.expect(false, "case " + std::to_string(i) + ": " + e.what());
    }
  }
  for (int i = 0; i < 50; ++i) {
    synth::S3Case s = synth::make_s3_case(rng, true);
    try {
      BSDSquaresReport r = run_bsd_squares(s.d, s.d.options.den_bound, Real(0));
      c.expect(r.s3 && !r.congruence, "planted case " + std::to_string(i) + " congruence true");
    } catch (const Error& e) {
      c.expect(false, "planted case " + std::to_string(i) + ": " + e.what());
    }
  }
}

void c7(Check& c) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(1, 10000), sgn(0, 1);
  for (unsigned long p : {3UL, 5UL, 7UL, 11UL, 13UL}) {
    DihedralGroup G(p, {p});
    auto unit = [&] {
      long a, b;
      do a = num(rng); while (a % static_cast<long>(p) == 0);
      do b = num(rng); while (b % static_cast<long>(p) == 0);
      return make_rational(sgn(rng) ? a : -a, b);
    };
    for (int i = 0; i < 100; ++i) {
      const Rational C = unit();
      CharacterMap Q = synth::gz_vector(G, C, 0, 577);
      bool cond = true;
      for (const auto& row : check_condition_i(G, Q)) cond = cond && row.passed();
      c.expect(cond && check_congruences(G, Q, 1).passed, "p = " + std::to_string(p) + ", C = " + to_string(C));
      for (const Rational& bad : std::vector<Rational>{C * Rational(p), C / Rational(p)}) {
        CharacterMap B = synth::gz_vector(G, bad, 0, 577);
        bool cond_bad = true;
        for (const auto& row : check_condition_i(G, B)) cond_bad = cond_bad && row.passed();
        c.expect(!cond_bad, "p = " + std::to_string(p) + ", C = " + to_string(bad) + " passed condition (i)");
      }
    }
  }
}

void c8(Check& c) {
  Dataset b = load_dataset(dataset_path("21a1"));
  BSDSquaresReport r = run_bsd_squares(b, b.options.den_bound, Real(0));
  std::map<std::string, Rational> sha;
  for (const auto& s : r.sha) sha[s.field] = s.sha;
  c.expect(sha.count("L") && sha.at("L") == 4, "21a1 L");
  c.expect(sha.count("F") && sha.at("F") == 32, "21a1 F");
  Dataset a = load_dataset(dataset_path("37a1"));
  BSDSquaresReport r37 = run_bsd_squares(a, a.options.den_bound, Real(0));
  sha.clear();
  for (const auto& s : r37.sha) sha[s.field] = s.sha;
  c.expect(sha.count("k") && sha.at("k") == 1, "37a1 k");
  c.expect(sha.count("K") && sha.at("K") == 1, "37a1 K");
}

std::string fifteen_digits(const Rational& r) {
  std::ostringstream os;
  os << std::setprecision(15) << std::scientific << to_real(r);
  return os.str();
}

void c9(Check& c) {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<long> num(-100000, 100000), den(1, 10000);
  for (int i = 0; i < 10000; ++i) {
    const Rational r = make_rational(num(rng), den(rng));
    const std::string s = fifteen_digits(r);
    // Half a unit in the 15th significant digit, from the printed exponent.
    const long e = std::stol(s.substr(s.find('e') + 1));
    const Real err = Real(5) * boost::multiprecision::pow(Real(10), e - 15);
    try {
      c.expect(rational_reconstruct(DecimalWithError(Real(s), err), Integer(10000)) == r, "round trip " + to_string(r));
    } catch (const Error& ex) {
      c.expect(false, "round trip " + to_string(r) + ": " + ex.what());
    }
  }
  std::uniform_int_distribution<long> small(-60, 60), sden(1, 12);
  for (unsigned long d : {5UL, 13UL}) {
    const CyclotomicNumber root = quadratic_gauss_sum(d);
    for (int i = 0; i < 1000; ++i) {
      const Rational a = make_rational(small(rng), sden(rng)), b = make_rational(small(rng), sden(rng));
      const CyclotomicNumber x = CyclotomicNumber(a) + CyclotomicNumber(b) * root;
      const CyclotomicNumber y = CyclotomicNumber(a) - CyclotomicNumber(b) * root;
      const Real sq = boost::multiprecision::sqrt(Real(d));
      std::vector<DecimalWithError> xs{
          DecimalWithError(Real(format_real(to_real(a) + to_real(b) * sq, 30)), Real("1e-25")),
          DecimalWithError(Real(format_real(to_real(a) - to_real(b) * sq, 30)), Real("1e-25"))};
      std::ostringstream where;
      where << "Q(sqrt " << d << "): " << a << " + " << b << " sqrt";
      try {
        AlgebraicOrbit o = recognize_orbit(xs, d, Real(0));
        c.expect(o.values.size() == 2 && o.values[0] == x && o.values[1] == y, where.str());
      } catch (const Error& ex) {
        c.expect(false, where.str() + ": " + ex.what());
      }
    }
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
      {"37a1 end to end", c1},
      {"21a1 end to end", c2},
      {"local correction table", c3},
      {"Kolyvagin identity, odd m in 3..25", c4},
      {"Z_p[P] membership and centre integrality oracles", c5},
      {"mod-squares congruence on synthetic S3 towers", c6},
      {"Heegner route congruences", c7},
      {"Sha predictions", c8},
      {"recognition round trips", c9},
  };
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    auto t0 = Clock::now();
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const double dt = seconds_since(t0);
    std::cout << (c.failures ? "FAIL" : "PASS") << "  " << (i + 1) << "  " << criteria[i].first << "  ("
              << std::fixed << std::setprecision(3) << dt << " s)\n";
    for (const auto& m : c.messages) std::cout << "        " << m << "\n";
    if (c.failures > static_cast<long>(c.messages.size()))
      std::cout << "        ... " << c.failures - static_cast<long>(c.messages.size()) << " more\n";
    if (c.failures) ++failed;
  }
  return failed ? 1 : 0;
}
