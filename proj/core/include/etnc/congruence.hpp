#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "etnc/cyclotomic.hpp"
#include "etnc/dataset.hpp"
#include "etnc/decimal.hpp"
#include "etnc/dihedral.hpp"
#include "etnc/group_ring.hpp"
#include "etnc/polynomial.hpp"

namespace etnc {

enum class Route { direct, qhat, gz };
std::string to_string(Route r);
// nullopt for "auto"; throws invalid-input for anything else.
std::optional<Route> parse_route(std::string_view s);

struct QEntry {
  Character psi;
  DecimalWithError numeric;
  // qhat route: Qhat before scaling and the exact factor u t.
  std::optional<DecimalWithError> qhat_numeric;
  std::optional<CyclotomicNumber> correction;
  std::optional<CyclotomicNumber> qhat_exact;
  std::optional<CyclotomicNumber> exact;
};

struct OrbitRecord {
  std::vector<Character> members;
  // Minimal polynomial of the recognised quantity (Qhat on the qhat route, Q otherwise).
  RationalPolynomial min_poly;
  CyclotomicNumber sum;  // sum of Q over the orbit
};

struct QVector {
  Route route = Route::qhat;
  std::map<Character, QEntry> entries;
  std::vector<OrbitRecord> orbits;
  CharacterMap exact() const;
};

// 4 c_inf / (c^2 |O_K^x|^2).
Rational gz_constant(const CurveData& curve);

// Numeric stage. Throws route-unavailable when the dataset lacks the inputs of the route,
// division-by-zero for a vanishing H_psi.
QVector assemble_Q(const Dataset& d, Route route);
// Exact stage. Throws recognition-failure or ambiguous-recognition.
QVector recognize_Q(const DihedralGroup& G, const QVector& numeric, const Integer& den_bound, const Real& tol);

struct ConditionIRow {
  Character psi;
  bool in_field = false;
  bool equivariant = false;
  bool p_unit = false;
  Rational valuation;
  bool passed() const { return in_field && equivariant && p_unit; }
};
std::vector<ConditionIRow> check_condition_i(const DihedralGroup& G, const CharacterMap& Q);

struct Residue {
  GroupElement pi;
  Rational value;
  std::optional<long> valuation;  // nullopt for S = 0
  bool ok = false;
};

struct CongruenceReport {
  unsigned n = 1;
  std::vector<Residue> residues;
  // Q_1 Q_eps + 2 sum_{dim psi = 2} Q_psi, the single congruence for n = 1.
  Rational shortcut;
  std::optional<long> shortcut_valuation;
  bool shortcut_agrees = true;
  // Verdict unchanged when the induced values are relabelled by every sigma_a.
  bool labelings_agree = true;
  bool passed = false;
};
// Throws galois-inconsistency when some S(pi) is irrational.
CongruenceReport check_congruences(const DihedralGroup& G, const CharacterMap& Q, unsigned n);

// Q_1 = u_1 t_1 C, Q_eps = u_eps t_eps and Q_psi = u_psi t_psi C, so Q_1 Q_eps = u_1 t_1 u_eps t_eps C.
CharacterMap gz_expected_Q(const DihedralGroup& G, const Rational& C, const CharacterMap& corrections);

// v_p |P|, the exponent n in p^n Z_(p).
unsigned default_modulus_exponent(const DihedralGroup& G);

}  // namespace etnc
