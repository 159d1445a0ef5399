#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "etnc/dataset.hpp"
#include "etnc/decimal.hpp"
#include "etnc/group_ring.hpp"

namespace etnc {

// Qtilde_eta = L*(A, eta, 1) sqrt(d_eta) / (Omega(A, eta) Htilde_eta).
struct QTildeEntry {
  Character eta;
  std::optional<DecimalWithError> numeric;
  Rational exact;
  std::string source;  // "direct" or "bsd-lhs"
};

// Direct evaluation needs leading terms, periods and regulators for k, K and L. Otherwise the values
// are read off the per-field BSD left-hand sides of the qhat vector. Throws incomplete-input when neither works.
std::map<Character, QTildeEntry> assemble_Qtilde(const Dataset& d, const CharacterMap& qhat, const Integer& den_bound,
                                                 const Real& tol);

struct TamagawaCheck {
  std::string place;
  unsigned decomposition_order = 1;
  Rational lhs;  // c(A/k_v) prod c(A/K_w)
  Rational rhs;  // prod c(A/L_w)
  bool holds = false;
  // Order-3 places: equal values or the I0* change 1 -> 4.
  bool rule_conforming = true;
  std::string note;
};
// Throws data-error when the place counts do not match the decomposition order.
TamagawaCheck tamagawa_congruence(const BSDPlace& place);

// 1 + sum_K e_w = sum_L e_w on the supplied differential exponents.
bool neron_quotient_check(const BSDPlace& place);

struct ShaPrediction {
  std::string field;
  Rational lhs;
  Rational tamagawa_product;
  Rational differential_factor;
  Integer torsion;
  Rational sha;
  bool integral = false;
  bool square = false;
};
// |Sha| = LHS |tors|^2 / (prod c * prod |omega_A/omega_w|_w). Throws incomplete-input for missing local terms.
ShaPrediction sha_prediction(const Dataset& d, const std::string& field, const CharacterMap& qhat);

struct BSDSquaresReport {
  std::vector<ShaPrediction> sha;
  bool s3 = false;
  std::map<Character, QTildeEntry> qtilde;
  Rational product;  // Qtilde_1 Qtilde_eps
  std::map<Character, bool> equivalent;
  std::vector<TamagawaCheck> tamagawa;
  std::map<std::string, bool> neron;
  bool local_conditions = false;  // every Tamagawa and Neron check holds
  bool congruence = false;        // Qtilde_1 Qtilde_eps = Qtilde_psi mod squares for every psi
};

// Recognises Qhat on the qhat route, then predicts Sha per field; S3 towers also get the mod-squares analysis.
BSDSquaresReport run_bsd_squares(const Dataset& d, const Integer& den_bound, const Real& tol);

}  // namespace etnc
