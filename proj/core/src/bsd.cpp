#include "etnc/bsd.hpp"

#include <numeric>

#include "etnc/congruence.hpp"
#include "etnc/error.hpp"
#include "etnc/heights.hpp"
#include "etnc/local_factors.hpp"
#include "etnc/recognition.hpp"

namespace etnc {

namespace {

Rational product_of(const std::vector<Integer>& xs) {
  Rational r = 1;
  for (const auto& x : xs) r *= Rational(x);
  return r;
}

const BSDData& bsd_of(const Dataset& d) {
  if (!d.bsd) fail(Errc::incomplete_input, "dataset has no bsd section");
  return *d.bsd;
}

Rational field_lhs(const Dataset& d, const std::string& field, const CharacterMap& qhat) {
  const BSDData& b = bsd_of(d);
  auto it = b.fields.find(field);
  if (it == b.fields.end()) fail(Errc::incomplete_input, "no bsd field " + field);
  CyclotomicNumber acc(it->second.lhs_scale);
  for (const auto& [psi, mult] : it->second.multiplicities) {
    auto q = qhat.find(psi);
    if (q == qhat.end()) fail(Errc::incomplete_input, "no Qhat for " + psi.key());
    for (int i = 0; i < mult; ++i) acc *= q->second;
  }
  if (!acc.is_rational()) fail(Errc::galois_inconsistency, "BSD left-hand side over " + field + " is not rational");
  return acc.to_rational();
}

// Product of c(A/k_v) over real places of k that become complex in K.
Rational complexification_factor(const BSDData& b) {
  Rational s = 1;
  for (const auto& pl : b.places) {
    if (!pl.infinite || pl.decomposition_order != 2) continue;
    auto it = pl.tamagawa.find("k");
    if (it == pl.tamagawa.end() || it->second.size() != 1)
      fail(Errc::incomplete_input, "no Tamagawa number over k at " + pl.label);
    s *= Rational(it->second.front());
  }
  return s;
}

bool has_direct_inputs(const Dataset& d) {
  if (!d.analytic.omega_plus || !d.bsd) return false;
  for (const char* f : {"k", "K", "L"})
    if (!d.bsd->regulators.count(f)) return false;
  for (const auto& [psi, ca] : d.analytic.characters)
    if (!ca.leading_term) return false;
  return true;
}

DecimalWithError regulator_of(const BSDData& b, const std::string& field) {
  std::vector<std::vector<DecimalWithError>> m;
  for (const auto& row : b.regulators.at(field)) {
    std::vector<DecimalWithError> r;
    for (const auto& e : row) r.push_back(e.parse());
    m.push_back(r);
  }
  RegulatorResult reg = regulator(m);
  if (reg.rank_deficient) fail(Errc::division_by_zero, "regulator over " + field + " is not distinguishable from zero");
  return reg.value;
}

}  // namespace

std::map<Character, QTildeEntry> assemble_Qtilde(const Dataset& d, const CharacterMap& qhat, const Integer& den_bound,
                                                 const Real& tol) {
  std::map<Character, QTildeEntry> out;
  if (has_direct_inputs(d)) {
    const BSDData& b = *d.bsd;
    DecimalWithError reg_k = regulator_of(b, "k"), reg_K = regulator_of(b, "K"), reg_L = regulator_of(b, "L");
    const auto& an = d.analytic;
    DecimalWithError op = an.omega_plus->parse();
    DecimalWithError om = an.omega_minus ? an.omega_minus->parse() : DecimalWithError();
    for (const auto& [psi, ca] : an.characters) {
      DecimalWithError L = ca.leading_term->parse();
      if (ca.truncated) L = L / real_embedding(global_correction(d, psi).t, 1);
      DecimalWithError x = L * sqrt(DecimalWithError::exact(Rational(d_psi(d.tower, psi)))) /
                           (omega_value(psi, op, om, d.tower.real_place_splits_in_K) *
                            H_tilde_value(psi, reg_k, reg_K, reg_L));
      out[psi] = {psi, x, rational_reconstruct(x.widened(tol), den_bound), "direct"};
    }
    return out;
  }
  const BSDData& b = bsd_of(d);
  for (const char* f : {"k", "K", "L"})
    if (!b.fields.count(f)) fail(Errc::incomplete_input, std::string("no BSD data over ") + f);
  const Rational s = complexification_factor(b);
  const Rational lk = field_lhs(d, "k", qhat);
  out[trivial_character()] = {trivial_character(), std::nullopt, lk, "bsd-lhs"};
  out[epsilon_character()] = {epsilon_character(), std::nullopt, field_lhs(d, "K", qhat) * s / lk, "bsd-lhs"};
  const Rational psi_value = field_lhs(d, "L", qhat) * s / lk;
  for (const auto& psi : irreducible_characters(d.group))
    if (psi.kind == CharacterKind::induced) out[psi] = {psi, std::nullopt, psi_value, "bsd-lhs"};
  return out;
}

TamagawaCheck tamagawa_congruence(const BSDPlace& place) {
  TamagawaCheck c;
  c.place = place.label;
  c.decomposition_order = place.decomposition_order;
  auto list = [&](const char* f) -> const std::vector<Integer>& {
    auto it = place.tamagawa.find(f);
    if (it == place.tamagawa.end()) fail(Errc::incomplete_input, std::string("no Tamagawa numbers over ") + f + " at " + place.label);
    return it->second;
  };
  const auto &k = list("k"), &K = list("K"), &L = list("L");
  size_t want_K = 0, want_L = 0;
  switch (place.decomposition_order) {
    case 1: want_K = 2, want_L = 3; break;
    case 2: want_K = 1, want_L = 2; break;
    case 3:
      if (place.infinite) fail(Errc::data_error, "infinite place " + place.label + " with decomposition order 3");
      want_K = 2, want_L = 1;
      break;
    default:
      fail(Errc::out_of_scope, "decomposition order " + std::to_string(place.decomposition_order) + " at " + place.label);
  }
  if (k.size() != 1 || K.size() != want_K || L.size() != want_L)
    fail(Errc::data_error, "Tamagawa list lengths at " + place.label + " do not match decomposition order " +
                               std::to_string(place.decomposition_order));
  c.lhs = product_of(k) * product_of(K);
  c.rhs = product_of(L);
  c.holds = mod_square_equivalent(c.lhs, c.rhs);
  if (place.decomposition_order == 3) {
    const Integer &ck = k.front(), &cL = L.front();
    c.rule_conforming = ck == cL || (place.kodaira == "I0*" && ck == 1 && cL == 4);
    if (c.holds && !c.rule_conforming)
      c.note = "Tamagawa number changes from " + ck.get_str() + " to " + cL.get_str() + " outside the I0* rule";
    else if (ck != cL)
      c.note = "I0* change " + ck.get_str() + " -> " + cL.get_str();
  }
  return c;
}

bool neron_quotient_check(const BSDPlace& place) {
  if (place.differential_exponents.empty()) return true;
  auto sum = [&](const char* f, long fallback) {
    auto it = place.differential_exponents.find(f);
    if (it == place.differential_exponents.end()) return fallback;
    return std::accumulate(it->second.begin(), it->second.end(), 0L);
  };
  return sum("k", 1) + sum("K", 0) == sum("L", 0);
}

ShaPrediction sha_prediction(const Dataset& d, const std::string& field, const CharacterMap& qhat) {
  const BSDData& b = bsd_of(d);
  ShaPrediction s;
  s.field = field;
  s.lhs = field_lhs(d, field, qhat);
  s.tamagawa_product = 1;
  s.differential_factor = 1;
  for (const auto& pl : b.places) {
    auto it = pl.tamagawa.find(field);
    if (it == pl.tamagawa.end()) fail(Errc::incomplete_input, "no Tamagawa numbers over " + field + " at " + pl.label);
    s.tamagawa_product *= product_of(it->second);
    if (pl.infinite || pl.differential_valuation == 0) continue;
    auto e = pl.differential_exponents.find(field);
    if (e == pl.differential_exponents.end())
      fail(Errc::incomplete_input, "no differential exponents over " + field + " at " + pl.label);
    long total = pl.differential_valuation * std::accumulate(e->second.begin(), e->second.end(), 0L);
    s.differential_factor *= pow(Rational(pl.q), -total);
  }
  auto t = d.curve.torsion.find(field);
  if (t == d.curve.torsion.end()) fail(Errc::incomplete_input, "no torsion order over " + field);
  s.torsion = t->second;
  s.sha = s.lhs * Rational(s.torsion * s.torsion) / (s.tamagawa_product * s.differential_factor);
  s.integral = s.sha.get_den() == 1 && s.sha > 0;
  s.square = s.integral && is_perfect_square(s.sha.get_num());
  return s;
}

BSDSquaresReport run_bsd_squares(const Dataset& d, const Integer& den_bound, const Real& tol) {
  const BSDData& b = bsd_of(d);
  BSDSquaresReport rep;
  CharacterMap qhat;
  bool have_qhat = true;
  for (const auto& [psi, ca] : d.analytic.characters) have_qhat = have_qhat && ca.qhat.has_value();
  if (have_qhat) {
    QVector q = recognize_Q(d.group, assemble_Q(d, Route::qhat), den_bound, tol);
    for (const auto& [psi, e] : q.entries) qhat[psi] = *e.qhat_exact;
  }
  for (const auto& [name, f] : b.fields) {
    if (!have_qhat) fail(Errc::incomplete_input, "Sha predictions need qhat values");
    rep.sha.push_back(sha_prediction(d, name, qhat));
  }
  rep.s3 = d.group.p() == 3 && d.group.order_P() == 3;
  if (!rep.s3) return rep;
  rep.qtilde = assemble_Qtilde(d, qhat, den_bound, tol);
  rep.product = rep.qtilde.at(trivial_character()).exact * rep.qtilde.at(epsilon_character()).exact;
  rep.congruence = true;
  for (const auto& [psi, e] : rep.qtilde) {
    if (psi.kind != CharacterKind::induced) continue;
    bool eq = mod_square_equivalent(rep.product, e.exact);
    rep.equivalent[psi] = eq;
    rep.congruence = rep.congruence && eq;
  }
  rep.local_conditions = true;
  for (const auto& pl : b.places) {
    rep.tamagawa.push_back(tamagawa_congruence(pl));
    rep.neron[pl.label] = neron_quotient_check(pl);
    rep.local_conditions = rep.local_conditions && rep.tamagawa.back().holds && rep.neron[pl.label];
  }
  return rep;
}

}  // namespace etnc
