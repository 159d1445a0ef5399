#include "etnc/congruence.hpp"

#include <algorithm>

#include "etnc/error.hpp"
#include "etnc/heights.hpp"
#include "etnc/hypotheses.hpp"
#include "etnc/local_factors.hpp"
#include "etnc/recognition.hpp"

namespace etnc {

std::string to_string(Route r) {
  switch (r) {
    case Route::direct: return "direct";
    case Route::qhat: return "qhat";
    case Route::gz: return "gz";
  }
  return "qhat";
}

std::optional<Route> parse_route(std::string_view s) {
  if (s == "auto") return std::nullopt;
  if (s == "direct") return Route::direct;
  if (s == "qhat") return Route::qhat;
  if (s == "gz") return Route::gz;
  fail(Errc::invalid_input, "unknown route '" + std::string(s) + "'");
}

CharacterMap QVector::exact() const {
  CharacterMap out;
  for (const auto& [psi, e] : entries) {
    if (!e.exact) fail(Errc::precondition_violation, "Q for " + psi.key() + " is not recognised");
    out[psi] = *e.exact;
  }
  return out;
}

Rational gz_constant(const CurveData& curve) {
  Integer den = curve.manin_constant * curve.manin_constant * curve.k_unit_count * curve.k_unit_count;
  return make_rational(Integer(4 * curve.c_infinity), den);
}

unsigned default_modulus_exponent(const DihedralGroup& G) {
  return static_cast<unsigned>(valuation(Integer(G.order_P()), G.p()));
}

namespace {

bool galois_complete(const Dataset& d) {
  for (const auto& label : d.tower.S_r) {
    const PlaceData* pl = d.find_place(label);
    if (!pl || !pl->has_galois_data()) return false;
  }
  return true;
}

DecimalWithError sqrt_of(const Integer& n) { return sqrt(DecimalWithError::exact(Rational(n))); }

QVector assemble_qhat(const Dataset& d) {
  QVector out;
  out.route = Route::qhat;
  for (const auto& psi : irreducible_characters(d.group)) {
    const auto& ca = d.analytic.characters.at(psi);
    if (!ca.qhat) fail(Errc::route_unavailable, "no qhat value for " + psi.key());
    QEntry e;
    e.psi = psi;
    e.qhat_numeric = ca.qhat->parse();
    e.correction = global_correction(d, psi).product();
    e.numeric = real_embedding(*e.correction, 1) * *e.qhat_numeric;
    out.entries[psi] = e;
  }
  return out;
}

QVector assemble_direct(const Dataset& d) {
  const DihedralGroup& G = d.group;
  const auto& an = d.analytic;
  if (!an.omega_plus) fail(Errc::route_unavailable, "no real period");
  const DecimalWithError omega_plus = an.omega_plus->parse();
  const DecimalWithError omega_minus = an.omega_minus ? an.omega_minus->parse() : DecimalWithError();
  const Character rho = rho_A(an.rank_k);
  std::optional<GramMatrix> gram;
  if (d.heights) gram.emplace(G, *d.heights);
  QVector out;
  out.route = Route::direct;
  for (const auto& psi : irreducible_characters(G)) {
    const auto& ca = an.characters.at(psi);
    if (!ca.leading_term) fail(Errc::route_unavailable, "no leading term for " + psi.key());
    bool needs_minus = psi.kind == CharacterKind::induced ? !d.tower.real_place_splits_in_K
                                                          : psi.kind == CharacterKind::epsilon && !d.tower.real_place_splits_in_K;
    if (needs_minus && !an.omega_minus) fail(Errc::route_unavailable, "no imaginary period");
    DecimalWithError L = ca.leading_term->parse();
    if (!ca.truncated) {
      if (ca.pinned && ca.pinned->ut && !galois_complete(d))
        fail(Errc::route_unavailable, "truncation factor for " + psi.key() + " is only known through u t");
      L = real_embedding(global_correction(d, psi).t, 1) * L;
    }
    DecimalWithError H = DecimalWithError::exact(1);
    if (!(psi == rho)) {
      if (!gram) fail(Errc::route_unavailable, "no height data");
      H = H_value(G, psi, rho, *gram);
    }
    GaussRatio g = gauss_ratio(d, psi);
    DecimalWithError omega = omega_value(psi, omega_plus, omega_minus, d.tower.real_place_splits_in_K);
    QEntry e;
    e.psi = psi;
    e.numeric = real_embedding(g.unit, 1) * sqrt_of(g.radicand) * L / (omega * H);
    out.entries[psi] = e;
  }
  return out;
}

QVector assemble_gz(const Dataset& d) {
  if (!d.curve.heegner) fail(Errc::route_unavailable, "the dataset does not flag a Heegner point");
  if (!d.tower.F_over_K_unramified) fail(Errc::route_unavailable, "F/K is ramified");
  CharacterMap corrections;
  for (const auto& psi : irreducible_characters(d.group)) corrections[psi] = global_correction(d, psi).product();
  CharacterMap Q = gz_expected_Q(d.group, gz_constant(d.curve), corrections);
  QVector out;
  out.route = Route::gz;
  for (const auto& [psi, x] : Q) {
    QEntry e;
    e.psi = psi;
    e.correction = corrections.at(psi);
    e.numeric = real_embedding(x, 1);
    e.exact = x;
    out.entries[psi] = e;
  }
  return out;
}

// prod (x - v) over an orbit; the coefficients are rational.
RationalPolynomial orbit_polynomial(const std::vector<CyclotomicNumber>& vals) {
  std::vector<CyclotomicNumber> c{CyclotomicNumber(1)};
  for (const auto& v : vals) {
    std::vector<CyclotomicNumber> next(c.size() + 1);
    for (size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= v * c[i];
    }
    c = std::move(next);
  }
  std::vector<Rational> coeffs;
  for (const auto& x : c) {
    if (!x.is_rational()) fail(Errc::galois_inconsistency, "orbit values are not Galois-stable");
    coeffs.push_back(x.to_rational());
  }
  return RationalPolynomial(coeffs);
}

}  // namespace

QVector assemble_Q(const Dataset& d, Route route) {
  switch (route) {
    case Route::direct: return assemble_direct(d);
    case Route::qhat: return assemble_qhat(d);
    case Route::gz: return assemble_gz(d);
  }
  return assemble_qhat(d);
}

QVector recognize_Q(const DihedralGroup& G, const QVector& numeric, const Integer& den_bound, const Real& tol) {
  QVector out = numeric;
  const bool via_qhat = numeric.route == Route::qhat;
  auto source = [&](const QEntry& e) { return (via_qhat ? *e.qhat_numeric : e.numeric).widened(tol); };
  auto finish = [&](QEntry& e, const CyclotomicNumber& x) {
    if (via_qhat) {
      e.qhat_exact = x;
      e.exact = *e.correction * x;
    } else {
      e.exact = x;
    }
  };
  for (const auto& psi : {trivial_character(), epsilon_character()}) {
    QEntry& e = out.entries.at(psi);
    if (numeric.route == Route::gz) continue;
    finish(e, CyclotomicNumber(rational_reconstruct(source(e), den_bound)));
  }
  for (const auto& orbit : induced_orbits(G)) {
    OrbitRecord rec;
    rec.members = orbit;
    if (numeric.route == Route::gz) {
      std::vector<CyclotomicNumber> vals;
      for (const auto& psi : orbit) vals.push_back(*out.entries.at(psi).exact);
      rec.min_poly = squarefree_part(orbit_polynomial(vals));
    } else {
      std::vector<DecimalWithError> xs;
      for (const auto& psi : orbit) xs.push_back(source(out.entries.at(psi)));
      AlgebraicOrbit found = recognize_orbit(xs, G.exponent(), tol, den_bound);
      for (size_t i = 0; i < orbit.size(); ++i) finish(out.entries.at(orbit[i]), found.values[i]);
      rec.min_poly = found.min_poly;
    }
    for (const auto& psi : orbit) rec.sum += *out.entries.at(psi).exact;
    out.orbits.push_back(rec);
  }
  return out;
}

std::vector<ConditionIRow> check_condition_i(const DihedralGroup& G, const CharacterMap& Q) {
  const unsigned long p = G.p(), m = G.exponent();
  std::vector<ConditionIRow> rows;
  for (const auto& psi : irreducible_characters(G)) {
    auto it = Q.find(psi);
    if (it == Q.end()) fail(Errc::incomplete_input, "no Q value for " + psi.key());
    const CyclotomicNumber& x = it->second;
    ConditionIRow row;
    row.psi = psi;
    if (x.is_zero()) {
      row.in_field = row.equivariant = true;
      row.p_unit = false;
      rows.push_back(row);
      continue;
    }
    row.valuation = p_valuation(x, p);
    row.p_unit = row.valuation == 0;
    if (psi.kind != CharacterKind::induced) {
      row.in_field = x.is_rational();
      row.equivariant = true;
    } else {
      const unsigned long order = character_order(G, psi.chi);
      row.in_field = order % x.conductor() == 0;
      row.equivariant = true;
      for (unsigned long a = 1; a < m; ++a) {
        if (a % p == 0) continue;
        CyclotomicNumber image = galois_apply(x, static_cast<long>(a), m);
        Character target = galois_conjugate(G, psi, static_cast<long>(a));
        if (target == psi && !(image == x)) row.in_field = false;
        auto jt = Q.find(target);
        if (jt == Q.end() || !(image == jt->second)) row.equivariant = false;
      }
    }
    rows.push_back(row);
  }
  return rows;
}

namespace {

struct ResidueSet {
  std::vector<Residue> residues;
  bool passed = true;
};

ResidueSet residues_for(const DihedralGroup& G, const CharacterMap& Q, unsigned n) {
  const unsigned long p = G.p();
  const CyclotomicNumber base = Q.at(trivial_character()) * Q.at(epsilon_character());
  // Each Ind chi arises from chi and conj(chi); both terms are summed.
  std::vector<std::pair<PCharacter, CyclotomicNumber>> terms;
  for (const auto& chi : p_characters(G)) {
    if (is_trivial(chi)) continue;
    terms.emplace_back(chi, Q.at(induced(G, chi)));
  }
  ResidueSet out;
  for (const auto& pi : G.p_elements()) {
    const GroupElement pinv = G.inverse(pi);
    CyclotomicNumber S = base;
    for (const auto& [chi, q] : terms) S += chi_value(G, chi, pinv) * q;
    if (!S.is_rational())
      fail(Errc::galois_inconsistency, "S(" + G.format(pi) + ") = " + S.to_string() + " is not rational");
    Residue r;
    r.pi = pi;
    r.value = S.to_rational();
    if (r.value != 0) r.valuation = valuation(r.value, p);
    r.ok = !r.valuation || *r.valuation >= static_cast<long>(n);
    out.passed = out.passed && r.ok;
    out.residues.push_back(r);
  }
  return out;
}

}  // namespace

CongruenceReport check_congruences(const DihedralGroup& G, const CharacterMap& Q, unsigned n) {
  const unsigned long p = G.p(), m = G.exponent();
  CongruenceReport rep;
  rep.n = n;
  ResidueSet main = residues_for(G, Q, n);
  rep.residues = main.residues;
  rep.passed = main.passed;

  const Rational base = (Q.at(trivial_character()) * Q.at(epsilon_character())).to_rational();
  Rational total = 0;
  for (const auto& r : rep.residues) total += r.value;
  if (total != base * Rational(Integer(G.order_P())))
    fail(Errc::inconsistency, "sum of residues differs from |P| Q_1 Q_eps");

  CyclotomicNumber induced_sum;
  for (const auto& psi : irreducible_characters(G))
    if (psi.kind == CharacterKind::induced) induced_sum += Q.at(psi);
  if (!induced_sum.is_rational())
    fail(Errc::galois_inconsistency, "sum of the induced values is not rational");
  rep.shortcut = base + 2 * induced_sum.to_rational();
  if (rep.shortcut != 0) rep.shortcut_valuation = valuation(rep.shortcut, p);
  if (n == 1) {
    bool shortcut_ok = !rep.shortcut_valuation || *rep.shortcut_valuation >= 1;
    rep.shortcut_agrees = shortcut_ok == rep.passed;
  }

  std::vector<Rational> sorted;
  for (const auto& r : rep.residues) sorted.push_back(r.value);
  std::sort(sorted.begin(), sorted.end());
  for (unsigned long a = 2; a < m; ++a) {
    if (a % p == 0) continue;
    CharacterMap relabelled = Q;
    for (auto& [psi, x] : relabelled)
      if (psi.kind == CharacterKind::induced) x = galois_apply(x, static_cast<long>(a), m);
    ResidueSet other = residues_for(G, relabelled, n);
    std::vector<Rational> values;
    for (const auto& r : other.residues) values.push_back(r.value);
    std::sort(values.begin(), values.end());
    if (other.passed != rep.passed || values != sorted) rep.labelings_agree = false;
  }
  return rep;
}

CharacterMap gz_expected_Q(const DihedralGroup& G, const Rational& C, const CharacterMap& corrections) {
  CharacterMap out;
  for (const auto& psi : irreducible_characters(G)) {
    auto it = corrections.find(psi);
    if (it == corrections.end()) fail(Errc::incomplete_input, "no correction for " + psi.key());
    out[psi] = psi.kind == CharacterKind::epsilon ? it->second : it->second * CyclotomicNumber(C);
  }
  return out;
}

}  // namespace etnc
