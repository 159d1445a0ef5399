#include "etnc/pipeline.hpp"

#include <algorithm>

#include "etnc/bsd.hpp"
#include "etnc/error.hpp"
#include "etnc/hypotheses.hpp"

namespace etnc {

namespace {

ReportNumber num(std::string v, const char* provenance) { return {std::move(v), provenance}; }
ReportNumber num(const Rational& r, const char* provenance) { return {to_string(r), provenance}; }
ReportNumber num(const DecimalWithError& x, const char* provenance) { return {x.to_string(20), provenance}; }

std::string valuation_text(const std::optional<long>& v) { return v ? std::to_string(*v) : "inf"; }

VerificationReport header(const Dataset& d, const char* command, unsigned n) {
  VerificationReport r;
  r.command = command;
  r.dataset = d.name;
  r.curve = d.curve.label;
  r.p = d.group.p();
  r.order_P = d.group.order_P();
  r.n = n;
  return r;
}

Real tolerance(const Dataset& d) { return d.options.tol ? DecimalWithError::parse(*d.options.tol).value() : Real(0); }

bool recognition_error(const Error& e) {
  return e.code() == Errc::recognition_failure || e.code() == Errc::ambiguous_recognition;
}

bool has_all_qhat(const Dataset& d) {
  return std::all_of(d.analytic.characters.begin(), d.analytic.characters.end(),
                     [](const auto& kv) { return kv.second.qhat.has_value(); });
}

bool has_all_leading(const Dataset& d) {
  return std::all_of(d.analytic.characters.begin(), d.analytic.characters.end(),
                     [](const auto& kv) { return kv.second.leading_term.has_value(); });
}

void fill_q(VerificationReport& r, const QVector& q) {
  for (const auto& [psi, e] : q.entries) {
    QRow row;
    row.character = psi.key();
    row.numeric = num(e.numeric, "computed");
    if (e.qhat_numeric) row.qhat_numeric = num(*e.qhat_numeric, "input");
    if (e.correction) row.correction = num(e.correction->to_string(), "computed");
    if (e.qhat_exact) row.qhat_exact = num(e.qhat_exact->to_string(), "recognized");
    if (e.exact) row.exact = num(e.exact->to_string(), q.route == Route::gz ? "computed" : "recognized");
    r.q.push_back(row);
  }
  for (const auto& o : q.orbits) {
    OrbitRow row;
    for (const auto& psi : o.members) row.members.push_back(psi.key());
    row.min_poly = num(o.min_poly.to_string(), q.route == Route::gz ? "computed" : "recognized");
    row.sum = num(o.sum.to_string(), "computed");
    r.orbits.push_back(row);
  }
}

}  // namespace

VerificationReport verify(const Dataset& d, const VerifyOptions& opts) {
  const DihedralGroup& G = d.group;
  unsigned n = opts.n_override ? *opts.n_override : d.options.n ? *d.options.n : default_modulus_exponent(G);
  if (n == 0) fail(Errc::invalid_input, "n must be positive");
  VerificationReport r = header(d, "verify", n);
  if (!G.is_cyclic())
    r.notes.push_back("P is not cyclic: the congruences are evaluated as stated, outside the proven cyclic case");

  std::map<std::string, HypothesisStatus> status;
  for (const auto& h : check_hypotheses(d)) {
    r.hypotheses.push_back({h.id, to_string(h.status), h.detail});
    status[h.id] = h.status;
  }
  if (status["h"] == HypothesisStatus::fails)
    fail(Errc::data_error, "hypothesis (h) fails: p-adic ramification is not supported");
  if (status["i"] != HypothesisStatus::holds) {
    r.notes.push_back("analytic vanishing orders do not match the expected orders");
    r.verdict = "inconclusive";
    return r;
  }

  std::optional<Route> route = opts.route ? opts.route : parse_route(d.options.route);
  std::vector<Route> routes;
  if (route) {
    routes.push_back(*route);
  } else {
    if (has_all_qhat(d)) routes.push_back(Route::qhat);
    if (has_all_leading(d)) routes.push_back(Route::direct);
    if (routes.empty()) fail(Errc::route_unavailable, "neither qhat values nor leading terms are complete");
  }
  r.route = to_string(routes.front());
  const Integer den_bound = opts.den_bound ? *opts.den_bound : d.options.den_bound;
  const Real tol = tolerance(d);

  QVector q;
  try {
    q = recognize_Q(G, assemble_Q(d, routes.front()), den_bound, tol);
    for (size_t i = 1; i < routes.size(); ++i) {
      QVector other;
      try {
        other = recognize_Q(G, assemble_Q(d, routes[i]), den_bound, tol);
      } catch (const Error& e) {
        if (e.code() != Errc::route_unavailable) throw;
        continue;
      }
      if (!(other.exact() == q.exact()))
        fail(Errc::inconsistency, "routes " + to_string(routes.front()) + " and " + to_string(routes[i]) +
                                      " recognise different Q values");
      r.notes.push_back("route " + to_string(routes[i]) + " agrees exactly");
    }
  } catch (const Error& e) {
    if (!recognition_error(e)) throw;
    q = assemble_Q(d, routes.front());
    fill_q(r, q);
    r.notes.push_back(std::string("recognition failed: ") + e.what());
    r.verdict = "inconclusive";
    return r;
  }
  fill_q(r, q);

  const CharacterMap Q = q.exact();
  bool condition_i = true;
  for (const auto& row : check_condition_i(G, Q)) {
    r.condition_i.push_back({row.psi.key(), row.in_field, row.equivariant, row.p_unit,
                             num(row.valuation, "computed")});
    condition_i = condition_i && row.passed();
  }
  if (!condition_i) {
    r.verdict = "fail";
    r.notes.push_back("condition (i) fails; the congruences are not evaluated");
    return r;
  }

  CongruenceReport cong;
  try {
    cong = check_congruences(G, Q, n);
  } catch (const Error& e) {
    if (e.code() != Errc::galois_inconsistency) throw;
    r.notes.push_back(e.what());
    r.verdict = "inconclusive";
    return r;
  }
  for (const auto& s : cong.residues)
    r.residues.push_back({G.format(s.pi), num(s.value, "computed"), valuation_text(s.valuation), s.ok});
  r.shortcut = num(cong.shortcut, "computed");
  r.shortcut_valuation = valuation_text(cong.shortcut_valuation);
  r.labelings_agree = cong.labelings_agree;
  if (!cong.shortcut_agrees) r.notes.push_back("the n = 1 shortcut disagrees with the residues");

  if (!cong.labelings_agree || !cong.shortcut_agrees)
    r.verdict = "inconclusive";
  else
    r.verdict = cong.passed ? "pass" : "fail";
  if (r.verdict == "pass" && d.heights && !d.heights->point_is_verified_generator)
    r.notes.push_back("conditions (i) and (ii) hold for this point, which is therefore a Z_p[G]-generator of A(F)_p");
  return r;
}

VerificationReport verify_bsd_squares(const Dataset& d, const VerifyOptions& opts) {
  VerificationReport r = header(d, "bsd-squares", default_modulus_exponent(d.group));
  const Integer den_bound = opts.den_bound ? *opts.den_bound : d.options.den_bound;
  BSDSquaresReport b;
  try {
    b = run_bsd_squares(d, den_bound, tolerance(d));
  } catch (const Error& e) {
    if (!recognition_error(e)) throw;
    r.notes.push_back(std::string("recognition failed: ") + e.what());
    r.verdict = "inconclusive";
    return r;
  }
  BSDSection s;
  bool ok = true;
  for (const auto& p : b.sha) {
    s.sha.push_back({p.field, num(p.lhs, "recognized"), num(p.tamagawa_product, "input"),
                     num(p.differential_factor, "computed"), num(Rational(p.torsion), "input"), num(p.sha, "computed"),
                     p.integral, p.square});
    ok = ok && p.integral;
    if (p.integral && !p.square)
      r.notes.push_back("predicted |Sha| over " + p.field + " is " + to_string(p.sha) + ", which is not a square");
  }
  s.s3 = b.s3;
  if (b.s3) {
    for (const auto& [psi, e] : b.qtilde) {
      QTildeRow row;
      row.character = psi.key();
      if (e.numeric) row.numeric = num(*e.numeric, "computed");
      row.exact = num(e.exact, e.source == "direct" ? "recognized" : "computed");
      row.source = e.source;
      s.qtilde.push_back(row);
    }
    s.product = num(b.product, "computed");
    for (const auto& [psi, eq] : b.equivalent) s.equivalent[psi.key()] = eq;
    for (const auto& t : b.tamagawa)
      s.tamagawa.push_back({t.place, t.decomposition_order, num(t.lhs, "input"), num(t.rhs, "input"), t.holds,
                            t.rule_conforming, t.note});
    s.neron = b.neron;
    s.local_conditions = b.local_conditions;
    s.congruence = b.congruence;
    ok = ok && b.congruence && b.local_conditions;
  }
  r.bsd = s;
  r.verdict = ok ? "pass" : "fail";
  return r;
}

}  // namespace etnc
