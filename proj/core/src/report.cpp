#include "etnc/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "etnc/error.hpp"

namespace etnc {

using nlohmann::json;

ReportFormat parse_report_format(std::string_view s) {
  if (s == "text") return ReportFormat::text;
  if (s == "structured") return ReportFormat::structured;
  fail(Errc::invalid_input, "unknown report format '" + std::string(s) + "'");
}

void to_json(json& j, const ReportNumber& n) { j = {{"value", n.value}, {"provenance", n.provenance}}; }
void from_json(const json& j, ReportNumber& n) {
  j.at("value").get_to(n.value);
  j.at("provenance").get_to(n.provenance);
}

}  // namespace etnc

namespace nlohmann {
template <typename T>
struct adl_serializer<std::optional<T>> {
  static void to_json(json& j, const std::optional<T>& o) {
    if (o)
      j = *o;
    else
      j = nullptr;
  }
  static void from_json(const json& j, std::optional<T>& o) {
    if (j.is_null())
      o.reset();
    else
      o = j.get<T>();
  }
};
}  // namespace nlohmann

namespace etnc {

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(HypothesisRow, id, status, detail)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(QRow, character, numeric, qhat_numeric, correction, qhat_exact, exact)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(OrbitRow, members, min_poly, sum)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ConditionRow, character, in_field, equivariant, p_unit, valuation)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ResidueRow, pi, value, valuation, ok)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ShaRow, field, lhs, tamagawa, differential, torsion, sha, integral, square)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(QTildeRow, character, numeric, exact, source)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(TamagawaRow, place, decomposition_order, lhs, rhs, holds, rule_conforming, note)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(BSDSection, sha, s3, qtilde, product, equivalent, tamagawa, neron, local_conditions,
                                   congruence)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(VerificationReport, report_version, command, dataset, curve, p, order_P, n, route,
                                   hypotheses, q, orbits, condition_i, residues, shortcut, shortcut_valuation,
                                   labelings_agree, bsd, notes, verdict)

namespace {

std::string tagged(const ReportNumber& n) { return n.value + "  [" + n.provenance + "]"; }
const char* yes(bool b) { return b ? "yes" : "no"; }

std::string upper(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return s;
}

void emit_bsd(std::ostringstream& out, const BSDSection& b) {
  out << "BSD predictions:\n";
  for (const auto& s : b.sha) {
    out << "  over " << s.field << ": LHS = " << tagged(s.lhs) << "\n";
    out << "    prod c = " << s.tamagawa.value << ", differentials = " << s.differential.value
        << ", |tors| = " << s.torsion.value << "\n";
    out << "    |Sha| = " << tagged(s.sha);
    if (!s.integral) out << "  (not an integer)";
    else if (!s.square) out << "  (not a square)";
    out << "\n";
  }
  if (!b.s3) return;
  out << "mod-squares analysis:\n";
  for (const auto& q : b.qtilde) {
    out << "  Qtilde[" << q.character << "] = " << tagged(q.exact) << " via " << q.source;
    if (q.numeric) out << ", numeric " << q.numeric->value;
    out << "\n";
  }
  if (b.product) out << "  Qtilde[1] Qtilde[eps] = " << tagged(*b.product) << "\n";
  for (const auto& [c, eq] : b.equivalent)
    out << "  equivalent mod squares to Qtilde[" << c << "]: " << yes(eq) << "\n";
  for (const auto& t : b.tamagawa) {
    out << "  Tamagawa at " << t.place << " (order " << t.decomposition_order << "): " << t.lhs.value << " vs "
        << t.rhs.value << " -> " << (t.holds ? "holds" : "fails");
    if (!t.note.empty()) out << "; " << t.note;
    out << "\n";
  }
  for (const auto& [place, ok] : b.neron) out << "  Neron differentials at " << place << ": " << (ok ? "balanced" : "unbalanced") << "\n";
  out << "  local conditions: " << (b.local_conditions ? "hold" : "fail") << "\n";
  out << "  congruence mod squares: " << (b.congruence ? "holds" : "fails") << "\n";
}

std::string emit_text(const VerificationReport& r) {
  std::ostringstream out;
  out << "dataset: " << r.dataset << " (curve " << r.curve << ", p = " << r.p << ", |P| = " << r.order_P
      << ", n = " << r.n << ")\n";
  if (!r.route.empty()) out << "route: " << r.route << "\n";
  if (!r.hypotheses.empty()) {
    out << "hypotheses:\n";
    for (const auto& h : r.hypotheses) out << "  (" << h.id << ") " << h.status << ": " << h.detail << "\n";
  }
  if (!r.q.empty()) {
    out << "Q values:\n";
    for (const auto& q : r.q) {
      if (q.exact)
        out << "  Q[" << q.character << "] = " << tagged(*q.exact) << "\n";
      out << "    numeric " << tagged(q.numeric) << "\n";
      if (q.qhat_exact) out << "    Qhat = " << tagged(*q.qhat_exact) << "\n";
      else if (q.qhat_numeric) out << "    Qhat ~ " << tagged(*q.qhat_numeric) << "\n";
      if (q.correction) out << "    u t = " << tagged(*q.correction) << "\n";
    }
  }
  for (const auto& o : r.orbits) {
    out << "orbit {";
    for (size_t i = 0; i < o.members.size(); ++i) out << (i ? ", " : "") << o.members[i];
    out << "}: minimal polynomial " << tagged(o.min_poly) << ", sum of Q = " << tagged(o.sum) << "\n";
  }
  if (!r.condition_i.empty()) {
    out << "condition (i):\n";
    for (const auto& c : r.condition_i)
      out << "  " << c.character << ": in Q(psi) " << yes(c.in_field) << ", equivariant " << yes(c.equivariant)
          << ", v_" << r.p << " = " << c.valuation.value << " -> "
          << (c.in_field && c.equivariant && c.p_unit ? "pass" : "fail") << "\n";
  }
  if (!r.residues.empty()) {
    out << "congruences modulo " << r.p << "^" << r.n << ":\n";
    for (const auto& s : r.residues)
      out << "  S(" << s.pi << ") = " << s.value.value << ", v_" << r.p << " = " << s.valuation << "  ["
          << s.value.provenance << "]" << (s.ok ? "" : "  FAILS") << "\n";
    if (r.shortcut)
      out << "  Q[1] Q[eps] + 2 sum Q[psi] = " << r.shortcut->value << ", v_" << r.p << " = " << r.shortcut_valuation
          << "\n";
    out << "  labelings agree: " << yes(r.labelings_agree) << "\n";
  }
  if (r.bsd) emit_bsd(out, *r.bsd);
  for (const auto& n : r.notes) out << "note: " << n << "\n";
  out << "verdict: " << upper(r.verdict) << "\n";
  return out.str();
}

}  // namespace

std::string emit_report(const VerificationReport& r, ReportFormat format) {
  if (format == ReportFormat::text) return emit_text(r);
  json j = r;
  return j.dump(2) + "\n";
}

VerificationReport parse_structured_report(std::string_view text) {
  try {
    json j = json::parse(text.begin(), text.end());
    VerificationReport r = j.get<VerificationReport>();
    if (r.report_version != kReportVersion) fail(Errc::schema_violation, "unsupported report_version");
    return r;
  } catch (const json::exception& e) {
    fail(Errc::schema_violation, std::string("malformed report: ") + e.what());
  }
}

}  // namespace etnc
