#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace etnc {

inline constexpr int kReportVersion = 1;

// Every number in a report says where it came from: input, computed or recognized.
struct ReportNumber {
  std::string value;
  std::string provenance;
  friend bool operator==(const ReportNumber&, const ReportNumber&) = default;
};

struct HypothesisRow {
  std::string id, status, detail;
  friend bool operator==(const HypothesisRow&, const HypothesisRow&) = default;
};

struct QRow {
  std::string character;
  ReportNumber numeric;
  std::optional<ReportNumber> qhat_numeric, correction, qhat_exact, exact;
  friend bool operator==(const QRow&, const QRow&) = default;
};

struct OrbitRow {
  std::vector<std::string> members;
  ReportNumber min_poly;
  ReportNumber sum;
  friend bool operator==(const OrbitRow&, const OrbitRow&) = default;
};

struct ConditionRow {
  std::string character;
  bool in_field = false, equivariant = false, p_unit = false;
  ReportNumber valuation;
  friend bool operator==(const ConditionRow&, const ConditionRow&) = default;
};

struct ResidueRow {
  std::string pi;
  ReportNumber value;
  std::string valuation;  // "inf" for S = 0
  bool ok = false;
  friend bool operator==(const ResidueRow&, const ResidueRow&) = default;
};

struct ShaRow {
  std::string field;
  ReportNumber lhs, tamagawa, differential, torsion, sha;
  bool integral = false, square = false;
  friend bool operator==(const ShaRow&, const ShaRow&) = default;
};

struct QTildeRow {
  std::string character;
  std::optional<ReportNumber> numeric;
  ReportNumber exact;
  std::string source;
  friend bool operator==(const QTildeRow&, const QTildeRow&) = default;
};

struct TamagawaRow {
  std::string place;
  unsigned decomposition_order = 1;
  ReportNumber lhs, rhs;
  bool holds = false, rule_conforming = true;
  std::string note;
  friend bool operator==(const TamagawaRow&, const TamagawaRow&) = default;
};

struct BSDSection {
  std::vector<ShaRow> sha;
  bool s3 = false;
  std::vector<QTildeRow> qtilde;
  std::optional<ReportNumber> product;
  std::map<std::string, bool> equivalent;
  std::vector<TamagawaRow> tamagawa;
  std::map<std::string, bool> neron;
  bool local_conditions = false, congruence = false;
  friend bool operator==(const BSDSection&, const BSDSection&) = default;
};

struct VerificationReport {
  int report_version = kReportVersion;
  std::string command;
  std::string dataset, curve;
  unsigned long p = 0, order_P = 0;
  unsigned n = 0;
  std::string route;
  std::vector<HypothesisRow> hypotheses;
  std::vector<QRow> q;
  std::vector<OrbitRow> orbits;
  std::vector<ConditionRow> condition_i;
  std::vector<ResidueRow> residues;
  std::optional<ReportNumber> shortcut;
  std::string shortcut_valuation;
  bool labelings_agree = true;
  std::optional<BSDSection> bsd;
  std::vector<std::string> notes;
  std::string verdict;  // pass, fail or inconclusive
  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

enum class ReportFormat { text, structured };
ReportFormat parse_report_format(std::string_view s);

std::string emit_report(const VerificationReport& r, ReportFormat format);
// Inverse of the structured format. Throws schema-violation.
VerificationReport parse_structured_report(std::string_view text);

}  // namespace etnc
