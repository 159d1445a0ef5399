#include "etnc/error.hpp"

namespace etnc {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_automorphism: return "invalid-automorphism";
    case Errc::infinite_valuation: return "infinite-valuation";
    case Errc::unsupported_conductor: return "unsupported-conductor";
    case Errc::recognition_failure: return "recognition-failure";
    case Errc::ambiguous_recognition: return "ambiguous-recognition";
    case Errc::invalid_input: return "invalid-input";
    case Errc::not_real: return "not-real";
    case Errc::dimension_error: return "dimension-error";
    case Errc::incomplete_input: return "incomplete-input";
    case Errc::precondition_violation: return "precondition-violation";
    case Errc::galois_inconsistency: return "galois-inconsistency";
    case Errc::schema_violation: return "schema-violation";
    case Errc::data_error: return "data-error";
    case Errc::out_of_scope: return "out-of-scope";
    case Errc::route_unavailable: return "route-unavailable";
    case Errc::division_by_zero: return "division-by-zero";
    case Errc::inconsistency: return "inconsistency";
  }
  return "unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace etnc
