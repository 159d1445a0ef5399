#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace etnc {

enum class Errc {
  invalid_automorphism,
  infinite_valuation,
  unsupported_conductor,
  recognition_failure,
  ambiguous_recognition,
  invalid_input,
  not_real,
  dimension_error,
  incomplete_input,
  precondition_violation,
  galois_inconsistency,
  schema_violation,
  data_error,
  out_of_scope,
  route_unavailable,
  division_by_zero,
  inconsistency,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& what);

}  // namespace etnc
