#pragma once

#include <map>
#include <string>
#include <vector>

#include "etnc/dataset.hpp"

namespace etnc {

enum class HypothesisStatus { holds, fails, undetermined };
std::string to_string(HypothesisStatus s);

struct HypothesisResult {
  std::string id;  // "a" .. "i"
  HypothesisStatus status = HypothesisStatus::undetermined;
  std::string detail;
  friend bool operator==(const HypothesisResult&, const HypothesisResult&) = default;
};

// Report only; never throws on failing hypotheses.
std::vector<HypothesisResult> check_hypotheses(const Dataset& d);

// rho_A = 1 when rank_k = 0 and eps when rank_k = 1.
Character rho_A(int rank_k);
// r_{rho_A} = 0 and r_psi = 1 otherwise. Throws out-of-scope for rank_k outside {0, 1}.
std::map<Character, int> expected_vanishing_orders(const DihedralGroup& G, int rank_k);

}  // namespace etnc
