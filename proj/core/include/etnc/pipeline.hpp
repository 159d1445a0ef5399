#pragma once

#include <optional>

#include "etnc/congruence.hpp"
#include "etnc/dataset.hpp"
#include "etnc/report.hpp"

namespace etnc {

struct VerifyOptions {
  std::optional<Route> route;         // overrides the dataset choice
  std::optional<Integer> den_bound;
  std::optional<unsigned> n_override;
};

// hypotheses -> expected orders -> assemble -> recognise -> condition (i) -> congruences -> verdict.
// Recognition failures give verdict "inconclusive"; data errors propagate as etnc::Error.
VerificationReport verify(const Dataset& d, const VerifyOptions& opts = {});

// Sha predictions and, for S3 towers, the mod-squares analysis. Verdict "pass" when every
// prediction is a positive integer and, for S3, the congruence and the local conditions hold.
VerificationReport verify_bsd_squares(const Dataset& d, const VerifyOptions& opts = {});

}  // namespace etnc
