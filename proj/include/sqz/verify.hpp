#pragma once

#include <string>
#include <vector>

#include "sqz/types.hpp"

namespace sqz::verify {

struct InvariantResult {
  std::string name;
  double residual = 0.0;
  double bound = 0.0;
  bool pass = false;
};

struct VerifyReport {
  std::string profile;
  double scale = 1.0;
  bool all_pass = false;
  std::vector<InvariantResult> items;
};

// Runs every module's invariant suite with deterministic inputs.  The
// profile is either "default" (scale 1) or a numeric scale applied to every
// bound; an item passes when residual <= bound * scale.
VerifyReport run_verification(const std::string& profile);

std::string report_to_json(const VerifyReport& report);

}  // namespace sqz::verify
