#ifndef RYUO_TOOLS_VERIFY_SUITES_H_
#define RYUO_TOOLS_VERIFY_SUITES_H_

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "ryuo/move_set.h"
#include "ryuo/verification.h"

namespace ryuo::tools {

struct SuiteCheck {
  VerificationReport report;
  // Negative controls pass when they do find a mismatch.
  bool expect_mismatch = false;

  bool ok() const { return report.ok() != expect_mismatch; }
};

struct WitnessCheck {
  Coord p = 0;
  Offset dropped;
  std::optional<Witness> witness;
  std::string error;  // set when no witness was found

  bool ok() const { return witness.has_value(); }
};

struct SuiteResult {
  std::string name;
  std::vector<SuiteCheck> checks;
  std::vector<WitnessCheck> witnesses;
  std::string summary;

  bool ok() const;
};

// Suite names: ryuo, pass, restricted, ndim, moveset. `max` overrides the
// inclusive per-axis maximum of the two-dimensional sweeps (ryuo 59,
// pass 39, restricted 47 by default); the ndim and moveset windows are
// fixed.
std::vector<std::string> SuiteNames();
SuiteResult RunSuite(const std::string& name, std::optional<Coord> max);

nlohmann::ordered_json ToJson(const VerificationReport& report);
nlohmann::ordered_json ToJson(const SuiteResult& result);

}  // namespace ryuo::tools

#endif  // RYUO_TOOLS_VERIFY_SUITES_H_
