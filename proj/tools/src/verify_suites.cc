#include "ryuo_tools/verify_suites.h"

#include <algorithm>
#include <stdexcept>

#include "ryuo/error.h"
#include "ryuo/pass.h"
#include "ryuo/rules.h"

namespace ryuo::tools {
namespace {

constexpr Coord kRyuoMax = 59;
constexpr Coord kPassMax = 39;
constexpr Coord kRestrictedMax = 47;
constexpr Coord kThreeDimMax = 19;
constexpr Coord kNDimMax = 9;
constexpr Coord kNDimAgreementMax = 14;

std::uint64_t CountMismatches(const SuiteResult& result) {
  std::uint64_t total = 0;
  for (const SuiteCheck& check : result.checks) {
    if (!check.expect_mismatch) total += check.report.mismatches.size();
  }
  return total;
}

std::string MismatchSummary(const std::string& label,
                            const SuiteResult& result) {
  return label + ": " + std::to_string(CountMismatches(result)) +
         " mismatches";
}

SuiteResult RyuoSuite(Coord max) {
  SuiteResult out;
  out.name = "ryuo";
  for (Coord p = 1; p <= 6; ++p) {
    out.checks.push_back(
        {VerifyEquivalence(RuleSet::GeneralizedRyuo(p), Region::Cube(2, max))});
  }
  out.summary = MismatchSummary("p=1..6", out);
  return out;
}

SuiteResult PassSuite(Coord max) {
  SuiteResult out;
  out.name = "pass";
  for (Coord p = 3; p <= 5; ++p) {
    out.checks.push_back({VerifyPassTheorem(p, Region::Cube(2, max))});
  }
  out.summary = MismatchSummary("p=3..5, both layers", out);
  return out;
}

SuiteResult RestrictedSuite(Coord max) {
  SuiteResult out;
  out.name = "restricted";
  const Region region = Region::Cube(2, max);
  const std::pair<Coord, Coord> side[] = {{2, 4}, {3, 3}, {3, 6}, {4, 8},
                                          {3, 4}, {3, 7}, {4, 5}};
  for (const auto& [p, q] : side) {
    out.checks.push_back(
        {VerifyEquivalence(RuleSet::RestrictedSide(p, q), region)});
  }
  const Coord hv[][3] = {{3, 3, 6}, {2, 4, 2}, {3, 6, 3}};
  for (const auto& [p, q, r] : hv) {
    out.checks.push_back(
        {VerifyEquivalence(RuleSet::RestrictedHV(p, q, r), region)});
  }
  out.checks.push_back(
      {VerifyEquivalence(RuleSet::RestrictedSide(2, 2, SideReading::kLiteral),
                         Region::Cube(2, 2)),
       true});
  out.summary = MismatchSummary("10 theorems", out) + "; literal control: " +
                std::to_string(out.checks.back().report.mismatches.size()) +
                " mismatches (expected >= 1)";
  return out;
}

SuiteResult NDimSuite() {
  SuiteResult out;
  out.name = "ndim";
  out.checks.push_back({VerifyEquivalence(RuleSet::ModifiedThreeDim(),
                                          Region::Cube(3, kThreeDimMax))});
  out.checks.push_back(
      {VerifyThreeDimPPositions(Region::Cube(3, kThreeDimMax))});
  for (Coord p : {2, 3}) {
    out.checks.push_back({VerifyEquivalence(RuleSet::NDim(p, 4),
                                            Region::Cube(4, kNDimMax))});
  }
  out.checks.push_back({VerifyOracleAgreement(
      RuleSet::NDim(3, 3), RuleSet::ModifiedThreeDim(),
      Region::Cube(3, kNDimAgreementMax))});
  out.summary = MismatchSummary("5 checks", out);
  return out;
}

SuiteResult MoveSetSuite() {
  SuiteResult out;
  out.name = "moveset";
  for (Coord p = 3; p <= 5; ++p) {
    std::vector<Offset> required = {{1, 0}, {0, 1}};
    for (Coord s = 1; s < p; ++s) {
      for (Coord t = 1; s + t < p; ++t) required.push_back({s, t});
    }
    std::sort(required.begin(), required.end());
    for (const Offset& dropped : required) {
      WitnessCheck check;
      check.p = p;
      check.dropped = dropped;
      try {
        check.witness = NecessaryConditionWitness(p, dropped);
      } catch (const GameError& e) {
        check.error = e.what();
      }
      out.witnesses.push_back(std::move(check));
    }
  }
  // The queen lacks the (1,2)/(2,1) jumps that p=3 needs.
  out.checks.push_back(
      {VerifyEquivalence(MoveSet::Queen(), 3, Region::Cube(2, 4)), true});
  const auto found = std::count_if(out.witnesses.begin(), out.witnesses.end(),
                                   [](const WitnessCheck& w) { return w.ok(); });
  out.summary = "p=3..5: " + std::to_string(found) + "/" +
                std::to_string(out.witnesses.size()) +
                " dropped offsets have a witness";
  return out;
}

}  // namespace

bool SuiteResult::ok() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const SuiteCheck& c) { return c.ok(); }) &&
         std::all_of(witnesses.begin(), witnesses.end(),
                     [](const WitnessCheck& w) { return w.ok(); });
}

std::vector<std::string> SuiteNames() {
  return {"ryuo", "pass", "restricted", "ndim", "moveset"};
}

SuiteResult RunSuite(const std::string& name, std::optional<Coord> max) {
  if (name == "ryuo") return RyuoSuite(max.value_or(kRyuoMax));
  if (name == "pass") return PassSuite(max.value_or(kPassMax));
  if (name == "restricted") return RestrictedSuite(max.value_or(kRestrictedMax));
  if (name == "ndim") return NDimSuite();
  if (name == "moveset") return MoveSetSuite();
  throw std::invalid_argument("unknown suite '" + name + "'");
}

nlohmann::ordered_json ToJson(const VerificationReport& report) {
  nlohmann::ordered_json out;
  out["subject"] = report.subject;
  out["region"] = report.region.ToString();
  out["positionsChecked"] = report.positions_checked;
  out["matches"] = report.matches();
  nlohmann::ordered_json mismatches = nlohmann::ordered_json::array();
  for (const Mismatch& m : report.mismatches) {
    nlohmann::ordered_json entry;
    entry["coords"] = m.coords;
    if (m.pass) entry["pass"] = *m.pass;
    entry["oracle"] = m.oracle;
    entry["formula"] = m.formula;
    mismatches.push_back(std::move(entry));
  }
  out["mismatches"] = std::move(mismatches);
  return out;
}

nlohmann::ordered_json ToJson(const SuiteResult& result) {
  nlohmann::ordered_json out;
  out["suite"] = result.name;
  out["ok"] = result.ok();
  out["summary"] = result.summary;
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const SuiteCheck& check : result.checks) {
    nlohmann::ordered_json entry = ToJson(check.report);
    entry["expectMismatch"] = check.expect_mismatch;
    entry["ok"] = check.ok();
    checks.push_back(std::move(entry));
  }
  out["checks"] = std::move(checks);
  if (!result.witnesses.empty()) {
    nlohmann::ordered_json witnesses = nlohmann::ordered_json::array();
    for (const WitnessCheck& w : result.witnesses) {
      nlohmann::ordered_json entry;
      entry["p"] = w.p;
      entry["dropped"] = {w.dropped.s, w.dropped.t};
      if (w.witness) {
        const auto coords = w.witness->position.coords();
        entry["position"] = std::vector<Coord>(coords.begin(), coords.end());
        entry["oracle"] = w.witness->oracle;
        entry["formula"] = w.witness->formula;
      } else {
        entry["error"] = w.error;
      }
      witnesses.push_back(std::move(entry));
    }
    out["witnesses"] = std::move(witnesses);
  }
  return out;
}

}  // namespace ryuo::tools
