#include "ryuo/verification.h"

#include "ryuo/closed_form.h"
#include "ryuo/error.h"
#include "ryuo/oracle.h"

namespace ryuo {
namespace {

template <typename Formula>
VerificationReport Compare(std::string subject, const GrundyTable& table,
                           Formula&& formula) {
  VerificationReport report;
  report.subject = std::move(subject);
  report.region = table.region();
  const Region& region = table.region();
  for (std::size_t index = 0; index < region.cell_count(); ++index) {
    const Position pos = region.PositionAt(index);
    const GrundyValue expected = formula(pos);
    const GrundyValue actual = table.at_index(index);
    ++report.positions_checked;
    if (actual != expected) {
      report.mismatches.push_back(Mismatch{
          {pos.coords().begin(), pos.coords().end()}, std::nullopt, actual,
          expected});
    }
  }
  return report;
}

GrundyValue OutcomeCode(bool is_p) { return is_p ? 0 : 1; }

}  // namespace

VerificationReport VerifyEquivalence(const RuleSet& rules,
                                     const Region& region) {
  if (!HasClosedForm(rules)) {
    throw GameError(ErrorKind::kNoClosedForm,
                    "no closed form to verify for " + rules.ToString());
  }
  return Compare(rules.ToString(), BuildGrundyTable(rules, region),
                 [&](const Position& pos) {
                   return GrundyClosedForm(rules, pos);
                 });
}

VerificationReport VerifyEquivalence(const MoveSet& moves, Coord p,
                                     const Region& region) {
  return Compare("custom piece vs ryuo(p=" + std::to_string(p) + ") formula",
                 BuildGrundyTable(moves, region), [&](const Position& pos) {
                   return CongruenceNimFormula(p, pos.coords());
                 });
}

VerificationReport VerifyThreeDimPPositions(const Region& region) {
  const GrundyTable table = BuildGrundyTable(RuleSet::ThreeDim(), region);
  VerificationReport report;
  report.subject = "3dim P-positions";
  report.region = region;
  for (std::size_t index = 0; index < region.cell_count(); ++index) {
    const Position pos = region.PositionAt(index);
    const GrundyValue oracle = OutcomeCode(table.at_index(index) == 0);
    const GrundyValue formula = OutcomeCode(ThreeDimIsPPosition(pos));
    ++report.positions_checked;
    if (oracle != formula) {
      report.mismatches.push_back(Mismatch{
          {pos.coords().begin(), pos.coords().end()}, std::nullopt, oracle,
          formula});
    }
  }
  return report;
}

VerificationReport VerifyOracleAgreement(const RuleSet& first,
                                         const RuleSet& second,
                                         const Region& region) {
  const GrundyTable other = BuildGrundyTable(second, region);
  return Compare(first.ToString() + " vs " + second.ToString(),
                 BuildGrundyTable(first, region),
                 [&](const Position& pos) { return other.at(pos); });
}

Witness NecessaryConditionWitness(Coord p, Offset dropped) {
  const Coord total = dropped.s + dropped.t;
  const bool unit_step = total == 1;
  if (total == 0 || (!unit_step && total > p - 1)) {
    throw GameError(ErrorKind::kContractViolation,
                    dropped.ToString() +
                        " is not an offset the theorem requires for p=" +
                        std::to_string(p));
  }
  const MoveSet reduced =
      MoveSet::ForRules(RuleSet::GeneralizedRyuo(p)).Without(dropped);
  const Region region = Region::Cube(2, p + 1);
  const GrundyTable table = BuildGrundyTable(reduced, region);
  for (std::size_t index = 0; index < region.cell_count(); ++index) {
    Position pos = region.PositionAt(index);
    const GrundyValue formula = CongruenceNimFormula(p, pos.coords());
    if (table.at_index(index) != formula) {
      return Witness{std::move(pos), table.at_index(index), formula};
    }
  }
  throw GameError(ErrorKind::kCounterexample,
                  "dropping " + dropped.ToString() + " for p=" +
                      std::to_string(p) +
                      " left the Grundy formula intact on " +
                      region.ToString());
}

}  // namespace ryuo
