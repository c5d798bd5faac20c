#include "ryuo/pass.h"

#include <array>

#include "ryuo/error.h"
#include "ryuo/mex.h"
#include "ryuo/moves.h"
#include "ryuo/oracle.h"

namespace ryuo {
namespace {

void RequireTwoDimensional(const Region& region) {
  if (region.dimension() != 2) {
    throw GameError(ErrorKind::kContractViolation,
                    "pass-variant regions are two-dimensional");
  }
}

// {(m+1, p-m) : 0 <= m <= p-1}
bool InCorner(Coord p, Coord x, Coord y) {
  return x >= 1 && x <= p && CheckedAdd(x, y) == CheckedAdd(p, 1);
}

// {(pn+1, pn+1) : n >= 1}
bool OnDiagonal(Coord p, Coord x, Coord y) {
  return x == y && x > p && (x - 1) % p == 0;
}

// {(k+pn, p+2-k+pn) : n >= 1, 2 <= k <= p}; the sum is p+2+2pn.
bool InPairs(Coord p, Coord x, Coord y) {
  const Coord sum = CheckedAdd(x, y);
  const Coord base = CheckedAdd(p, 2);
  const Coord period = CheckedMul(2, p);
  if (sum <= base || (sum - base) % period != 0) return false;
  const Coord n = (sum - base) / period;
  const Coord shift = p * n;
  if (x < shift) return false;
  const Coord k = x - shift;
  return k >= 2 && k <= p;
}

}  // namespace

Outcome ClassifyPass(Coord p, const PassPosition& pos) {
  if (p < 3) {
    throw GameError(ErrorKind::kNoClosedForm,
                    "the pass-variant P-set formula needs p >= 3");
  }
  const Coord x = pos.x;
  const Coord y = pos.y;
  bool is_p = false;
  if (!pos.pass) {
    is_p = CheckedAdd(x, y) % p == 0 && x / p == y / p;
  } else {
    is_p = pos.IsTerminal() || InCorner(p, x, y) || OnDiagonal(p, x, y) ||
           InPairs(p, x, y);
  }
  return is_p ? Outcome::kP : Outcome::kN;
}

PassOutcomeTable::PassOutcomeTable(Coord p, Region region,
                                   std::vector<Outcome> without_pass,
                                   std::vector<Outcome> with_pass)
    : p_(p),
      region_(std::move(region)),
      without_pass_(std::move(without_pass)),
      with_pass_(std::move(with_pass)) {}

Outcome PassOutcomeTable::at(const PassPosition& pos) const {
  const std::array<Coord, 2> coords{pos.x, pos.y};
  const std::size_t index = region_.IndexOf(coords);
  return pos.pass ? with_pass_[index] : without_pass_[index];
}

PassOutcomeTable OutcomeBackwardInduction(Coord p, const Region& region) {
  RequireTwoDimensional(region);
  const RuleSet plain = RuleSet::GeneralizedRyuo(p);
  const std::size_t cells = region.cell_count();
  std::vector<Outcome> without_pass(cells, Outcome::kP);
  std::vector<Outcome> with_pass(cells, Outcome::kP);

  // A state is N iff some option is P. Options stay in their layer except
  // the pass itself, which drops into the already-solved pass=false layer.
  for (const bool pass : {false, true}) {
    std::vector<Outcome>& layer = pass ? with_pass : without_pass;
    for (std::size_t index = 0; index < cells; ++index) {
      const Position pos = region.PositionAt(index);
      bool reaches_p = false;
      ForEachOption(plain, pos.coords(), [&](std::span<const Coord> option) {
        if (layer[region.IndexOfUnchecked(option)] == Outcome::kP) {
          reaches_p = true;
        }
      });
      if (pass && !pos.IsTerminal() && without_pass[index] == Outcome::kP) {
        reaches_p = true;
      }
      layer[index] = reaches_p ? Outcome::kN : Outcome::kP;
    }
  }
  return PassOutcomeTable(p, region, std::move(without_pass),
                          std::move(with_pass));
}

VerificationReport VerifyPassTheorem(Coord p, const Region& region) {
  const PassOutcomeTable table = OutcomeBackwardInduction(p, region);
  VerificationReport report;
  report.subject = RuleSet::PassRyuo(p).ToString();
  report.region = region;
  const auto code = [](Outcome o) -> GrundyValue {
    return o == Outcome::kP ? 0 : 1;
  };
  for (std::size_t index = 0; index < region.cell_count(); ++index) {
    const Position pos = region.PositionAt(index);
    for (const bool pass : {false, true}) {
      const PassPosition state{pos[0], pos[1], pass};
      const GrundyValue oracle = code(table.at(state));
      const GrundyValue formula = code(ClassifyPass(p, state));
      ++report.positions_checked;
      if (oracle != formula) {
        report.mismatches.push_back(
            Mismatch{{state.x, state.y}, pass, oracle, formula});
      }
    }
  }
  return report;
}

GrundyTable PassGrundyTable(Coord p, const Region& region, bool pass_layer) {
  RequireTwoDimensional(region);
  const RuleSet plain = RuleSet::GeneralizedRyuo(p);
  GrundyTable without_pass = BuildGrundyTable(plain, region);
  if (!pass_layer) return without_pass;

  std::vector<GrundyValue> values(region.cell_count());
  MexScratch scratch;
  for (std::size_t index = 0; index < values.size(); ++index) {
    const Position pos = region.PositionAt(index);
    scratch.Clear();
    ForEachOption(plain, pos.coords(), [&](std::span<const Coord> option) {
      scratch.Insert(values[region.IndexOfUnchecked(option)]);
    });
    if (!pos.IsTerminal()) scratch.Insert(without_pass.at_index(index));
    values[index] = scratch.Mex();
  }
  return GrundyTable(region, std::move(values));
}

}  // namespace ryuo
