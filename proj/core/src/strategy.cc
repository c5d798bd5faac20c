#include "ryuo/strategy.h"

#include <optional>

#include "ryuo/closed_form.h"
#include "ryuo/error.h"
#include "ryuo/grundy_table.h"
#include "ryuo/moves.h"
#include "ryuo/oracle.h"
#include "ryuo/pass.h"

namespace ryuo {
namespace {

// Classifies `root` and its options. Variants without a formula get one
// oracle table over the region enclosing `root`, which holds every option.
class PositionJudge {
 public:
  PositionJudge(const RuleSet& rules, const Position& root) : rules_(rules) {
    detail::CheckMoveArgs(rules, root.coords());
    if (!HasClosedForm(rules) && rules.variant() != Variant::kThreeDim) {
      table_.emplace(BuildGrundyTable(rules, Region::Enclosing(root)));
    }
  }

  Outcome operator()(const Position& pos) const {
    bool is_p = false;
    if (table_) {
      is_p = table_->at(pos) == 0;
    } else if (rules_.variant() == Variant::kThreeDim) {
      is_p = ThreeDimIsPPosition(pos);
    } else {
      is_p = GrundyClosedForm(rules_, pos) == 0;
    }
    return is_p ? Outcome::kP : Outcome::kN;
  }

 private:
  const RuleSet& rules_;
  std::optional<GrundyTable> table_;
};

class PassJudge {
 public:
  PassJudge(const RuleSet& rules, const PassPosition& root) : p_(rules.p()) {
    if (rules.variant() != Variant::kPassRyuo) {
      throw GameError(ErrorKind::kWrongOperation,
                      rules.ToString() + " has no pass move");
    }
    if (p_ < 3) {
      table_.emplace(
          OutcomeBackwardInduction(p_, Region({root.x, root.y})));
    }
  }

  Outcome operator()(const PassPosition& pos) const {
    return table_ ? table_->at(pos) : ClassifyPass(p_, pos);
  }

 private:
  Coord p_;
  std::optional<PassOutcomeTable> table_;
};

template <typename State, typename Judge>
std::vector<MoveRecommendation<State>> WinningOptions(
    const std::vector<State>& options, const Judge& judge) {
  std::vector<MoveRecommendation<State>> out;
  for (const State& option : options) {
    if (judge(option) == Outcome::kP) out.push_back({option, true});
  }
  return out;
}

template <typename State>
MoveRecommendation<State> PickMove(
    const std::vector<MoveRecommendation<State>>& winning,
    const std::vector<State>& options) {
  if (!winning.empty()) return winning.front();
  if (options.empty()) {
    throw GameError(ErrorKind::kNoMove, "no move from a terminal position");
  }
  return {options.front(), false};
}

}  // namespace

Outcome GetOutcome(const RuleSet& rules, const Position& pos) {
  return PositionJudge(rules, pos)(pos);
}

Outcome GetOutcome(const RuleSet& rules, const PassPosition& pos) {
  return PassJudge(rules, pos)(pos);
}

std::vector<MoveRecommendation<Position>> BestMoves(const RuleSet& rules,
                                                    const Position& pos) {
  const PositionJudge judge(rules, pos);
  return WinningOptions(LegalMoves(rules, pos), judge);
}

std::vector<MoveRecommendation<PassPosition>> BestMoves(
    const RuleSet& rules, const PassPosition& pos) {
  const PassJudge judge(rules, pos);
  return WinningOptions(LegalMovesPass(rules.p(), pos), judge);
}

MoveRecommendation<Position> EngineMove(const RuleSet& rules,
                                        const Position& pos) {
  const PositionJudge judge(rules, pos);
  const std::vector<Position> options = LegalMoves(rules, pos);
  return PickMove(WinningOptions(options, judge), options);
}

MoveRecommendation<PassPosition> EngineMove(const RuleSet& rules,
                                            const PassPosition& pos) {
  const PassJudge judge(rules, pos);
  const std::vector<PassPosition> options = LegalMovesPass(rules.p(), pos);
  return PickMove(WinningOptions(options, judge), options);
}

}  // namespace ryuo
