#ifndef RYUO_STRATEGY_H_
#define RYUO_STRATEGY_H_

#include <vector>

#include "ryuo/position.h"
#include "ryuo/rules.h"

namespace ryuo {

template <typename State>
struct MoveRecommendation {
  State target;
  // True iff `target` is a P-position.
  bool winning = false;

  friend bool operator==(const MoveRecommendation&,
                         const MoveRecommendation&) = default;
};

// P iff the Grundy value is 0. Uses the closed form when there is one, the
// P-position theorem for ThreeDim, and otherwise the oracle over the
// smallest enclosing region (kRegion if that region is too large).
Outcome GetOutcome(const RuleSet& rules, const Position& pos);
// `rules` must be the pass variant (kWrongOperation otherwise).
Outcome GetOutcome(const RuleSet& rules, const PassPosition& pos);

// Every option that is a P-position, in lexicographic order. Empty iff
// `pos` is P or terminal.
std::vector<MoveRecommendation<Position>> BestMoves(const RuleSet& rules,
                                                    const Position& pos);
std::vector<MoveRecommendation<PassPosition>> BestMoves(
    const RuleSet& rules, const PassPosition& pos);

// First winning option, or else the lexicographically smallest option with
// winning = false. Throws kNoMove at a terminal position.
MoveRecommendation<Position> EngineMove(const RuleSet& rules,
                                        const Position& pos);
MoveRecommendation<PassPosition> EngineMove(const RuleSet& rules,
                                            const PassPosition& pos);

}  // namespace ryuo

#endif  // RYUO_STRATEGY_H_
