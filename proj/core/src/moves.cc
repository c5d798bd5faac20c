#include "ryuo/moves.h"

#include <string>

namespace ryuo {
namespace detail {

void CheckMoveArgs(const RuleSet& rules, std::span<const Coord> pos) {
  if (rules.variant() == Variant::kPassRyuo) {
    throw GameError(ErrorKind::kWrongOperation,
                    "the pass variant has its own move generator");
  }
  if (pos.size() != rules.dimension()) {
    throw GameError(ErrorKind::kContractViolation,
                    rules.ToString() + " expects " +
                        std::to_string(rules.dimension()) +
                        " coordinates, got " + std::to_string(pos.size()));
  }
}

}  // namespace detail

std::vector<Position> LegalMoves(const RuleSet& rules, const Position& pos) {
  std::vector<Position> out;
  ForEachOption(rules, pos.coords(), [&](std::span<const Coord> option) {
    out.emplace_back(option);
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PassPosition> LegalMovesPass(Coord p, const PassPosition& pos) {
  const RuleSet plain = RuleSet::GeneralizedRyuo(p);
  std::vector<PassPosition> out;
  auto keep = [&](std::span<const Coord> option) {
    out.push_back(PassPosition{option[0], option[1], pos.pass});
  };
  detail::ForEachTwoHeapOption(plain, pos.x, pos.y, keep);
  if (pos.pass && !pos.IsTerminal()) {
    out.push_back(PassPosition{pos.x, pos.y, false});
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ryuo
