#ifndef RYUO_MOVES_H_
#define RYUO_MOVES_H_

#include <algorithm>
#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "ryuo/error.h"
#include "ryuo/position.h"
#include "ryuo/rules.h"

namespace ryuo {

namespace detail {

void CheckMoveArgs(const RuleSet& rules, std::span<const Coord> pos);

template <typename Visit>
void ForEachTwoHeapOption(const RuleSet& rules, Coord x, Coord y,
                          Visit& visit) {
  std::array<Coord, 2> buf{};
  const std::span<const Coord> view(buf);
  const auto cap_x = rules.AxisCap(0);
  const auto cap_y = rules.AxisCap(1);
  const Coord max_s = cap_x ? std::min(*cap_x, x) : x;
  const Coord max_t = cap_y ? std::min(*cap_y, y) : y;
  for (Coord s = 1; s <= max_s; ++s) {
    buf = {x - s, y};
    visit(view);
  }
  for (Coord t = 1; t <= max_t; ++t) {
    buf = {x, y - t};
    visit(view);
  }
  const Coord total = rules.DiagonalCap();
  if (total < 2) return;
  for (Coord s = 1; s <= x && s < total; ++s) {
    for (Coord t = 1; t <= y && s + t <= total; ++t) {
      buf = {x - s, y - t};
      visit(view);
    }
  }
}

template <typename Visit>
void ForEachSingleHeapOption(std::span<const Coord> pos,
                             std::vector<Coord>& scratch, Visit& visit) {
  for (std::size_t i = 0; i < pos.size(); ++i) {
    for (Coord u = 0; u < pos[i]; ++u) {
      scratch[i] = u;
      visit(std::span<const Coord>(scratch));
    }
    scratch[i] = pos[i];
  }
}

// Every way to take t_i >= 1 from at least two heaps with sum(t_i) <= budget.
template <typename Visit>
void ForEachMultiHeapOption(std::span<const Coord> pos, std::size_t heap,
                            Coord budget, std::size_t chosen,
                            std::vector<Coord>& scratch, Visit& visit) {
  if (heap == pos.size()) {
    if (chosen >= 2) visit(std::span<const Coord>(scratch));
    return;
  }
  ForEachMultiHeapOption(pos, heap + 1, budget, chosen, scratch, visit);
  const Coord most = std::min(pos[heap], budget);
  for (Coord t = 1; t <= most; ++t) {
    scratch[heap] = pos[heap] - t;
    ForEachMultiHeapOption(pos, heap + 1, budget - t, chosen + 1, scratch,
                           visit);
  }
  scratch[heap] = pos[heap];
}

template <typename Visit>
void ForEachThreeDimOption(const RuleSet& rules, std::span<const Coord> pos,
                           std::vector<Coord>& scratch, Visit& visit) {
  ForEachSingleHeapOption(pos, scratch, visit);
  static constexpr std::array<std::array<std::size_t, 2>, 3> kPairs{
      {{0, 1}, {0, 2}, {1, 2}}};
  for (const auto& [a, b] : kPairs) {
    if (pos[a] == 0 || pos[b] == 0) continue;
    scratch[a] = pos[a] - 1;
    scratch[b] = pos[b] - 1;
    visit(std::span<const Coord>(scratch));
    scratch[a] = pos[a];
    scratch[b] = pos[b];
  }
  if (rules.variant() == Variant::kThreeDim && pos[0] > 0 && pos[1] > 0 &&
      pos[2] > 0) {
    for (std::size_t i = 0; i < 3; ++i) scratch[i] = pos[i] - 1;
    visit(std::span<const Coord>(scratch));
    for (std::size_t i = 0; i < 3; ++i) scratch[i] = pos[i];
  }
}

}  // namespace detail

// Calls `visit(std::span<const Coord>)` once per option of `pos`, in no
// particular order and without duplicates. The span is only valid for the
// duration of the call. Throws kContractViolation on a dimension mismatch
// and kWrongOperation for the pass variant.
template <typename Visit>
void ForEachOption(const RuleSet& rules, std::span<const Coord> pos,
                   Visit&& visit) {
  detail::CheckMoveArgs(rules, pos);
  switch (rules.variant()) {
    case Variant::kGeneralizedRyuo:
    case Variant::kRestrictedSide:
    case Variant::kRestrictedHV:
      detail::ForEachTwoHeapOption(rules, pos[0], pos[1], visit);
      return;
    case Variant::kThreeDim:
    case Variant::kModifiedThreeDim: {
      std::vector<Coord> scratch(pos.begin(), pos.end());
      detail::ForEachThreeDimOption(rules, pos, scratch, visit);
      return;
    }
    case Variant::kNDim: {
      std::vector<Coord> scratch(pos.begin(), pos.end());
      detail::ForEachSingleHeapOption(pos, scratch, visit);
      if (rules.DiagonalCap() >= 2) {
        detail::ForEachMultiHeapOption(pos, 0, rules.DiagonalCap(), 0,
                                       scratch, visit);
      }
      return;
    }
    case Variant::kPassRyuo:
      break;
  }
}

// The option set of `pos`, sorted lexicographically.
std::vector<Position> LegalMoves(const RuleSet& rules, const Position& pos);

// Options in the pass variant, sorted. Ordinary moves keep the pass flag; a
// position with the pass available also has the pass itself as an option,
// except at (0,0).
std::vector<PassPosition> LegalMovesPass(Coord p, const PassPosition& pos);

}  // namespace ryuo

#endif  // RYUO_MOVES_H_
