#include "ryuo/oracle.h"

#include <vector>

#include "ryuo/error.h"
#include "ryuo/mex.h"
#include "ryuo/moves.h"

namespace ryuo {
namespace {

// Odometer step in rank order (last axis fastest).
void Advance(std::vector<Coord>& pos, const Region& region) {
  for (std::size_t i = pos.size(); i-- > 0;) {
    if (pos[i] < region.max(i)) {
      ++pos[i];
      return;
    }
    pos[i] = 0;
  }
}

// `generate(pos, emit)` must call emit(span) for every option of pos.
template <typename Generate>
GrundyTable BuildTable(const Region& region, Generate&& generate) {
  std::vector<GrundyValue> values(region.cell_count());
  std::vector<Coord> pos(region.dimension(), 0);
  MexScratch scratch;
  for (std::size_t index = 0; index < values.size(); ++index) {
    scratch.Clear();
    generate(std::span<const Coord>(pos), [&](std::span<const Coord> option) {
      scratch.Insert(values[region.IndexOfUnchecked(option)]);
    });
    values[index] = scratch.Mex();
    Advance(pos, region);
  }
  return GrundyTable(region, std::move(values));
}

template <typename Generate>
std::optional<Position> FirstInconsistent(const GrundyTable& table,
                                          Generate&& generate) {
  const Region& region = table.region();
  std::vector<GrundyValue> option_values;
  for (std::size_t index = 0; index < region.cell_count(); ++index) {
    const Position pos = region.PositionAt(index);
    option_values.clear();
    generate(pos.coords(), [&](std::span<const Coord> option) {
      option_values.push_back(table.at(option));
    });
    if (Mex(option_values) != table.at_index(index)) return pos;
  }
  return std::nullopt;
}

void RequireTwoDimensional(const Region& region) {
  if (region.dimension() != 2) {
    throw GameError(ErrorKind::kContractViolation,
                    "move-set tables are two-dimensional");
  }
}

}  // namespace

GrundyTable BuildGrundyTable(const RuleSet& rules, const Region& region) {
  if (region.dimension() != rules.dimension()) {
    throw GameError(ErrorKind::kContractViolation,
                    "region " + region.ToString() + " does not match " +
                        rules.ToString());
  }
  return BuildTable(region, [&](std::span<const Coord> pos, auto&& emit) {
    ForEachOption(rules, pos, emit);
  });
}

GrundyTable BuildGrundyTable(const MoveSet& moves, const Region& region) {
  RequireTwoDimensional(region);
  return BuildTable(region, [&](std::span<const Coord> pos, auto&& emit) {
    moves.ForEachOption(pos[0], pos[1], emit);
  });
}

GrundyValue GrundyBruteForce(const RuleSet& rules, const Position& pos) {
  return BuildGrundyTable(rules, Region::Enclosing(pos)).at(pos);
}

GrundyValue GrundyBruteForce(const GrundyTable& cache, const Position& pos) {
  return cache.at(pos);
}

GrundyValue GrundyCustomMoveSet(const MoveSet& moves, const Position& pos) {
  return BuildGrundyTable(moves, Region::Enclosing(pos)).at(pos);
}

std::optional<Position> FindInconsistentEntry(const RuleSet& rules,
                                              const GrundyTable& table) {
  return FirstInconsistent(table, [&](std::span<const Coord> pos, auto&& emit) {
    ForEachOption(rules, pos, emit);
  });
}

std::optional<Position> FindInconsistentEntry(const MoveSet& moves,
                                              const GrundyTable& table) {
  RequireTwoDimensional(table.region());
  return FirstInconsistent(table, [&](std::span<const Coord> pos, auto&& emit) {
    moves.ForEachOption(pos[0], pos[1], emit);
  });
}

}  // namespace ryuo
