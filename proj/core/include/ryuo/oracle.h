#ifndef RYUO_ORACLE_H_
#define RYUO_ORACLE_H_

#include <optional>

#include "ryuo/grundy_table.h"
#include "ryuo/move_set.h"
#include "ryuo/position.h"
#include "ryuo/region.h"
#include "ryuo/rules.h"

// Brute-force Sprague-Grundy evaluation: G(pos) = mex of G over the options.
// Works from the move rules alone and never touches the closed forms, so it
// can serve as ground truth for them.
namespace ryuo {

// Bottom-up over the region in rank order.
GrundyTable BuildGrundyTable(const RuleSet& rules, const Region& region);
// Options generated from an arbitrary two-dimensional move set.
GrundyTable BuildGrundyTable(const MoveSet& moves, const Region& region);

// Builds the smallest enclosing table and reads `pos` from it.
GrundyValue GrundyBruteForce(const RuleSet& rules, const Position& pos);
// Reads from a prebuilt table; throws kRegion outside it.
GrundyValue GrundyBruteForce(const GrundyTable& cache, const Position& pos);

GrundyValue GrundyCustomMoveSet(const MoveSet& moves, const Position& pos);

// Independent re-check of a filled table: the first position whose entry is
// not the mex of its options' entries, if any.
std::optional<Position> FindInconsistentEntry(const RuleSet& rules,
                                              const GrundyTable& table);
std::optional<Position> FindInconsistentEntry(const MoveSet& moves,
                                              const GrundyTable& table);

}  // namespace ryuo

#endif  // RYUO_ORACLE_H_
