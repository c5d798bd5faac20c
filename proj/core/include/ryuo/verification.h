#ifndef RYUO_VERIFICATION_H_
#define RYUO_VERIFICATION_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ryuo/move_set.h"
#include "ryuo/position.h"
#include "ryuo/region.h"
#include "ryuo/rules.h"

namespace ryuo {

// One disagreement between the oracle and a formula. Outcome comparisons
// encode P as 0 and N as 1. `pass` is set only for pass-variant states.
struct Mismatch {
  std::vector<Coord> coords;
  std::optional<bool> pass;
  GrundyValue oracle = 0;
  GrundyValue formula = 0;

  friend bool operator==(const Mismatch&, const Mismatch&) = default;
};

// Mismatches are listed in lexicographic state order.
struct VerificationReport {
  std::string subject;
  Region region{std::vector<Coord>{0}};
  std::uint64_t positions_checked = 0;
  std::vector<Mismatch> mismatches;

  bool ok() const { return mismatches.empty(); }
  std::uint64_t matches() const {
    return positions_checked - mismatches.size();
  }
};

// Oracle vs GrundyClosedForm at every cell. Throws kNoClosedForm.
VerificationReport VerifyEquivalence(const RuleSet& rules,
                                     const Region& region);

// Oracle for an arbitrary piece vs the generalized formula with parameter p.
VerificationReport VerifyEquivalence(const MoveSet& moves, Coord p,
                                     const Region& region);

// 3-D P-position theorem vs the zero set of the ThreeDim oracle.
VerificationReport VerifyThreeDimPPositions(const Region& region);

// Two rule sets' oracles compared cell by cell (e.g. NDim(3,3) against
// ModifiedThreeDim). `formula` holds the second rule set's value.
VerificationReport VerifyOracleAgreement(const RuleSet& first,
                                         const RuleSet& second,
                                         const Region& region);

struct Witness {
  Position position;
  GrundyValue oracle = 0;
  GrundyValue formula = 0;
};

// Drops `dropped` from the generalized piece for p and returns the first
// position of the (p+2)x(p+2) window, in lexicographic order, where the
// reduced piece's oracle disagrees with the generalized formula. Throws
// kContractViolation when `dropped` is not a required offset (a unit axis
// step or 1 <= s+t <= p-1), and kCounterexample when no witness exists.
Witness NecessaryConditionWitness(Coord p, Offset dropped);

}  // namespace ryuo

#endif  // RYUO_VERIFICATION_H_
