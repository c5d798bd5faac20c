#ifndef RYUO_CLOSED_FORM_H_
#define RYUO_CLOSED_FORM_H_

#include <span>

#include "ryuo/position.h"
#include "ryuo/rules.h"

namespace ryuo {

// Whether GrundyClosedForm() is defined for these rules. False for the pass
// variant, for ThreeDim, and for restricted parameters outside the known
// cases (side cap q with q mod p in {0,1}; horizontal/vertical caps q, r
// with q mod p = r mod p = 0).
bool HasClosedForm(const RuleSet& rules);

// Exact Grundy value in O(dimension). Throws kNoClosedForm when
// HasClosedForm() is false, kContractViolation on a dimension mismatch and
// kOverflow when the coordinate sum does not fit.
GrundyValue GrundyClosedForm(const RuleSet& rules, const Position& pos);

// (x_1 + ... + x_n) mod p + p * (floor(x_1/p) ^ ... ^ floor(x_n/p)).
GrundyValue CongruenceNimFormula(Coord p, std::span<const Coord> heaps);

// P-positions of the 3-D game with the all-three move: the sum is divisible
// by 3 and the XOR of the thirds is 0, or 1 when every heap is 1 mod 3.
bool ThreeDimIsPPosition(const Position& pos);

}  // namespace ryuo

#endif  // RYUO_CLOSED_FORM_H_
