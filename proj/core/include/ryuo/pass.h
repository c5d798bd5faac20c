#ifndef RYUO_PASS_H_
#define RYUO_PASS_H_

#include <vector>

#include "ryuo/grundy_table.h"
#include "ryuo/position.h"
#include "ryuo/region.h"
#include "ryuo/verification.h"

// The generalized two-heap game with a one-time pass, usable by either
// player but never from (0,0).
namespace ryuo {

// Arithmetic P/N membership test, with (0,0,true) counted as P. Valid for
// p >= 3; throws kNoClosedForm for p < 3, where the P-set description does
// not match play.
Outcome ClassifyPass(Coord p, const PassPosition& pos);

class PassOutcomeTable {
 public:
  PassOutcomeTable(Coord p, Region region, std::vector<Outcome> without_pass,
                   std::vector<Outcome> with_pass);

  Coord p() const { return p_; }
  const Region& region() const { return region_; }
  // Throws kRegion outside the region.
  Outcome at(const PassPosition& pos) const;

 private:
  Coord p_;
  Region region_;
  std::vector<Outcome> without_pass_;
  std::vector<Outcome> with_pass_;
};

// Win/loss labelling by backward induction over the (x,y,pass) DAG: the
// pass=false layer first, then pass=true. Uses only the move rules.
PassOutcomeTable OutcomeBackwardInduction(Coord p, const Region& region);

// ClassifyPass vs OutcomeBackwardInduction on both layers.
VerificationReport VerifyPassTheorem(Coord p, const Region& region);

// Oracle Grundy values of one pass layer, for display.
GrundyTable PassGrundyTable(Coord p, const Region& region, bool pass_layer);

}  // namespace ryuo

#endif  // RYUO_PASS_H_
