#ifndef RYUO_MEX_H_
#define RYUO_MEX_H_

#include <span>
#include <vector>

#include "ryuo/position.h"

namespace ryuo {

// Least non-negative integer not in `values`. Repeats are allowed.
GrundyValue Mex(std::span<const GrundyValue> values);

// XOR fold; 0 for an empty list.
GrundyValue NimSum(std::span<const GrundyValue> values);

// Reusable buffers for computing many mex values in a row. The mex of n
// values is at most n, so anything larger is ignored on insertion.
class MexScratch {
 public:
  void Clear() { values_.clear(); }
  void Insert(GrundyValue v) { values_.push_back(v); }
  GrundyValue Mex();

 private:
  std::vector<GrundyValue> values_;
  std::vector<unsigned char> seen_;
};

}  // namespace ryuo

#endif  // RYUO_MEX_H_
