#include "ryuo/mex.h"

#include <algorithm>

namespace ryuo {

GrundyValue Mex(std::span<const GrundyValue> values) {
  std::vector<unsigned char> seen(values.size() + 1, 0);
  for (GrundyValue v : values) {
    if (v < seen.size()) seen[v] = 1;
  }
  return static_cast<GrundyValue>(
      std::find(seen.begin(), seen.end(), 0) - seen.begin());
}

GrundyValue NimSum(std::span<const GrundyValue> values) {
  GrundyValue out = 0;
  for (GrundyValue v : values) out ^= v;
  return out;
}

GrundyValue MexScratch::Mex() {
  seen_.assign(values_.size() + 1, 0);
  for (GrundyValue v : values_) {
    if (v < seen_.size()) seen_[v] = 1;
  }
  return static_cast<GrundyValue>(
      std::find(seen_.begin(), seen_.end(), 0) - seen_.begin());
}

}  // namespace ryuo
