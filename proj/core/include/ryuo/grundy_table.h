#ifndef RYUO_GRUNDY_TABLE_H_
#define RYUO_GRUNDY_TABLE_H_

#include <cstddef>
#include <span>
#include <vector>

#include "ryuo/position.h"
#include "ryuo/region.h"

namespace ryuo {

// Dense Grundy values over a region, one per cell in rank order. Immutable
// once built.
class GrundyTable {
 public:
  GrundyTable(Region region, std::vector<GrundyValue> values);

  const Region& region() const { return region_; }
  std::span<const GrundyValue> values() const { return values_; }

  // Throws kRegion outside the region.
  GrundyValue at(std::span<const Coord> pos) const;
  GrundyValue at(const Position& pos) const { return at(pos.coords()); }
  GrundyValue at_index(std::size_t index) const { return values_[index]; }

 private:
  Region region_;
  std::vector<GrundyValue> values_;
};

}  // namespace ryuo

#endif  // RYUO_GRUNDY_TABLE_H_
