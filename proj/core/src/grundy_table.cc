#include "ryuo/grundy_table.h"

#include "ryuo/error.h"

namespace ryuo {

GrundyTable::GrundyTable(Region region, std::vector<GrundyValue> values)
    : region_(std::move(region)), values_(std::move(values)) {
  if (values_.size() != region_.cell_count()) {
    throw GameError(ErrorKind::kContractViolation,
                    "table needs exactly one value per cell");
  }
}

GrundyValue GrundyTable::at(std::span<const Coord> pos) const {
  return values_[region_.IndexOf(pos)];
}

}  // namespace ryuo
