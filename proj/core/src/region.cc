#include "ryuo/region.h"

#include "ryuo/error.h"

namespace ryuo {

Region::Region(std::vector<Coord> maxima) : maxima_(std::move(maxima)) {
  if (maxima_.empty()) {
    throw GameError(ErrorKind::kRegion, "a region needs at least one axis");
  }
  cells_ = 1;
  for (Coord m : maxima_) {
    const Coord width = m + 1;
    if (width == 0 || width > kMaxCells || cells_ > kMaxCells / width) {
      throw GameError(ErrorKind::kRegion,
                      "region " + ToString() + " exceeds " +
                          std::to_string(kMaxCells) + " cells");
    }
    cells_ *= width;
  }
}

Region Region::Cube(std::size_t dimension, Coord max) {
  return Region(std::vector<Coord>(dimension, max));
}

Region Region::Enclosing(const Position& pos) {
  return Region(std::vector<Coord>(pos.coords().begin(), pos.coords().end()));
}

bool Region::Contains(std::span<const Coord> pos) const {
  if (pos.size() != maxima_.size()) return false;
  for (std::size_t i = 0; i < pos.size(); ++i) {
    if (pos[i] > maxima_[i]) return false;
  }
  return true;
}

std::size_t Region::IndexOf(std::span<const Coord> pos) const {
  if (!Contains(pos)) {
    throw GameError(ErrorKind::kRegion, Position(pos).ToString() +
                                            " lies outside region " +
                                            ToString());
  }
  return IndexOfUnchecked(pos);
}

Position Region::PositionAt(std::size_t index) const {
  std::vector<Coord> coords(maxima_.size());
  for (std::size_t i = maxima_.size(); i-- > 0;) {
    const Coord width = maxima_[i] + 1;
    coords[i] = index % width;
    index /= width;
  }
  return Position(std::move(coords));
}

std::string Region::ToString() const {
  std::string out;
  for (std::size_t i = 0; i < maxima_.size(); ++i) {
    if (i > 0) out += 'x';
    out += "[0," + std::to_string(maxima_[i]) + "]";
  }
  return out;
}

}  // namespace ryuo
