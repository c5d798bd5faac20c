#ifndef RYUO_REGION_H_
#define RYUO_REGION_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "ryuo/position.h"

namespace ryuo {

// Analysis window [0, max_0] x ... x [0, max_{n-1}]. Cells are ranked
// lexicographically (last axis fastest); every option of a position has a
// smaller rank, since moves never increase a coordinate.
class Region {
 public:
  static constexpr std::size_t kMaxCells = std::size_t{1} << 25;

  // Throws kRegion when empty or larger than kMaxCells.
  explicit Region(std::vector<Coord> maxima);

  static Region Cube(std::size_t dimension, Coord max);
  // Smallest region containing `pos`.
  static Region Enclosing(const Position& pos);

  std::size_t dimension() const { return maxima_.size(); }
  Coord max(std::size_t axis) const { return maxima_[axis]; }
  std::span<const Coord> maxima() const { return maxima_; }
  std::size_t cell_count() const { return cells_; }

  bool Contains(std::span<const Coord> pos) const;
  // Throws kRegion outside the region.
  std::size_t IndexOf(std::span<const Coord> pos) const;
  std::size_t IndexOfUnchecked(std::span<const Coord> pos) const {
    std::size_t index = 0;
    for (std::size_t i = 0; i < maxima_.size(); ++i) {
      index = index * (maxima_[i] + 1) + pos[i];
    }
    return index;
  }
  Position PositionAt(std::size_t index) const;

  // "[0,17]x[0,19]"
  std::string ToString() const;

  friend bool operator==(const Region&, const Region&) = default;

 private:
  std::vector<Coord> maxima_;
  std::size_t cells_ = 0;
};

}  // namespace ryuo

#endif  // RYUO_REGION_H_
