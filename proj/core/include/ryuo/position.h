#ifndef RYUO_POSITION_H_
#define RYUO_POSITION_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace ryuo {

using Coord = std::uint64_t;
using GrundyValue = std::uint64_t;

// Heap sizes, or equivalently board coordinates measured from the upper-left
// corner. Ordered lexicographically.
class Position {
 public:
  Position() = default;
  explicit Position(std::vector<Coord> coords);
  Position(std::initializer_list<Coord> coords);
  explicit Position(std::span<const Coord> coords);

  std::size_t dimension() const { return coords_.size(); }
  Coord operator[](std::size_t i) const { return coords_[i]; }
  std::span<const Coord> coords() const { return coords_; }

  // Throws kOverflow if the sum does not fit in a Coord.
  Coord Sum() const;
  bool IsTerminal() const;
  std::string ToString() const;

  friend auto operator<=>(const Position&, const Position&) = default;
  friend bool operator==(const Position&, const Position&) = default;

 private:
  std::vector<Coord> coords_;
};

// A two-heap position of the pass variant. `pass` is true while the one-time
// pass is still available. Orders by (x, y, pass) with false < true.
struct PassPosition {
  Coord x = 0;
  Coord y = 0;
  bool pass = false;

  bool IsTerminal() const { return x == 0 && y == 0; }
  std::string ToString() const;

  friend auto operator<=>(const PassPosition&, const PassPosition&) = default;
  friend bool operator==(const PassPosition&, const PassPosition&) = default;
};

enum class Outcome { kP, kN };

std::string_view ToString(Outcome outcome);

// Checked helpers shared by the closed forms.
Coord CheckedAdd(Coord a, Coord b);
Coord CheckedMul(Coord a, Coord b);

}  // namespace ryuo

#endif  // RYUO_POSITION_H_
