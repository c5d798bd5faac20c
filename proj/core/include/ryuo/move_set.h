#ifndef RYUO_MOVE_SET_H_
#define RYUO_MOVE_SET_H_

#include <array>
#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ryuo/position.h"
#include "ryuo/rules.h"

namespace ryuo {

// An amount (s, t) subtracted from a position (x, y).
struct Offset {
  Coord s = 0;
  Coord t = 0;

  std::string ToString() const;
  friend auto operator<=>(const Offset&, const Offset&) = default;
  friend bool operator==(const Offset&, const Offset&) = default;
};

// The set of offsets a piece may subtract from its position, so that
//   move((x,y)) = {(x-s, y-t) : (s,t) in M, s <= x, t <= y}.
// Unbounded families are kept symbolic; only Materialize() and the option
// enumeration expand them, always within a finite window.
class MoveSet {
 public:
  // {k * step : 1 <= k <= max_multiple}, unbounded when max_multiple is empty.
  struct Ray {
    Offset step;
    std::optional<Coord> max_multiple;
    friend bool operator==(const Ray&, const Ray&) = default;
  };

  MoveSet() = default;

  static MoveSet Rook();
  static MoveSet Queen();
  // The piece of a two-dimensional variant. Throws kUnsupportedVariant for
  // the pass variant and the 3-D/n-D variants.
  static MoveSet ForRules(const RuleSet& rules);

  MoveSet& AddRay(Offset step, std::optional<Coord> max_multiple = {});
  // Adds {(s,t) : s,t >= 1, s+t <= max_total}.
  MoveSet& AddDiagonalBlock(Coord max_total);
  MoveSet& Add(Offset offset);
  MoveSet& Remove(Offset offset);

  MoveSet Without(Offset offset) const;

  // Symbolic membership; never expands a ray.
  bool Contains(Offset offset) const;
  // Whether the whole unbounded ray {k * step : k >= 1} is contained.
  bool ContainsRay(Offset step) const;

  // Every offset with s <= max_s and t <= max_t, sorted.
  std::vector<Offset> Materialize(Coord max_s, Coord max_t) const;

  // Options of (x, y), sorted and distinct.
  std::vector<Position> Moves(Coord x, Coord y) const;

  // Like Moves() but unsorted; may repeat an option reachable through two
  // components (harmless for mex).
  template <typename Visit>
  void ForEachOption(Coord x, Coord y, Visit&& visit) const;

 private:
  template <typename Visit>
  void ForEachCandidate(Coord x, Coord y, Visit& visit) const;
  bool Excluded(Offset offset) const;

  std::vector<Ray> rays_;
  Coord block_total_ = 0;
  std::vector<Offset> extra_;
  std::vector<Offset> excluded_;
};

// True iff m contains both axis rays and every (s,t) with 1 <= s+t <= p-1:
// the offsets any piece needs for its Grundy numbers to follow the
// generalized formula with parameter p.
bool SatisfiesNecessaryCondition(const MoveSet& m, Coord p);

template <typename Visit>
void MoveSet::ForEachCandidate(Coord x, Coord y, Visit& visit) const {
  for (const Ray& ray : rays_) {
    for (Coord k = 1;; ++k) {
      if (ray.max_multiple && k > *ray.max_multiple) break;
      if (ray.step.s * k > x || ray.step.t * k > y) break;
      visit(Offset{ray.step.s * k, ray.step.t * k});
    }
  }
  for (Coord s = 1; s <= x && s < block_total_; ++s) {
    for (Coord t = 1; t <= y && s + t <= block_total_; ++t) {
      visit(Offset{s, t});
    }
  }
  for (const Offset& o : extra_) {
    if (o.s <= x && o.t <= y) visit(o);
  }
}

template <typename Visit>
void MoveSet::ForEachOption(Coord x, Coord y, Visit&& visit) const {
  auto emit = [&](Offset o) {
    if (Excluded(o)) return;
    const std::array<Coord, 2> option{x - o.s, y - o.t};
    visit(std::span<const Coord>(option));
  };
  ForEachCandidate(x, y, emit);
}

}  // namespace ryuo

#endif  // RYUO_MOVE_SET_H_
