#include "ryuo/move_set.h"

#include <algorithm>

#include "ryuo/error.h"

namespace ryuo {
namespace {

bool OnRay(const MoveSet::Ray& ray, Offset o) {
  const Offset step = ray.step;
  // Multiples k*step with k >= 1: the zero component must match and the
  // non-zero components must share the same k.
  std::optional<Coord> k;
  for (const auto& [delta, unit] :
       {std::pair{o.s, step.s}, std::pair{o.t, step.t}}) {
    if (unit == 0) {
      if (delta != 0) return false;
      continue;
    }
    if (delta % unit != 0) return false;
    const Coord multiple = delta / unit;
    if (k && *k != multiple) return false;
    k = multiple;
  }
  if (!k || *k == 0) return false;
  return !ray.max_multiple || *k <= *ray.max_multiple;
}

}  // namespace

std::string Offset::ToString() const {
  return "(" + std::to_string(s) + "," + std::to_string(t) + ")";
}

MoveSet MoveSet::Rook() {
  MoveSet m;
  m.AddRay({1, 0}).AddRay({0, 1});
  return m;
}

MoveSet MoveSet::Queen() {
  MoveSet m = Rook();
  m.AddRay({1, 1});
  return m;
}

MoveSet MoveSet::ForRules(const RuleSet& rules) {
  MoveSet m;
  switch (rules.variant()) {
    case Variant::kGeneralizedRyuo:
    case Variant::kRestrictedSide:
    case Variant::kRestrictedHV:
      m.AddRay({1, 0}, rules.AxisCap(0));
      m.AddRay({0, 1}, rules.AxisCap(1));
      m.AddDiagonalBlock(rules.DiagonalCap());
      return m;
    case Variant::kNDim:
      if (rules.dimension() == 2) {
        m.AddRay({1, 0}).AddRay({0, 1}).AddDiagonalBlock(rules.DiagonalCap());
        return m;
      }
      break;
    default:
      break;
  }
  throw GameError(ErrorKind::kUnsupportedVariant,
                  "move sets are defined for two-dimensional variants only, "
                  "not " + rules.ToString());
}

MoveSet& MoveSet::AddRay(Offset step, std::optional<Coord> max_multiple) {
  if (step.s == 0 && step.t == 0) {
    throw GameError(ErrorKind::kContractViolation, "zero ray step");
  }
  rays_.push_back(Ray{step, max_multiple});
  return *this;
}

MoveSet& MoveSet::AddDiagonalBlock(Coord max_total) {
  block_total_ = std::max(block_total_, max_total);
  return *this;
}

MoveSet& MoveSet::Add(Offset offset) {
  if (offset.s == 0 && offset.t == 0) {
    throw GameError(ErrorKind::kContractViolation,
                    "the zero offset is never a move");
  }
  std::erase(excluded_, offset);
  if (!Contains(offset)) extra_.push_back(offset);
  return *this;
}

MoveSet& MoveSet::Remove(Offset offset) {
  std::erase(extra_, offset);
  if (Contains(offset)) excluded_.push_back(offset);
  return *this;
}

MoveSet MoveSet::Without(Offset offset) const {
  MoveSet copy = *this;
  copy.Remove(offset);
  return copy;
}

bool MoveSet::Excluded(Offset offset) const {
  return std::find(excluded_.begin(), excluded_.end(), offset) !=
         excluded_.end();
}

bool MoveSet::Contains(Offset offset) const {
  if (offset.s == 0 && offset.t == 0) return false;
  if (Excluded(offset)) return false;
  if (std::find(extra_.begin(), extra_.end(), offset) != extra_.end()) {
    return true;
  }
  if (offset.s >= 1 && offset.t >= 1 && offset.s + offset.t <= block_total_) {
    return true;
  }
  return std::any_of(rays_.begin(), rays_.end(),
                     [&](const Ray& ray) { return OnRay(ray, offset); });
}

bool MoveSet::ContainsRay(Offset step) const {
  // A ray is unbounded only if some unbounded component covers every
  // multiple: an unbounded ray whose step divides `step`.
  const bool covered = std::any_of(rays_.begin(), rays_.end(), [&](const Ray& ray) {
    return !ray.max_multiple && OnRay(ray, step);
  });
  if (!covered) return false;
  return std::none_of(excluded_.begin(), excluded_.end(), [&](Offset o) {
    return OnRay(Ray{step, std::nullopt}, o);
  });
}

std::vector<Offset> MoveSet::Materialize(Coord max_s, Coord max_t) const {
  std::vector<Offset> out;
  auto keep = [&](Offset o) {
    if (!Excluded(o)) out.push_back(o);
  };
  ForEachCandidate(max_s, max_t, keep);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Position> MoveSet::Moves(Coord x, Coord y) const {
  std::vector<Position> out;
  ForEachOption(x, y, [&](std::span<const Coord> option) {
    out.emplace_back(option);
  });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool SatisfiesNecessaryCondition(const MoveSet& m, Coord p) {
  if (!m.ContainsRay({1, 0}) || !m.ContainsRay({0, 1})) return false;
  for (Coord s = 0; s < p; ++s) {
    for (Coord t = 0; s + t < p; ++t) {
      if (s + t == 0) continue;
      if (!m.Contains({s, t})) return false;
    }
  }
  return true;
}

}  // namespace ryuo
