#include "ryuo/position.h"

#include <algorithm>

#include "ryuo/error.h"

namespace ryuo {

Position::Position(std::vector<Coord> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) {
    throw GameError(ErrorKind::kContractViolation,
                    "a position needs at least one coordinate");
  }
}

Position::Position(std::initializer_list<Coord> coords)
    : Position(std::vector<Coord>(coords)) {}

Position::Position(std::span<const Coord> coords)
    : Position(std::vector<Coord>(coords.begin(), coords.end())) {}

Coord Position::Sum() const {
  Coord total = 0;
  for (Coord c : coords_) total = CheckedAdd(total, c);
  return total;
}

bool Position::IsTerminal() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](Coord c) { return c == 0; });
}

std::string Position::ToString() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(coords_[i]);
  }
  out += ')';
  return out;
}

std::string PassPosition::ToString() const {
  return "(" + std::to_string(x) + "," + std::to_string(y) + "," +
         (pass ? "true" : "false") + ")";
}

std::string_view ToString(Outcome outcome) {
  return outcome == Outcome::kP ? "P" : "N";
}

Coord CheckedAdd(Coord a, Coord b) {
  Coord out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw GameError(ErrorKind::kOverflow, "coordinate sum overflows");
  }
  return out;
}

Coord CheckedMul(Coord a, Coord b) {
  Coord out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw GameError(ErrorKind::kOverflow, "Grundy value overflows");
  }
  return out;
}

}  // namespace ryuo
