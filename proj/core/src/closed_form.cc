#include "ryuo/closed_form.h"

#include <array>

#include "ryuo/error.h"

namespace ryuo {
namespace {

void CheckDimension(const RuleSet& rules, const Position& pos) {
  if (pos.dimension() != rules.dimension()) {
    throw GameError(ErrorKind::kContractViolation,
                    rules.ToString() + " expects " +
                        std::to_string(rules.dimension()) +
                        " coordinates, got " + pos.ToString());
  }
}

// Restricted formula on the residues (x mod q, y mod r).
GrundyValue ResidueFormula(Coord p, Coord x_mod, Coord y_mod) {
  const std::array<Coord, 2> residues{x_mod, y_mod};
  return CongruenceNimFormula(p, residues);
}

}  // namespace

bool HasClosedForm(const RuleSet& rules) {
  switch (rules.variant()) {
    case Variant::kGeneralizedRyuo:
    case Variant::kModifiedThreeDim:
    case Variant::kNDim:
      return true;
    case Variant::kRestrictedSide: {
      const Coord m = rules.q() % rules.p();
      return m == 0 || m == 1;
    }
    case Variant::kRestrictedHV:
      return rules.q() % rules.p() == 0 && rules.r() % rules.p() == 0;
    case Variant::kPassRyuo:
    case Variant::kThreeDim:
      return false;
  }
  return false;
}

GrundyValue CongruenceNimFormula(Coord p, std::span<const Coord> heaps) {
  Coord sum = 0;
  Coord quotients = 0;
  for (Coord h : heaps) {
    sum = CheckedAdd(sum, h);
    quotients ^= h / p;
  }
  return CheckedAdd(sum % p, CheckedMul(p, quotients));
}

GrundyValue GrundyClosedForm(const RuleSet& rules, const Position& pos) {
  if (!HasClosedForm(rules)) {
    throw GameError(ErrorKind::kNoClosedForm,
                    "no closed form for " + rules.ToString());
  }
  CheckDimension(rules, pos);
  switch (rules.variant()) {
    case Variant::kModifiedThreeDim:
      return CongruenceNimFormula(3, pos.coords());
    case Variant::kRestrictedSide: {
      const Coord q = rules.q();
      const Coord x = pos[0];
      const Coord y = pos[1];
      if (q % rules.p() == 1 && x % q == 0 && y % q == 0 &&
          x != 0 && y != 0) {
        return q;
      }
      return ResidueFormula(rules.p(), x % q, y % q);
    }
    case Variant::kRestrictedHV:
      return ResidueFormula(rules.p(), pos[0] % rules.q(), pos[1] % rules.r());
    default:
      return CongruenceNimFormula(rules.p(), pos.coords());
  }
}

bool ThreeDimIsPPosition(const Position& pos) {
  if (pos.dimension() != 3) {
    throw GameError(ErrorKind::kContractViolation,
                    "3dim positions have three coordinates, got " +
                        pos.ToString());
  }
  if (pos.Sum() % 3 != 0) return false;
  const Coord thirds = (pos[0] / 3) ^ (pos[1] / 3) ^ (pos[2] / 3);
  const bool all_one =
      pos[0] % 3 == 1 && pos[1] % 3 == 1 && pos[2] % 3 == 1;
  return all_one ? (thirds ^ 1) == 0 : thirds == 0;
}

}  // namespace ryuo
