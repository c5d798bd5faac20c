#include "ryuo/rules.h"

#include <array>
#include <utility>

#include "ryuo/error.h"

namespace ryuo {
namespace {

constexpr std::array<std::pair<Variant, std::string_view>, 7> kWireNames{{
    {Variant::kGeneralizedRyuo, "ryuo"},
    {Variant::kPassRyuo, "pass-ryuo"},
    {Variant::kRestrictedSide, "restricted-side"},
    {Variant::kRestrictedHV, "restricted-hv"},
    {Variant::kThreeDim, "3dim"},
    {Variant::kModifiedThreeDim, "3dim-modified"},
    {Variant::kNDim, "ndim"},
}};

void Require(bool condition, const std::string& message) {
  if (!condition) throw GameError(ErrorKind::kInvalidRules, message);
}

}  // namespace

std::string_view WireName(Variant variant) {
  for (const auto& [v, name] : kWireNames) {
    if (v == variant) return name;
  }
  return "unknown";
}

std::optional<Variant> ParseVariant(std::string_view name) {
  for (const auto& [v, wire] : kWireNames) {
    if (wire == name) return v;
  }
  return std::nullopt;
}

RuleSet::RuleSet(Variant variant, Coord p, Coord q, Coord r,
                 std::size_t dimension, SideReading reading)
    : variant_(variant),
      p_(p),
      q_(q),
      r_(r),
      dimension_(dimension),
      reading_(reading) {}

RuleSet RuleSet::GeneralizedRyuo(Coord p) {
  Require(p >= 1, "p must be at least 1");
  return RuleSet(Variant::kGeneralizedRyuo, p, 0, 0, 2,
                 SideReading::kExclusive);
}

RuleSet RuleSet::PassRyuo(Coord p) {
  Require(p >= 1, "p must be at least 1");
  return RuleSet(Variant::kPassRyuo, p, 0, 0, 2, SideReading::kExclusive);
}

RuleSet RuleSet::RestrictedSide(Coord p, Coord q, SideReading reading) {
  Require(p >= 1, "p must be at least 1");
  Require(q > 1, "q must be greater than 1");
  return RuleSet(Variant::kRestrictedSide, p, q, 0, 2, reading);
}

RuleSet RuleSet::RestrictedHV(Coord p, Coord q, Coord r, SideReading reading) {
  Require(p >= 1, "p must be at least 1");
  Require(q > 1, "q must be greater than 1");
  Require(r > 1, "r must be greater than 1");
  return RuleSet(Variant::kRestrictedHV, p, q, r, 2, reading);
}

RuleSet RuleSet::ThreeDim() {
  return RuleSet(Variant::kThreeDim, 0, 0, 0, 3, SideReading::kExclusive);
}

RuleSet RuleSet::ModifiedThreeDim() {
  return RuleSet(Variant::kModifiedThreeDim, 0, 0, 0, 3,
                 SideReading::kExclusive);
}

RuleSet RuleSet::NDim(Coord p, std::size_t n) {
  Require(p >= 1, "p must be at least 1");
  Require(n >= 2, "n must be at least 2");
  return RuleSet(Variant::kNDim, p, 0, 0, n, SideReading::kExclusive);
}

std::optional<Coord> RuleSet::AxisCap(std::size_t axis) const {
  const Coord slack = reading_ == SideReading::kLiteral ? 0 : 1;
  switch (variant_) {
    case Variant::kRestrictedSide:
      return q_ - slack;
    case Variant::kRestrictedHV:
      return (axis == 0 ? q_ : r_) - slack;
    default:
      return std::nullopt;
  }
}

Coord RuleSet::DiagonalCap() const {
  switch (variant_) {
    case Variant::kThreeDim:
    case Variant::kModifiedThreeDim:
      return 0;
    default:
      return reading_ == SideReading::kLiteral ? p_ : p_ - 1;
  }
}

bool RuleSet::IsSymmetric() const {
  switch (variant_) {
    case Variant::kRestrictedHV:
      return q_ == r_;
    default:
      return true;
  }
}

std::string RuleSet::ToString() const {
  std::string out(WireName(variant_));
  const auto num = [](Coord v) { return std::to_string(v); };
  switch (variant_) {
    case Variant::kGeneralizedRyuo:
    case Variant::kPassRyuo:
      out += "(p=" + num(p_) + ")";
      break;
    case Variant::kRestrictedSide:
      out += "(p=" + num(p_) + ",q=" + num(q_);
      if (reading_ == SideReading::kLiteral) out += ",literal";
      out += ")";
      break;
    case Variant::kRestrictedHV:
      out += "(p=" + num(p_) + ",q=" + num(q_) + ",r=" + num(r_);
      if (reading_ == SideReading::kLiteral) out += ",literal";
      out += ")";
      break;
    case Variant::kNDim:
      out += "(p=" + num(p_) + ",n=" + num(dimension_) + ")";
      break;
    case Variant::kThreeDim:
    case Variant::kModifiedThreeDim:
      break;
  }
  return out;
}

}  // namespace ryuo
