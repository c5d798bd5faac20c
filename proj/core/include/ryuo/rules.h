#ifndef RYUO_RULES_H_
#define RYUO_RULES_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "ryuo/position.h"

namespace ryuo {

enum class Variant {
  kGeneralizedRyuo,
  kPassRyuo,
  kRestrictedSide,
  kRestrictedHV,
  kThreeDim,
  kModifiedThreeDim,
  kNDim,
};

// How the restricted variants bound their moves. kExclusive is the reading
// under which the restricted Grundy formulas hold: one heap loses 1..q-1, two
// heaps lose s,t >= 1 with s+t <= p-1. kLiteral (1..q and s+t <= p) exists
// only as a negative control.
enum class SideReading { kExclusive, kLiteral };

// Wire name used by the CLI and the HTTP API ("ryuo", "pass-ryuo", ...).
std::string_view WireName(Variant variant);
std::optional<Variant> ParseVariant(std::string_view name);

class RuleSet {
 public:
  static RuleSet GeneralizedRyuo(Coord p);
  static RuleSet PassRyuo(Coord p);
  static RuleSet RestrictedSide(Coord p, Coord q,
                                SideReading reading = SideReading::kExclusive);
  static RuleSet RestrictedHV(Coord p, Coord q, Coord r,
                              SideReading reading = SideReading::kExclusive);
  static RuleSet ThreeDim();
  static RuleSet ModifiedThreeDim();
  static RuleSet NDim(Coord p, std::size_t n);

  Variant variant() const { return variant_; }
  Coord p() const { return p_; }
  Coord q() const { return q_; }
  Coord r() const { return r_; }
  std::size_t dimension() const { return dimension_; }
  SideReading reading() const { return reading_; }

  // Largest single-heap removal on heap `axis`; nullopt means unbounded.
  std::optional<Coord> AxisCap(std::size_t axis) const;
  // Largest total for a multi-heap removal (0 disables it). Not meaningful
  // for the fixed 3-D variants.
  Coord DiagonalCap() const;

  // Permuting the coordinates of a position permutes its options.
  bool IsSymmetric() const;

  // e.g. "ryuo(p=3)", "restricted-hv(p=3,q=3,r=6)", "3dim".
  std::string ToString() const;

  friend bool operator==(const RuleSet&, const RuleSet&) = default;

 private:
  RuleSet(Variant variant, Coord p, Coord q, Coord r, std::size_t dimension,
          SideReading reading);

  Variant variant_;
  Coord p_;
  Coord q_;
  Coord r_;
  std::size_t dimension_;
  SideReading reading_;
};

}  // namespace ryuo

#endif  // RYUO_RULES_H_
