#include "ryuo_tools/game_request.h"

#include <array>

#include "ryuo/closed_form.h"
#include "ryuo/error.h"
#include "ryuo/oracle.h"
#include "ryuo/pass.h"
#include "ryuo/region.h"

namespace ryuo::tools {
namespace {

constexpr Coord kMaxHeaps = 64;

Coord Need(const std::optional<Coord>& value, std::string_view name,
           Variant variant) {
  if (!value) {
    throw GameError(ErrorKind::kInvalidRules,
                    std::string(WireName(variant)) + " needs parameter " +
                        std::string(name));
  }
  return *value;
}

void Forbid(const std::optional<Coord>& value, std::string_view name,
            Variant variant) {
  if (value) {
    throw GameError(ErrorKind::kInvalidRules,
                    "parameter " + std::string(name) + " does not apply to " +
                        std::string(WireName(variant)));
  }
}

}  // namespace

std::vector<std::string> ParamNames(Variant variant) {
  switch (variant) {
    case Variant::kGeneralizedRyuo:
    case Variant::kPassRyuo:
      return {"p"};
    case Variant::kRestrictedSide:
      return {"p", "q"};
    case Variant::kRestrictedHV:
      return {"p", "q", "r"};
    case Variant::kThreeDim:
    case Variant::kModifiedThreeDim:
      return {};
    case Variant::kNDim:
      return {"p", "n"};
  }
  return {};
}

RuleSet MakeRules(Variant variant, const GameParams& params,
                  std::optional<std::size_t> coord_count) {
  const auto& [p, q, r, n] = params;
  switch (variant) {
    case Variant::kGeneralizedRyuo:
    case Variant::kPassRyuo:
      Forbid(q, "q", variant);
      Forbid(r, "r", variant);
      Forbid(n, "n", variant);
      return variant == Variant::kPassRyuo
                 ? RuleSet::PassRyuo(Need(p, "p", variant))
                 : RuleSet::GeneralizedRyuo(Need(p, "p", variant));
    case Variant::kRestrictedSide:
      Forbid(r, "r", variant);
      Forbid(n, "n", variant);
      return RuleSet::RestrictedSide(Need(p, "p", variant),
                                     Need(q, "q", variant));
    case Variant::kRestrictedHV:
      Forbid(n, "n", variant);
      return RuleSet::RestrictedHV(Need(p, "p", variant),
                                   Need(q, "q", variant),
                                   Need(r, "r", variant));
    case Variant::kThreeDim:
    case Variant::kModifiedThreeDim:
      Forbid(p, "p", variant);
      Forbid(q, "q", variant);
      Forbid(r, "r", variant);
      Forbid(n, "n", variant);
      return variant == Variant::kThreeDim ? RuleSet::ThreeDim()
                                           : RuleSet::ModifiedThreeDim();
    case Variant::kNDim: {
      Forbid(q, "q", variant);
      Forbid(r, "r", variant);
      std::optional<Coord> heaps = n;
      if (!heaps && coord_count) heaps = *coord_count;
      const Coord count = Need(heaps, "n", variant);
      if (count > kMaxHeaps) {
        throw GameError(ErrorKind::kInvalidRules,
                        "n is limited to " + std::to_string(kMaxHeaps));
      }
      return RuleSet::NDim(Need(p, "p", variant), count);
    }
  }
  throw GameError(ErrorKind::kInvalidRules, "unknown variant");
}

void RequireWithin(std::span<const Coord> coords, Coord cap) {
  for (Coord c : coords) {
    if (c > cap) {
      throw GameError(ErrorKind::kRegion,
                      "oracle evaluation is limited to coordinates <= " +
                          std::to_string(cap));
    }
  }
}

Evaluation Evaluate(const RuleSet& rules, const Position& pos, Coord oracle_cap,
                    bool want_oracle_value) {
  if (rules.variant() == Variant::kPassRyuo) {
    throw GameError(ErrorKind::kWrongOperation,
                    "pass-ryuo positions carry a pass flag");
  }
  Evaluation out;
  out.terminal = pos.IsTerminal();
  if (HasClosedForm(rules)) {
    out.closed_form = GrundyClosedForm(rules, pos);
    out.outcome = *out.closed_form == 0 ? Outcome::kP : Outcome::kN;
    return out;
  }
  if (rules.variant() == Variant::kThreeDim) {
    out.outcome = ThreeDimIsPPosition(pos) ? Outcome::kP : Outcome::kN;
    if (!want_oracle_value) return out;
  }
  if (pos.dimension() != rules.dimension()) {
    throw GameError(ErrorKind::kContractViolation,
                    rules.ToString() + " expects " +
                        std::to_string(rules.dimension()) + " coordinates");
  }
  RequireWithin(pos.coords(), oracle_cap);
  const GrundyValue value = GrundyBruteForce(rules, pos);
  out.outcome = value == 0 ? Outcome::kP : Outcome::kN;
  if (want_oracle_value) out.oracle = value;
  return out;
}

Evaluation Evaluate(const RuleSet& rules, const PassPosition& pos,
                    Coord oracle_cap, bool want_oracle_value) {
  if (rules.variant() != Variant::kPassRyuo) {
    throw GameError(ErrorKind::kWrongOperation,
                    rules.ToString() + " has no pass flag");
  }
  Evaluation out;
  out.terminal = pos.IsTerminal();
  const std::array<Coord, 2> coords{pos.x, pos.y};
  if (rules.p() >= 3) {
    out.outcome = ClassifyPass(rules.p(), pos);
  } else {
    RequireWithin(coords, oracle_cap);
    out.outcome = OutcomeBackwardInduction(rules.p(), Region({pos.x, pos.y}))
                      .at(pos);
  }
  if (want_oracle_value) {
    RequireWithin(coords, oracle_cap);
    out.oracle = PassGrundyTable(rules.p(), Region({pos.x, pos.y}), pos.pass)
                     .at(std::span<const Coord>(coords));
  }
  return out;
}

}  // namespace ryuo::tools
