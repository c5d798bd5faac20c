#ifndef RYUO_TOOLS_GAME_REQUEST_H_
#define RYUO_TOOLS_GAME_REQUEST_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ryuo/position.h"
#include "ryuo/rules.h"

namespace ryuo::tools {

struct GameParams {
  std::optional<Coord> p;
  std::optional<Coord> q;
  std::optional<Coord> r;
  std::optional<Coord> n;
};

// Builds the rule set for a wire variant. `coord_count` supplies the
// dimension of ndim when n is not given. Throws GameError(kInvalidRules) for
// missing, superfluous or out-of-range parameters.
RuleSet MakeRules(Variant variant, const GameParams& params,
                  std::optional<std::size_t> coord_count = std::nullopt);

// Parameter names a variant takes, in canonical order.
std::vector<std::string> ParamNames(Variant variant);

struct Evaluation {
  // Closed-form value, when the variant has one.
  std::optional<GrundyValue> closed_form;
  // Oracle value, computed only when there is no closed form and the caller
  // asked for it.
  std::optional<GrundyValue> oracle;
  Outcome outcome = Outcome::kP;
  bool terminal = false;
};

// `oracle_cap` bounds every coordinate of any oracle region used; beyond it
// the call throws GameError(kRegion). With `want_oracle_value` the oracle's
// Grundy value is reported for variants without a closed form.
Evaluation Evaluate(const RuleSet& rules, const Position& pos, Coord oracle_cap,
                    bool want_oracle_value);
Evaluation Evaluate(const RuleSet& rules, const PassPosition& pos,
                    Coord oracle_cap, bool want_oracle_value);

// Throws GameError(kRegion) when a coordinate exceeds `cap`.
void RequireWithin(std::span<const Coord> coords, Coord cap);

}  // namespace ryuo::tools

#endif  // RYUO_TOOLS_GAME_REQUEST_H_
