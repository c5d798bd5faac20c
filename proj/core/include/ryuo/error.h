#ifndef RYUO_ERROR_H_
#define RYUO_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace ryuo {

enum class ErrorKind {
  kInvalidRules,        // parameters violate RuleSet invariants
  kContractViolation,   // e.g. position dimension does not match the rules
  kWrongOperation,      // pass variant sent to the plain move generator
  kUnsupportedVariant,  // operation defined for 2-D variants only
  kNoClosedForm,        // caller must fall back to the oracle
  kRegion,              // position outside a table's region, or region too big
  kCounterexample,      // a theorem check found no witness where one must exist
  kNoMove,              // engine asked to move from a terminal position
  kOverflow,
};

std::string_view ToString(ErrorKind kind);

class GameError : public std::runtime_error {
 public:
  GameError(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ryuo

#endif  // RYUO_ERROR_H_
