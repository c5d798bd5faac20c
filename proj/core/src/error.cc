#include "ryuo/error.h"

namespace ryuo {

std::string_view ToString(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidRules:
      return "invalid rules";
    case ErrorKind::kContractViolation:
      return "contract violation";
    case ErrorKind::kWrongOperation:
      return "wrong operation";
    case ErrorKind::kUnsupportedVariant:
      return "unsupported variant";
    case ErrorKind::kNoClosedForm:
      return "no closed form";
    case ErrorKind::kRegion:
      return "region";
    case ErrorKind::kCounterexample:
      return "counterexample";
    case ErrorKind::kNoMove:
      return "no move";
    case ErrorKind::kOverflow:
      return "overflow";
  }
  return "unknown";
}

}  // namespace ryuo
