#ifndef RYUO_TOOLS_TABLE_DOCUMENT_H_
#define RYUO_TOOLS_TABLE_DOCUMENT_H_

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "ryuo/position.h"
#include "ryuo/rules.h"

namespace ryuo::tools {

// A square Grundy grid over [0,max]^2. rows[y][x] holds the value at (x,y),
// so the first row is the top edge of the board.
struct TableDocument {
  std::string game;
  std::vector<std::pair<std::string, Coord>> params;
  std::optional<std::string> layer;  // "pass" | "nopass", pass variant only
  Coord max = 0;
  std::vector<std::vector<GrundyValue>> rows;

  friend bool operator==(const TableDocument&, const TableDocument&) = default;
};

inline constexpr Coord kCliTableCap = 4096;

// Values come from the closed form where one exists, otherwise from the
// oracle (for the pass variant, the oracle of the chosen layer). Only
// two-dimensional variants have tables; others throw kUnsupportedVariant.
TableDocument BuildTableDocument(const RuleSet& rules, Coord max,
                                 std::optional<bool> pass_layer);

// # game=<name> p=<p> [q=..] [r=..] [n=..] [layer=..] region=<max>
// y\x,0,1,...,max
// <y>,<v>,...
// LF endings, no trailing whitespace.
std::string ToCsv(const TableDocument& doc);
// Inverse of ToCsv; throws std::invalid_argument on malformed input.
TableDocument ParseCsv(std::string_view csv);

nlohmann::ordered_json ToJson(const TableDocument& doc);
// ToJson pretty-printed with one row per line, LF-terminated.
std::string ToJsonText(const TableDocument& doc);

}  // namespace ryuo::tools

#endif  // RYUO_TOOLS_TABLE_DOCUMENT_H_
