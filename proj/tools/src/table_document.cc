#include "ryuo_tools/table_document.h"

#include <charconv>
#include <stdexcept>

#include "ryuo/closed_form.h"
#include "ryuo/error.h"
#include "ryuo/oracle.h"
#include "ryuo/pass.h"
#include "ryuo/region.h"
#include "ryuo_tools/game_request.h"

namespace ryuo::tools {
namespace {

std::vector<std::pair<std::string, Coord>> ParamsOf(const RuleSet& rules) {
  std::vector<std::pair<std::string, Coord>> out;
  for (const std::string& name : ParamNames(rules.variant())) {
    Coord value = 0;
    if (name == "p") value = rules.p();
    if (name == "q") value = rules.q();
    if (name == "r") value = rules.r();
    if (name == "n") value = rules.dimension();
    out.emplace_back(name, value);
  }
  return out;
}

Coord ParseNumber(std::string_view text) {
  Coord value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw std::invalid_argument("bad number '" + std::string(text) + "'");
  }
  return value;
}

std::vector<std::string_view> Split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  while (true) {
    const std::size_t at = text.find(sep);
    out.push_back(text.substr(0, at));
    if (at == std::string_view::npos) return out;
    text.remove_prefix(at + 1);
  }
}

}  // namespace

TableDocument BuildTableDocument(const RuleSet& rules, Coord max,
                                 std::optional<bool> pass_layer) {
  if (rules.dimension() != 2) {
    throw GameError(ErrorKind::kUnsupportedVariant,
                    "tables exist only for two-heap variants, not " +
                        rules.ToString());
  }
  const bool is_pass = rules.variant() == Variant::kPassRyuo;
  if (pass_layer && !is_pass) {
    throw GameError(ErrorKind::kInvalidRules,
                    "layer applies only to pass-ryuo");
  }
  TableDocument doc;
  doc.game = std::string(WireName(rules.variant()));
  doc.params = ParamsOf(rules);
  doc.max = max;
  const Region region = Region::Cube(2, max);
  std::optional<GrundyTable> table;
  if (is_pass) {
    const bool layer = pass_layer.value_or(false);
    doc.layer = layer ? "pass" : "nopass";
    table = PassGrundyTable(rules.p(), region, layer);
  } else if (!HasClosedForm(rules)) {
    table = BuildGrundyTable(rules, region);
  }
  doc.rows.assign(max + 1, std::vector<GrundyValue>(max + 1));
  for (Coord y = 0; y <= max; ++y) {
    for (Coord x = 0; x <= max; ++x) {
      const Position pos{x, y};
      doc.rows[y][x] = table ? table->at(pos) : GrundyClosedForm(rules, pos);
    }
  }
  return doc;
}

std::string ToCsv(const TableDocument& doc) {
  std::string out = "# game=" + doc.game;
  for (const auto& [name, value] : doc.params) {
    out += " " + name + "=" + std::to_string(value);
  }
  if (doc.layer) out += " layer=" + *doc.layer;
  out += " region=" + std::to_string(doc.max) + "\ny\\x";
  for (Coord x = 0; x <= doc.max; ++x) out += "," + std::to_string(x);
  out += "\n";
  for (std::size_t y = 0; y < doc.rows.size(); ++y) {
    out += std::to_string(y);
    for (GrundyValue v : doc.rows[y]) out += "," + std::to_string(v);
    out += "\n";
  }
  return out;
}

TableDocument ParseCsv(std::string_view csv) {
  if (csv.empty() || csv.back() != '\n') {
    throw std::invalid_argument("table must end with a newline");
  }
  csv.remove_suffix(1);
  const std::vector<std::string_view> lines = Split(csv, '\n');
  if (lines.size() < 2 || !lines[0].starts_with("# ")) {
    throw std::invalid_argument("missing header line");
  }
  TableDocument doc;
  bool have_game = false;
  bool have_region = false;
  for (std::string_view field : Split(lines[0].substr(2), ' ')) {
    const std::size_t eq = field.find('=');
    if (eq == std::string_view::npos) {
      throw std::invalid_argument("bad header field '" + std::string(field) +
                                  "'");
    }
    const std::string_view key = field.substr(0, eq);
    const std::string_view value = field.substr(eq + 1);
    if (key == "game") {
      doc.game = value;
      have_game = true;
    } else if (key == "layer") {
      doc.layer = std::string(value);
    } else if (key == "region") {
      doc.max = ParseNumber(value);
      have_region = true;
    } else {
      doc.params.emplace_back(std::string(key), ParseNumber(value));
    }
  }
  if (!have_game || !have_region) {
    throw std::invalid_argument("header needs game and region");
  }
  if (lines.size() != doc.max + 3) {
    throw std::invalid_argument("expected " + std::to_string(doc.max + 1) +
                                " rows");
  }
  const std::vector<std::string_view> columns = Split(lines[1], ',');
  if (columns.size() != doc.max + 2 || columns[0] != "y\\x") {
    throw std::invalid_argument("bad column header");
  }
  for (Coord x = 0; x <= doc.max; ++x) {
    if (ParseNumber(columns[x + 1]) != x) {
      throw std::invalid_argument("column header out of order");
    }
  }
  for (Coord y = 0; y <= doc.max; ++y) {
    const std::vector<std::string_view> cells = Split(lines[y + 2], ',');
    if (cells.size() != doc.max + 2 || ParseNumber(cells[0]) != y) {
      throw std::invalid_argument("bad row " + std::to_string(y));
    }
    std::vector<GrundyValue>& row = doc.rows.emplace_back();
    for (Coord x = 0; x <= doc.max; ++x) {
      row.push_back(ParseNumber(cells[x + 1]));
    }
  }
  return doc;
}

nlohmann::ordered_json ToJson(const TableDocument& doc) {
  nlohmann::ordered_json out;
  out["game"] = doc.game;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [name, value] : doc.params) params[name] = value;
  out["params"] = params;
  if (doc.layer) out["layer"] = *doc.layer;
  out["max"] = doc.max;
  out["rows"] = doc.rows;
  return out;
}

std::string ToJsonText(const TableDocument& doc) {
  nlohmann::ordered_json head = ToJson(doc);
  head.erase("rows");
  std::string out = head.dump(2);
  out.resize(out.size() - 2);  // reopen the object before "}"
  out += ",\n  \"rows\": [";
  for (std::size_t y = 0; y < doc.rows.size(); ++y) {
    out += y == 0 ? "\n    " : ",\n    ";
    out += nlohmann::ordered_json(doc.rows[y]).dump();
  }
  out += "\n  ]\n}\n";
  return out;
}

}  // namespace ryuo::tools
