#include "ryuo_tools/cli.h"

#include <algorithm>
#include <fstream>
#include <optional>
#include <stdexcept>

#include "CLI11.hpp"
#include "ryuo/error.h"
#include "ryuo/strategy.h"
#include "ryuo_tools/api_service.h"
#include "ryuo_tools/game_request.h"
#include "ryuo_tools/table_document.h"
#include "ryuo_tools/verify_suites.h"

namespace ryuo::tools {
namespace {

constexpr int kUsageError = 2;

// Raised for bad input discovered after argument parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GameFlags {
  std::string game;
  Coord p = 0, q = 0, r = 0, n = 0;
  CLI::Option* p_opt = nullptr;
  CLI::Option* q_opt = nullptr;
  CLI::Option* r_opt = nullptr;
  CLI::Option* n_opt = nullptr;

  void Register(CLI::App& app) {
    app.add_option("--game", game, "Variant name")->required();
    p_opt = app.add_option("--p", p, "Diagonal parameter");
    q_opt = app.add_option("--q", q, "Side-move bound");
    r_opt = app.add_option("--r", r, "Vertical-move bound");
    n_opt = app.add_option("--n", n, "Number of heaps (ndim)");
  }

  RuleSet Build(std::optional<std::size_t> coord_count) const {
    const std::optional<Variant> variant = ParseVariant(game);
    if (!variant) throw UsageError("unknown game '" + game + "'");
    auto get = [](CLI::Option* opt, Coord v) {
      return opt->count() > 0 ? std::optional<Coord>(v) : std::nullopt;
    };
    return MakeRules(*variant,
                     {get(p_opt, p), get(q_opt, q), get(r_opt, r),
                      get(n_opt, n)},
                     coord_count);
  }
};

struct PositionFlags {
  std::string pass;
  std::vector<Coord> coords;
  CLI::Option* pass_opt = nullptr;

  void Register(CLI::App& app) {
    pass_opt = app.add_option("--pass", pass, "Pass still available")
                   ->check(CLI::IsMember({"true", "false"}));
    app.add_option("coords", coords, "Coordinates x y (z ...)")->required();
  }

  bool IsPassGame(const RuleSet& rules) const {
    const bool pass_game = rules.variant() == Variant::kPassRyuo;
    if (pass_game != (pass_opt->count() > 0)) {
      throw UsageError(pass_game ? "pass-ryuo needs --pass true|false"
                                 : "--pass applies only to pass-ryuo");
    }
    return pass_game;
  }

  PassPosition ToPass() const {
    if (coords.size() != 2) {
      throw UsageError("pass-ryuo positions have two coordinates");
    }
    return {coords[0], coords[1], pass == "true"};
  }
};

int RunEval(const GameFlags& game, const PositionFlags& where,
            std::ostream& out) {
  const RuleSet rules = game.Build(where.coords.size());
  if (where.IsPassGame(rules)) {
    const Evaluation e =
        Evaluate(rules, where.ToPass(), kCliTableCap, /*want_oracle_value=*/true);
    out << "outcome=" << ToString(e.outcome) << " (grundy via oracle: "
        << *e.oracle << ")\n";
    return 0;
  }
  const Evaluation e = Evaluate(rules, Position(where.coords), kCliTableCap,
                                /*want_oracle_value=*/true);
  if (e.closed_form) {
    out << "grundy=" << *e.closed_form;
  } else {
    out << "no closed form; oracle value: " << *e.oracle;
  }
  out << " outcome=" << ToString(e.outcome) << "\n";
  return 0;
}

template <typename State>
void PrintWinning(const std::vector<MoveRecommendation<State>>& moves,
                  std::ostream& out) {
  if (moves.empty()) {
    out << "none (P-position)\n";
    return;
  }
  for (std::size_t i = 0; i < moves.size(); ++i) {
    out << (i > 0 ? " " : "") << moves[i].target.ToString();
  }
  out << "\n";
}

int RunBest(const GameFlags& game, const PositionFlags& where,
            std::ostream& out) {
  const RuleSet rules = game.Build(where.coords.size());
  if (where.IsPassGame(rules)) {
    PrintWinning(BestMoves(rules, where.ToPass()), out);
  } else {
    PrintWinning(BestMoves(rules, Position(where.coords)), out);
  }
  return 0;
}

int RunTable(const GameFlags& game, Coord max, const std::string& layer,
             const std::string& format, const std::string& out_path,
             std::ostream& out) {
  if (max > kCliTableCap) {
    throw UsageError("--max is limited to " + std::to_string(kCliTableCap));
  }
  const RuleSet rules = game.Build(std::nullopt);
  std::optional<bool> pass_layer;
  if (!layer.empty()) pass_layer = layer == "pass";
  const TableDocument doc = BuildTableDocument(rules, max, pass_layer);
  const std::string text =
      format == "json" ? ToJsonText(doc) : ToCsv(doc);
  if (out_path.empty()) {
    out << text;
    return 0;
  }
  std::ofstream file(out_path, std::ios::binary);
  file << text;
  if (!file.flush()) throw UsageError("cannot write " + out_path);
  return 0;
}

int RunVerify(const std::string& suite, std::optional<Coord> max, bool json,
              std::ostream& out) {
  if (max && *max > kCliTableCap) {
    throw UsageError("--max is limited to " + std::to_string(kCliTableCap));
  }
  std::vector<std::string> names = {suite};
  if (suite == "all") names = SuiteNames();
  bool ok = true;
  nlohmann::ordered_json report = nlohmann::ordered_json::array();
  for (const std::string& name : names) {
    const SuiteResult result = RunSuite(name, max);
    ok = ok && result.ok();
    if (json) {
      report.push_back(ToJson(result));
    } else {
      out << (result.ok() ? "[ok] " : "[FAIL] ") << name << ": "
          << result.summary << "\n";
    }
  }
  if (json) out << report.dump(2) << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Grundy numbers and strategies for Ryuo Nim and its variants",
               "ryuo"};
  app.require_subcommand(1);

  GameFlags eval_game, best_game, table_game;
  PositionFlags eval_pos, best_pos;

  CLI::App* eval = app.add_subcommand("eval", "Grundy value and outcome");
  eval_game.Register(*eval);
  eval_pos.Register(*eval);

  CLI::App* best = app.add_subcommand("best", "Winning moves");
  best_game.Register(*best);
  best_pos.Register(*best);

  CLI::App* table = app.add_subcommand("table", "Grundy table as CSV or JSON");
  table_game.Register(*table);
  Coord table_max = 0;
  std::string layer, format = "csv", out_path;
  table->add_option("--max", table_max, "Largest coordinate")->required();
  table->add_option("--layer", layer, "Pass layer (pass-ryuo only)")
      ->check(CLI::IsMember({"pass", "nopass"}));
  table->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  table->add_option("--out", out_path, "Write to FILE instead of stdout");

  CLI::App* verify = app.add_subcommand("verify", "Formula vs oracle sweeps");
  std::string suite;
  Coord verify_max = 0;
  bool json = false;
  std::vector<std::string> suites = SuiteNames();
  suites.push_back("all");
  verify->add_option("--suite", suite, "Suite name")
      ->required()
      ->check(CLI::IsMember(suites));
  CLI::Option* verify_max_opt =
      verify->add_option("--max", verify_max, "Largest coordinate of 2-D sweeps");
  verify->add_flag("--json", json, "Print a JSON report");

  CLI::App* serve = app.add_subcommand("serve", "Run the HTTP service");
  int port = 0;
  serve->add_option("--port", port, "Listening port")
      ->check(CLI::Range(1, 65535));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (eval->parsed()) return RunEval(eval_game, eval_pos, out);
    if (best->parsed()) return RunBest(best_game, best_pos, out);
    if (table->parsed()) {
      return RunTable(table_game, table_max, layer, format, out_path, out);
    }
    if (verify->parsed()) {
      std::optional<Coord> max;
      if (verify_max_opt->count() > 0) max = verify_max;
      return RunVerify(suite, max, json, out);
    }
    const int resolved = ResolvePort(port);
    if (resolved < 0) throw UsageError("RYUO_PORT is not a valid port");
    return Serve(resolved, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const GameError& e) {
    err << "error: " << e.what() << "\n";
  }
  return kUsageError;
}

}  // namespace ryuo::tools
