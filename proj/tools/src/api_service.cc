#include "ryuo_tools/api_service.h"

#include <pthread.h>

#include <atomic>
#include <csignal>
#include <cstdlib>
#include <mutex>
#include <regex>
#include <stdexcept>
#include <thread>

#include "httplib.h"
#include "ryuo/closed_form.h"
#include "ryuo/error.h"
#include "ryuo/moves.h"
#include "ryuo/strategy.h"
#include "ryuo_tools/game_request.h"
#include "ryuo_tools/table_document.h"

namespace ryuo::tools {
namespace {

using Json = nlohmann::ordered_json;

// Malformed requests; answered with 400.
struct BadRequest : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Request {
  RuleSet rules;
  std::vector<Coord> coords;
  std::optional<bool> pass;

  bool is_pass() const { return rules.variant() == Variant::kPassRyuo; }
  PassPosition pass_position() const { return {coords[0], coords[1], *pass}; }
};

Coord ReadCoord(const Json& value, const std::string& what) {
  if (!value.is_number_unsigned()) {
    throw BadRequest(what + " must be a non-negative integer");
  }
  return value.get<Coord>();
}

Json ParseBody(std::string_view body) {
  Json json = Json::parse(body, nullptr, /*allow_exceptions=*/false);
  if (json.is_discarded() || !json.is_object()) {
    throw BadRequest("body must be a JSON object");
  }
  return json;
}

RuleSet ReadGame(const Json& body, std::optional<std::size_t> coord_count) {
  const auto game = body.find("game");
  if (game == body.end() || !game->is_object()) {
    throw BadRequest("missing game object");
  }
  const auto name = game->find("variant");
  if (name == game->end() || !name->is_string()) {
    throw BadRequest("game.variant must be a string");
  }
  const std::optional<Variant> variant =
      ParseVariant(name->get<std::string>());
  if (!variant) throw BadRequest("unknown variant " + name->dump());
  GameParams params;
  if (const auto raw = game->find("params"); raw != game->end()) {
    if (!raw->is_object()) throw BadRequest("game.params must be an object");
    for (const auto& [key, value] : raw->items()) {
      const Coord v = ReadCoord(value, "params." + key);
      if (key == "p") params.p = v;
      else if (key == "q") params.q = v;
      else if (key == "r") params.r = v;
      else if (key == "n") params.n = v;
      else throw BadRequest("unknown parameter " + key);
    }
  }
  return MakeRules(*variant, params, coord_count);
}

Request ReadRequest(std::string_view text) {
  const Json body = ParseBody(text);
  const auto position = body.find("position");
  if (position == body.end() || !position->is_object()) {
    throw BadRequest("missing position object");
  }
  const auto coords = position->find("coords");
  if (coords == position->end() || !coords->is_array()) {
    throw BadRequest("position.coords must be an array");
  }
  std::vector<Coord> values;
  for (const Json& c : *coords) values.push_back(ReadCoord(c, "coordinate"));
  Request out{ReadGame(body, values.size()), std::move(values), std::nullopt};
  if (const auto pass = position->find("pass"); pass != position->end()) {
    if (!pass->is_boolean()) throw BadRequest("position.pass must be boolean");
    out.pass = pass->get<bool>();
  }
  if (out.is_pass() != out.pass.has_value()) {
    throw BadRequest(out.is_pass() ? "pass-ryuo positions need a pass flag"
                                   : "pass applies only to pass-ryuo");
  }
  if (out.coords.size() != out.rules.dimension()) {
    throw GameError(ErrorKind::kContractViolation,
                    out.rules.ToString() + " expects " +
                        std::to_string(out.rules.dimension()) +
                        " coordinates");
  }
  return out;
}

// Counts options up to the cap so huge positions are refused before any
// list is materialized.
void RequireFewOptions(const Request& req) {
  struct TooMany {};
  const RuleSet counted = req.is_pass()
                              ? RuleSet::GeneralizedRyuo(req.rules.p())
                              : req.rules;
  std::size_t count = req.is_pass() ? 1 : 0;
  try {
    ForEachOption(counted, req.coords, [&](std::span<const Coord>) {
      if (++count > kServiceOptionCap) throw TooMany{};
    });
  } catch (const TooMany&) {
    throw GameError(ErrorKind::kRegion,
                    "more than " + std::to_string(kServiceOptionCap) +
                        " options");
  }
}

// Strategy falls back to an oracle region around the position in these
// cases, so the per-axis cap applies.
void RequireStrategyRegion(const Request& req) {
  const Variant v = req.rules.variant();
  const bool formula = HasClosedForm(req.rules) || v == Variant::kThreeDim ||
                       (v == Variant::kPassRyuo && req.rules.p() >= 3);
  if (!formula) RequireWithin(req.coords, kServiceOracleCap);
}

Json ToPayload(const Position& pos) {
  return std::vector<Coord>(pos.coords().begin(), pos.coords().end());
}

Json ToPayload(const PassPosition& pos) {
  return Json::array({pos.x, pos.y, pos.pass});
}

template <typename State>
Json WinningPayload(const std::vector<MoveRecommendation<State>>& moves) {
  Json out = Json::array();
  for (const auto& m : moves) out.push_back(ToPayload(m.target));
  return out;
}

template <typename State>
Json EngineMovePayload(const RuleSet& rules, const State& pos) {
  if (pos.IsTerminal()) return nullptr;
  return ToPayload(EngineMove(rules, pos).target);
}

int StatusOf(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidRules:
    case ErrorKind::kWrongOperation:
      return 400;
    case ErrorKind::kContractViolation:
    case ErrorKind::kRegion:
    case ErrorKind::kOverflow:
    case ErrorKind::kUnsupportedVariant:
    case ErrorKind::kNoMove:
      return 422;
    default:
      return 500;
  }
}

template <typename Handler>
ApiResponse Guard(Handler&& handler) {
  try {
    return {200, handler()};
  } catch (const BadRequest& e) {
    return {400, Json{{"error", e.what()}}};
  } catch (const GameError& e) {
    return {StatusOf(e.kind()), Json{{"error", e.what()}}};
  } catch (const std::exception& e) {
    return {500, Json{{"error", e.what()}}};
  }
}

Json VariantEntry(Variant variant, bool closed_form, bool p_formula,
                  const char* condition) {
  Json out;
  out["variant"] = WireName(variant);
  out["params"] = ParamNames(variant);
  out["closedForm"] = closed_form;
  out["ppositionFormula"] = p_formula;
  if (condition != nullptr) out["condition"] = condition;
  return out;
}

bool IsLocalOrigin(const std::string& origin) {
  static const std::regex kLocal(R"(^http://(localhost|127\.0\.0\.1)(:\d+)?$)");
  return std::regex_match(origin, kLocal);
}

void Reply(httplib::Response& res, const ApiResponse& api) {
  res.status = api.status;
  res.set_content(api.body.dump(), "application/json");
}

}  // namespace

ApiResponse HandleVariants() {
  return Guard([] {
    Json list = Json::array();
    list.push_back(VariantEntry(Variant::kGeneralizedRyuo, true, true, nullptr));
    list.push_back(VariantEntry(Variant::kPassRyuo, false, true, "p >= 3"));
    list.push_back(VariantEntry(Variant::kRestrictedSide, true, true,
                                "q mod p in {0, 1}"));
    list.push_back(VariantEntry(Variant::kRestrictedHV, true, true,
                                "q mod p = 0 and r mod p = 0"));
    list.push_back(VariantEntry(Variant::kThreeDim, false, true, nullptr));
    list.push_back(
        VariantEntry(Variant::kModifiedThreeDim, true, true, nullptr));
    list.push_back(VariantEntry(Variant::kNDim, true, true, nullptr));
    return Json{{"variants", list}};
  });
}

ApiResponse HandleEval(std::string_view body) {
  return Guard([&] {
    const Request req = ReadRequest(body);
    const Evaluation e =
        req.is_pass()
            ? Evaluate(req.rules, req.pass_position(), kServiceOracleCap, false)
            : Evaluate(req.rules, Position(req.coords), kServiceOracleCap,
                       false);
    Json out;
    out["grundy"] = e.closed_form ? Json(*e.closed_form) : Json(nullptr);
    out["outcome"] = ToString(e.outcome);
    out["terminal"] = e.terminal;
    return out;
  });
}

ApiResponse HandleMoves(std::string_view body) {
  return Guard([&] {
    const Request req = ReadRequest(body);
    RequireFewOptions(req);
    Json moves = Json::array();
    if (req.is_pass()) {
      for (const PassPosition& m :
           LegalMovesPass(req.rules.p(), req.pass_position())) {
        moves.push_back(ToPayload(m));
      }
    } else {
      for (const Position& m : LegalMoves(req.rules, Position(req.coords))) {
        moves.push_back(ToPayload(m));
      }
    }
    return Json{{"moves", moves}};
  });
}

ApiResponse HandleBest(std::string_view body) {
  return Guard([&] {
    const Request req = ReadRequest(body);
    RequireFewOptions(req);
    RequireStrategyRegion(req);
    Json out;
    if (req.is_pass()) {
      const PassPosition pos = req.pass_position();
      out["winning"] = WinningPayload(BestMoves(req.rules, pos));
      out["engineMove"] = EngineMovePayload(req.rules, pos);
    } else {
      const Position pos(req.coords);
      out["winning"] = WinningPayload(BestMoves(req.rules, pos));
      out["engineMove"] = EngineMovePayload(req.rules, pos);
    }
    return out;
  });
}

ApiResponse HandleTable(std::string_view text) {
  return Guard([&] {
    const Json body = ParseBody(text);
    const auto max = body.find("max");
    if (max == body.end()) throw BadRequest("missing max");
    const Coord m = ReadCoord(*max, "max");
    if (m > kServiceOracleCap) {
      throw BadRequest("max is limited to " +
                       std::to_string(kServiceOracleCap));
    }
    std::optional<bool> layer;
    if (const auto raw = body.find("layer"); raw != body.end()) {
      if (*raw != "pass" && *raw != "nopass") {
        throw BadRequest("layer must be \"pass\" or \"nopass\"");
      }
      layer = *raw == "pass";
    }
    return ToJson(BuildTableDocument(ReadGame(body, std::nullopt), m, layer));
  });
}

void MountApi(httplib::Server& server, std::ostream* log) {
  server.Get("/api/variants", [](const httplib::Request&, httplib::Response& res) {
    Reply(res, HandleVariants());
  });
  const std::pair<const char*, ApiResponse (*)(std::string_view)> posts[] = {
      {"/api/eval", HandleEval},
      {"/api/moves", HandleMoves},
      {"/api/best", HandleBest},
      {"/api/table", HandleTable}};
  for (const auto& [path, handler] : posts) {
    server.Post(path, [handler](const httplib::Request& req,
                                httplib::Response& res) {
      Reply(res, handler(req.body));
    });
  }
  server.Options(R"(/api/.*)",
                 [](const httplib::Request&, httplib::Response& res) {
                   res.status = 204;
                 });
  server.set_post_routing_handler(
      [](const httplib::Request& req, httplib::Response& res) {
        const std::string origin = req.get_header_value("Origin");
        if (!IsLocalOrigin(origin)) return;
        res.set_header("Access-Control-Allow-Origin", origin);
        res.set_header("Vary", "Origin");
        res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
        res.set_header("Access-Control-Allow-Headers", "Content-Type");
      });
  if (log != nullptr) {
    auto mutex = std::make_shared<std::mutex>();
    server.set_logger([log, mutex](const httplib::Request& req,
                                   const httplib::Response& res) {
      std::lock_guard lock(*mutex);
      *log << req.method << " " << req.path << " " << res.status << "\n"
           << std::flush;
    });
  }
}

int ResolvePort(int flag_port) {
  if (flag_port > 0) return flag_port;
  const char* env = std::getenv("RYUO_PORT");
  if (env == nullptr || *env == '\0') return kDefaultPort;
  char* end = nullptr;
  const long value = std::strtol(env, &end, 10);
  if (*end != '\0' || value < 1 || value > 65535) return -1;
  return static_cast<int>(value);
}

int Serve(int port, std::ostream& log) {
  // Signals are taken synchronously by a watcher thread; the worker threads
  // inherit the blocked mask.
  sigset_t signals;
  sigemptyset(&signals);
  sigaddset(&signals, SIGINT);
  sigaddset(&signals, SIGTERM);
  sigset_t previous;
  pthread_sigmask(SIG_BLOCK, &signals, &previous);

  httplib::Server server;
  MountApi(server, &log);
  // SO_REUSEADDR only: a second instance on the same port must fail.
  server.set_socket_options([](socket_t sock) {
    int yes = 1;
    setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, &yes, sizeof(yes));
  });
  if (!server.bind_to_port("127.0.0.1", port)) {
    pthread_sigmask(SIG_SETMASK, &previous, nullptr);
    log << "error: cannot bind 127.0.0.1:" << port << "\n";
    return 2;
  }
  std::atomic<bool> signalled = false;
  std::thread watcher([&] {
    int received = 0;
    sigwait(&signals, &received);
    signalled = true;
    server.stop();
  });
  log << "listening on http://127.0.0.1:" << port << "\n" << std::flush;
  server.listen_after_bind();
  // Wake the watcher if the server stopped on its own.
  if (!signalled) pthread_kill(watcher.native_handle(), SIGTERM);
  watcher.join();
  pthread_sigmask(SIG_SETMASK, &previous, nullptr);
  return 0;
}

}  // namespace ryuo::tools
