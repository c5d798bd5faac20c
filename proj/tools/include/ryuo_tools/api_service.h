#ifndef RYUO_TOOLS_API_SERVICE_H_
#define RYUO_TOOLS_API_SERVICE_H_

#include <ostream>
#include <string>
#include <string_view>

#include "json.hpp"

namespace httplib {
class Server;
}

namespace ryuo::tools {

inline constexpr int kDefaultPort = 8642;
// Largest coordinate for oracle-backed evaluation and the largest table.
inline constexpr unsigned kServiceOracleCap = 256;
// Largest option list /api/moves and /api/best will enumerate.
inline constexpr unsigned kServiceOptionCap = 100000;

struct ApiResponse {
  int status = 200;
  nlohmann::ordered_json body;
};

// Stateless handlers; every response is a pure function of the request body.
ApiResponse HandleVariants();
ApiResponse HandleEval(std::string_view body);
ApiResponse HandleMoves(std::string_view body);
ApiResponse HandleBest(std::string_view body);
ApiResponse HandleTable(std::string_view body);

// Registers the routes, localhost-only CORS and per-request logging.
void MountApi(httplib::Server& server, std::ostream* log);

// Port from the flag, else RYUO_PORT, else kDefaultPort. Returns -1 when the
// environment value is not a valid port.
int ResolvePort(int flag_port);

// Blocks serving 127.0.0.1:port until SIGINT/SIGTERM. Returns 2 when the
// port cannot be bound, 0 after a clean stop.
int Serve(int port, std::ostream& log);

}  // namespace ryuo::tools

#endif  // RYUO_TOOLS_API_SERVICE_H_
