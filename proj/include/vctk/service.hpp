#pragma once

// JSON-over-HTTP session service. Sessions hold a current distinguished basis
// and the move history; every response is canonical JSON.
//
//   POST /sessions                 {"catalog": name, "n"?: int} | {"basis": {...}}, "target"?: name | {"gram": [[...]]}
//   GET  /sessions/{id}            full state
//   POST /sessions/{id}/moves      {"token": "a1"} | {"word": "a1 b2 ..."}
//   POST /sessions/{id}/undo
//   GET  /sessions/{id}/diagram
//
// Status codes: 404 unknown session or route, 422 invalid token or input, 409 undo
// on an empty history, 400 unparsable body.

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "vctk/json_io.hpp"

namespace vctk {

struct Response {
  int status = 200;
  std::string body;
};

class Service {
 public:
  /// With a snapshot directory every session is persisted as <dir>/<id>.json
  /// after each change, and existing snapshots are restored on construction.
  explicit Service(std::optional<std::string> snapshot_dir = std::nullopt);
  ~Service();
  Service(const Service&) = delete;
  Service& operator=(const Service&) = delete;

  Response handle(const std::string& method, const std::string& path, const std::string& body);

  Response create_session(const std::string& body);
  Response get_session(const std::string& id);
  Response apply_moves(const std::string& id, const std::string& body);
  Response undo(const std::string& id);
  Response diagram(const std::string& id);

  std::size_t session_count() const;

 private:
  struct Session;
  std::shared_ptr<Session> find(const std::string& id) const;
  Json state_json(const Session& s) const;
  void snapshot(const Session& s) const;
  void restore();

  std::optional<std::string> snapshot_dir_;
  mutable std::shared_mutex mutex_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  unsigned long next_id_ = 1;
};

/// Blocks serving `service` on host:port until the process is stopped.
/// Returns false if the socket cannot be bound.
bool serve(Service& service, const std::string& host, int port);

}  // namespace vctk
