#include "vctk/service.hpp"

#include <filesystem>
#include <fstream>
#include <regex>

#include <httplib.h>

namespace vctk {

struct Service::Session {
  std::string id;
  DistinguishedBasis initial;
  DistinguishedBasis current;
  std::vector<std::pair<Move, DistinguishedBasis>> history;  // token and the basis before it
  std::optional<IntMatrix> target;
  std::mutex mutex;

  Session(std::string i, DistinguishedBasis b) : id(std::move(i)), initial(b), current(std::move(b)) {}
};

namespace {

Response json_response(int status, const Json& j) { return {status, canonical(j)}; }

Response error(int status, const std::string& message) {
  return json_response(status, Json{{"error", message}, {"status", status}});
}

Json parse_body(const std::string& body) {
  if (body.empty()) return Json::object();
  return Json::parse(body);  // parse_error is mapped to 400 by the caller
}

std::optional<IntMatrix> target_from_json(const Json& t, int n) {
  if (t.is_null()) return std::nullopt;
  if (t.is_string()) return catalog_entry(t.get<std::string>(), n).basis.gram();
  if (t.is_object() && t.contains("gram")) return matrix_from_json(t.at("gram"));
  throw InputError("\"target\" must be a catalog name or {\"gram\": [[...]]}");
}

Json diff_json(const IntMatrix& before, const IntMatrix& after) {
  Json d = Json::array();
  for (std::size_t i = 0; i < before.rows(); ++i)
    for (std::size_t j = i; j < before.cols(); ++j)
      if (before(i, j) != after(i, j))
        d.push_back({{"i", i + 1}, {"j", j + 1}, {"before", to_json(before(i, j))}, {"after", to_json(after(i, j))}});
  return d;
}

}  // namespace

Service::Service(std::optional<std::string> snapshot_dir) : snapshot_dir_(std::move(snapshot_dir)) {
  if (snapshot_dir_) {
    std::filesystem::create_directories(*snapshot_dir_);
    restore();
  }
}

Service::~Service() = default;

std::size_t Service::session_count() const {
  std::shared_lock lock(mutex_);
  return sessions_.size();
}

std::shared_ptr<Service::Session> Service::find(const std::string& id) const {
  std::shared_lock lock(mutex_);
  auto it = sessions_.find(id);
  return it == sessions_.end() ? nullptr : it->second;
}

Json Service::state_json(const Session& s) const {
  Json history = Json::array();
  for (const auto& [m, prev] : s.history) history.push_back(to_string(m));
  Json j{{"id", s.id},
         {"basis", basis_to_json(s.current)},
         {"history", history},
         {"can_undo", !s.history.empty()},
         {"diagram", diagram_to_json(s.current)},
         {"matrices", matrices_to_json(s.current)}};
  if (s.target) {
    const IntMatrix g = s.current.gram();
    const bool same_shape = g.rows() == s.target->rows() && g.cols() == s.target->cols();
    j["target"] = {{"gram", to_json(*s.target)},
                   {"match", same_shape && g == *s.target},
                   {"diff", same_shape ? diff_json(g, *s.target) : Json::array()}};
  } else {
    j["target"] = Json();
  }
  return j;
}

void Service::snapshot(const Session& s) const {
  if (!snapshot_dir_) return;
  Json history = Json::array();
  for (const auto& [m, prev] : s.history) history.push_back(to_string(m));
  Json j{{"id", s.id}, {"initial", basis_to_json(s.initial)}, {"history", history}};
  j["target"] = s.target ? Json{{"gram", to_json(*s.target)}} : Json();
  const auto path = std::filesystem::path(*snapshot_dir_) / (s.id + ".json");
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    out << canonical(j) << '\n';
  }
  std::filesystem::rename(tmp, path);
}

void Service::restore() {
  for (const auto& entry : std::filesystem::directory_iterator(*snapshot_dir_)) {
    if (entry.path().extension() != ".json") continue;
    Json j = read_json_file(entry.path().string());
    auto s = std::make_shared<Session>(j.at("id").get<std::string>(), basis_from_json(j.at("initial")));
    for (const auto& tok : j.at("history")) {
      Move m = parse_move(tok.get<std::string>());
      DistinguishedBasis next = apply_move(s->current, m);
      s->history.emplace_back(m, s->current);
      s->current = std::move(next);
    }
    s->target = target_from_json(j.value("target", Json()), s->current.n());
    const std::string& id = s->id;
    if (id.size() > 1 && id[0] == 's' && id.find_first_not_of("0123456789", 1) == std::string::npos)
      next_id_ = std::max(next_id_, std::stoul(id.substr(1)) + 1);
    sessions_[id] = std::move(s);
  }
}

Response Service::create_session(const std::string& body) {
  Json req;
  try {
    req = parse_body(body);
  } catch (const Json::parse_error& e) {
    return error(400, std::string("malformed JSON: ") + e.what());
  }
  if (!req.is_object()) return error(400, "request body must be a JSON object");
  std::optional<DistinguishedBasis> basis;
  try {
    if (req.contains("catalog")) {
      if (!req["catalog"].is_string()) return error(422, "\"catalog\" must be a string");
      int n = 2;
      if (req.contains("n")) {
        Integer nv = integer_from_json(req["n"]);
        if (!nv.fits_sint_p() || nv < 0) return error(422, "\"n\" must be a non-negative integer");
        n = static_cast<int>(nv.get_si());
      }
      basis = catalog_entry(req["catalog"].get<std::string>(), n).basis;
    } else if (req.contains("basis")) {
      basis = basis_from_json(req["basis"]);
    } else {
      return error(422, "request needs \"catalog\" or \"basis\"");
    }
    std::optional<IntMatrix> target = target_from_json(req.value("target", Json()), basis->n());
    if (target && (target->rows() != basis->size() || target->cols() != basis->size()))
      return error(422, "target matrix size differs from the basis");

    std::shared_ptr<Session> s;
    {
      std::unique_lock lock(mutex_);
      s = std::make_shared<Session>("s" + std::to_string(next_id_++), *basis);
      s->target = std::move(target);
      sessions_[s->id] = s;
    }
    std::lock_guard guard(s->mutex);
    snapshot(*s);
    return json_response(201, state_json(*s));
  } catch (const Error& e) {
    return error(422, e.what());
  }
}

Response Service::get_session(const std::string& id) {
  auto s = find(id);
  if (!s) return error(404, "unknown session " + id);
  std::lock_guard guard(s->mutex);
  return json_response(200, state_json(*s));
}

Response Service::apply_moves(const std::string& id, const std::string& body) {
  auto s = find(id);
  if (!s) return error(404, "unknown session " + id);
  Json req;
  try {
    req = parse_body(body);
  } catch (const Json::parse_error& e) {
    return error(400, std::string("malformed JSON: ") + e.what());
  }
  BraidWord word;
  try {
    if (req.is_object() && req.contains("token") && req["token"].is_string())
      word = {parse_move(req["token"].get<std::string>())};
    else if (req.is_object() && req.contains("word") && req["word"].is_string())
      word = parse_braid_word(req["word"].get<std::string>());
    else
      return error(422, "request needs a string \"token\" or \"word\"");
  } catch (const Error& e) {
    return error(422, e.what());
  }
  if (word.empty()) return error(422, "empty move word");

  std::lock_guard guard(s->mutex);
  try {
    for (const auto& m : word) validate_move(m, s->current.size());
  } catch (const Error& e) {
    return error(422, e.what());
  }
  const IntMatrix before = s->current.gram();
  for (const auto& m : word) {
    DistinguishedBasis next = apply_move(s->current, m);
    s->history.emplace_back(m, s->current);
    s->current = std::move(next);
  }
  snapshot(*s);
  return json_response(200, Json{{"state", state_json(*s)}, {"diff", diff_json(before, s->current.gram())}});
}

Response Service::undo(const std::string& id) {
  auto s = find(id);
  if (!s) return error(404, "unknown session " + id);
  std::lock_guard guard(s->mutex);
  if (s->history.empty()) return error(409, "nothing to undo");
  s->current = s->history.back().second;
  s->history.pop_back();
  snapshot(*s);
  return json_response(200, state_json(*s));
}

Response Service::diagram(const std::string& id) {
  auto s = find(id);
  if (!s) return error(404, "unknown session " + id);
  std::lock_guard guard(s->mutex);
  return json_response(200, diagram_to_json(s->current));
}

Response Service::handle(const std::string& method, const std::string& path, const std::string& body) {
  static const std::regex session_re(R"(/sessions/([A-Za-z0-9_-]+)(/(moves|undo|diagram))?/?)");
  if (path == "/sessions" || path == "/sessions/") {
    if (method == "POST") return create_session(body);
    return error(404, "no route " + method + " " + path);
  }
  std::smatch m;
  if (!std::regex_match(path, m, session_re)) return error(404, "no route " + method + " " + path);
  const std::string id = m[1];
  const std::string action = m[3];
  if (action.empty() && method == "GET") return get_session(id);
  if (action == "moves" && method == "POST") return apply_moves(id, body);
  if (action == "undo" && method == "POST") return undo(id);
  if (action == "diagram" && method == "GET") return diagram(id);
  return error(404, "no route " + method + " " + path);
}

bool serve(Service& service, const std::string& host, int port) {
  httplib::Server srv;
  auto forward = [&service](const std::string& method) {
    return [&service, method](const httplib::Request& req, httplib::Response& res) {
      Response r = service.handle(method, req.path, req.body);
      res.status = r.status;
      res.set_header("Access-Control-Allow-Origin", "*");
      res.set_content(r.body, "application/json");
    };
  };
  srv.Get(".*", forward("GET"));
  srv.Post(".*", forward("POST"));
  srv.Options(".*", [](const httplib::Request&, httplib::Response& res) {
    res.set_header("Access-Control-Allow-Origin", "*");
    res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
    res.set_header("Access-Control-Allow-Headers", "Content-Type");
    res.status = 204;
  });
  return srv.listen(host, port);
}

}  // namespace vctk
