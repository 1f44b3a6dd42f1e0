#include "evc/service.hpp"

#include "evc/characterization.hpp"
#include "evc/errors.hpp"
#include "evc/gadgets.hpp"
#include "evc/json_io.hpp"

namespace evc {

using nlohmann::json;

namespace {

ServiceResponse error(int status, const std::string& message) { return {status, {{"error", message}}}; }

std::optional<json> parse_body(const std::string& body) {
  json doc = json::parse(body, nullptr, false);
  if (doc.is_discarded()) return std::nullopt;
  return doc;
}

}  // namespace

ServiceResponse SessionService::handle(const std::string& method, const std::string& path, const std::string& body) {
  const std::string prefix = "/api/session";
  if (path == prefix || path == prefix + "/") {
    if (method == "POST") return create(body);
    return error(405, "method not allowed");
  }
  if (path.rfind(prefix + "/", 0) != 0) return error(404, "not found");
  std::string rest = path.substr(prefix.size() + 1);
  const std::string suffix = "/attack";
  if (rest.size() > suffix.size() && rest.compare(rest.size() - suffix.size(), suffix.size(), suffix) == 0) {
    if (method != "POST") return error(405, "method not allowed");
    return attack(rest.substr(0, rest.size() - suffix.size()), body);
  }
  if (rest.find('/') != std::string::npos) return error(404, "not found");
  if (method == "GET") return get(rest);
  if (method == "DELETE") return remove(rest);
  return error(405, "method not allowed");
}

ServiceResponse SessionService::create(const std::string& body) {
  auto doc = parse_body(body);
  if (!doc || !doc->is_object()) return error(400, "request body must be a JSON object");

  Graph g;
  std::optional<Configuration> start;
  try {
    if (doc->contains("builtin")) {
      if (!(*doc)["builtin"].is_string()) return error(400, "builtin must be a string");
      g = builtin_instance((*doc)["builtin"].get<std::string>());
    } else {
      g = graph_from_json(doc->contains("graph") ? (*doc)["graph"] : *doc);
    }
    if (doc->contains("start")) {
      const json& s = (*doc)["start"];
      if (!s.is_array()) return error(400, "start must be an array of vertices");
      std::vector<std::string> labels;
      for (const auto& v : s) labels.push_back(label_from_json(v));
      start = g.labels_to_set(labels);
    }
  } catch (const Error& e) {
    return error(400, e.what());
  }

  if (g.order() < 2 || !is_connected(g)) return error(422, "graph must be connected with at least two vertices");

  CharReport report;
  try {
    report = characterize(g, ClassFMode::sufficient, SolverMode::exact, limits_);
  } catch (const LimitError& e) {
    return error(422, e.what());
  }
  const bool playable = report.verdict == Verdict::evc_equals_mvc ||
                        (report.verdict == Verdict::evc_equals_mvc_plus_1 && report.biconnected);
  if (!playable) {
    ServiceResponse r = error(422, "no certified defense strategy for this graph");
    r.body["report"] = char_report_json(g, report);
    return r;
  }

  std::shared_ptr<Entry> entry;
  try {
    entry = std::make_shared<Entry>(DefenseSession::create(g, report, start, SolverMode::exact, limits_));
  } catch (const PreconditionError& e) {
    return error(400, e.what());
  } catch (const Error& e) {
    return error(422, e.what());
  }
  entry->verdict = to_string(report.verdict);
  entry->evc_bound = report.biconnected ? json{report.mvc, report.mvc + 1} : json{report.mvc, report.mvc};

  std::string id;
  {
    std::lock_guard lock(mutex_);
    id = "s" + std::to_string(next_id_++);
    sessions_[id] = entry;
  }
  std::lock_guard lock(entry->mutex);
  return {200, state_json(id, *entry)};
}

ServiceResponse SessionService::attack(const std::string& id, const std::string& body) {
  auto entry = lookup(id);
  if (!entry) return error(404, "unknown session '" + id + "'");
  auto doc = parse_body(body);
  if (!doc || !doc->is_object() || !doc->contains("edge") || !(*doc)["edge"].is_array() || (*doc)["edge"].size() != 2)
    return error(400, "expected {\"edge\": [u, v]}");

  std::lock_guard lock(entry->mutex);
  DefenseSession& s = entry->session;
  const Graph& g = s.graph();
  std::optional<Vertex> a, b;
  try {
    a = g.find(label_from_json((*doc)["edge"][0]));
    b = g.find(label_from_json((*doc)["edge"][1]));
  } catch (const ParseError& e) {
    return error(400, e.what());
  }
  if (!a || !b || !g.adjacent(*a, *b)) return error(409, "attack on a non-edge");
  if (s.finished()) return error(409, "game is over");

  const Configuration before = s.config();
  try {
    const RoundRecord& rec = s.defend(*a, *b);
    if (!verify_moveset(g, before, rec.config, rec.moves, Edge::canonical(*a, *b)))
      return error(500, "move set failed validation");
    json out = round_json(g, rec);
    out["defended"] = true;
    return {200, out};
  } catch (const DefenseImpossible& e) {
    return {200,
            {{"defended", false},
             {"error", e.what()},
             {"round", e.round()},
             {"moves", json::array()},
             {"config", labels_json(g, s.config())}}};
  } catch (const Error& e) {
    return error(500, e.what());
  }
}

ServiceResponse SessionService::get(const std::string& id) {
  auto entry = lookup(id);
  if (!entry) return error(404, "unknown session '" + id + "'");
  std::lock_guard lock(entry->mutex);
  json out = state_json(id, *entry);
  json log = json::array();
  for (const auto& r : entry->session.log()) log.push_back(round_json(entry->session.graph(), r));
  out["log"] = std::move(log);
  return {200, out};
}

ServiceResponse SessionService::remove(const std::string& id) {
  std::lock_guard lock(mutex_);
  if (sessions_.erase(id) == 0) return error(404, "unknown session '" + id + "'");
  return {200, {{"deleted", id}}};
}

std::size_t SessionService::session_count() const {
  std::lock_guard lock(mutex_);
  return sessions_.size();
}

std::shared_ptr<SessionService::Entry> SessionService::lookup(const std::string& id) const {
  std::lock_guard lock(mutex_);
  auto it = sessions_.find(id);
  return it == sessions_.end() ? nullptr : it->second;
}

json SessionService::state_json(const std::string& id, const Entry& e) const {
  const DefenseSession& s = e.session;
  json out;
  out["id"] = id;
  out["mode"] = to_string(s.mode());
  out["verdict"] = e.verdict;
  out["mvc"] = s.mvc();
  out["evc_bound"] = e.evc_bound;
  out["config"] = labels_json(s.graph(), s.config());
  out["round"] = s.round();
  out["finished"] = s.finished();
  out["graph"] = graph_json(s.graph());
  return out;
}

}  // namespace evc
