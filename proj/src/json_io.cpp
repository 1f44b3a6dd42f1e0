#include "evc/json_io.hpp"

#include "evc/errors.hpp"

namespace evc {

using nlohmann::json;

json labels_json(const Graph& g, const VertexSet& s) { return g.set_to_labels(s); }

json graph_json(const Graph& g) { return json::parse(to_json_text(g)); }

json cover_json(const Graph& g, const CoverResult& r) {
  return {{"size", r.size}, {"cover", labels_json(g, r.cover)}, {"forced", labels_json(g, r.forced)}};
}

json evc_result_json(const Graph& g, const EvcResult& r) {
  json family = json::array();
  for (const auto& c : r.safe_family) family.push_back(labels_json(g, c));
  json iterations = json::array();
  for (const auto& it : r.iterations)
    iterations.push_back({{"k", it.k}, {"sweeps", it.sweeps}, {"covers", it.covers}, {"survivors", it.survivors}});
  return {{"evc", r.evc}, {"mvc", r.mvc}, {"safe_family", family}, {"iterations", iterations}};
}

json char_report_json(const Graph& g, const CharReport& r) {
  json out;
  out["mvc"] = r.mvc;
  out["cut_vertices"] = labels_json(g, r.cut_vertices);
  out["necessary_condition"] = r.necessary_condition;
  out["failing_vertex"] = r.failing_vertex ? json(g.label(*r.failing_vertex)) : json(nullptr);
  out["class_f_evidence"] = to_string(r.class_f_evidence);
  out["verdict"] = to_string(r.verdict);
  out["evc"] = r.evc ? json(*r.evc) : json(nullptr);
  out["biconnected"] = r.biconnected;
  return out;
}

json moves_json(const Graph& g, const MoveSet& moves) {
  json out = json::array();
  for (const Move& m : moves) out.push_back({g.label(m.from), g.label(m.to)});
  return out;
}

json round_json(const Graph& g, const RoundRecord& r) {
  json out;
  out["round"] = r.round;
  out["attack"] = {g.label(r.attack_from), g.label(r.attack_to)};
  out["moves"] = moves_json(g, r.moves);
  out["config"] = labels_json(g, r.config);
  return out;
}

Graph graph_from_json(const json& doc) {
  if (!doc.is_object()) throw ParseError("graph must be a JSON object", 1, 1);
  return parse_graph(doc.dump(), GraphFormat::json);
}

std::string label_from_json(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  throw ParseError("vertex reference must be a string or an integer", 1, 1);
}

}  // namespace evc
