#include "evc/graph.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <queue>
#include <set>
#include <sstream>

#include <json.hpp>

#include "evc/errors.hpp"

namespace evc {

Graph Graph::from_labeled_edges(std::vector<std::string> vertices,
                                const std::vector<std::pair<std::string, std::string>>& edges) {
  {
    auto sorted = vertices;
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end()) throw GraphError("duplicate vertex label '" + *dup + "'");
  }
  for (const auto& [a, b] : edges) {
    vertices.push_back(a);
    vertices.push_back(b);
  }
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());

  Graph g;
  g.labels_ = std::move(vertices);
  g.adjacency_.assign(g.labels_.size(), {});
  std::set<Edge> seen;
  for (const auto& [a, b] : edges) {
    if (a == b) throw GraphError("self-loop on '" + a + "'");
    Edge e = Edge::canonical(g.id(a), g.id(b));
    if (!seen.insert(e).second) throw GraphError("duplicate edge '" + a + "' - '" + b + "'");
    g.adjacency_[static_cast<std::size_t>(e.u)].push_back(e.v);
    g.adjacency_[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  for (auto& adj : g.adjacency_) std::sort(adj.begin(), adj.end());
  g.edge_count_ = seen.size();
  return g;
}

std::optional<Vertex> Graph::find(std::string_view label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) return std::nullopt;
  return static_cast<Vertex>(it - labels_.begin());
}

Vertex Graph::id(std::string_view label) const {
  auto v = find(label);
  if (!v) throw GraphError("unknown vertex '" + std::string(label) + "'");
  return *v;
}

bool Graph::adjacent(Vertex a, Vertex b) const {
  auto adj = neighbors(a);
  return std::binary_search(adj.begin(), adj.end(), b);
}

std::uint64_t Graph::neighbor_mask(Vertex v) const {
  std::uint64_t m = 0;
  for (Vertex w : neighbors(v)) m |= std::uint64_t{1} << w;
  return m;
}

std::uint64_t Graph::all_mask() const {
  return order() >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << order()) - 1;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.push_back({u, v});
  return out;
}

Graph Graph::induced(const VertexSet& keep) const {
  Graph g;
  std::vector<Vertex> remap(labels_.size(), -1);
  Vertex next = 0;
  for (Vertex v : keep) {
    remap[static_cast<std::size_t>(v)] = next++;
    g.labels_.push_back(labels_[static_cast<std::size_t>(v)]);
  }
  g.adjacency_.assign(keep.size(), {});
  for (Vertex v : keep) {
    for (Vertex w : neighbors(v)) {
      Vertex nw = remap[static_cast<std::size_t>(w)];
      if (nw < 0) continue;
      g.adjacency_[static_cast<std::size_t>(remap[static_cast<std::size_t>(v)])].push_back(nw);
      if (v < w) ++g.edge_count_;
    }
  }
  return g;
}

Graph Graph::without(const VertexSet& drop) const { return induced(all_vertices() - drop); }

VertexSet Graph::all_vertices() const {
  std::vector<Vertex> ids(labels_.size());
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<Vertex>(i);
  return VertexSet(std::move(ids));
}

VertexSet Graph::labels_to_set(const std::vector<std::string>& labels) const {
  std::vector<Vertex> ids;
  for (const auto& l : labels) ids.push_back(id(l));
  return VertexSet(std::move(ids));
}

std::vector<std::string> Graph::set_to_labels(const VertexSet& s) const {
  std::vector<std::string> out;
  for (Vertex v : s) out.push_back(label(v));
  return out;
}

namespace {

std::string at(std::size_t line, std::size_t column) {
  return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": ";
}

using LabeledEdges = std::vector<std::pair<std::string, std::string>>;

GraphDocument parse_edge_list(std::string_view text) {
  LabeledEdges edges;
  std::set<std::pair<std::string, std::string>> seen;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    pos = end + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    std::vector<std::pair<std::string, std::size_t>> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      if (i >= line.size()) break;
      std::size_t start = i;
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      tokens.emplace_back(std::string(line.substr(start, i - start)), start + 1);
    }
    if (tokens.empty() || tokens.front().first.front() == '#') continue;
    if (tokens.size() != 2) {
      std::size_t col = tokens.size() > 2 ? tokens[2].second : line.size() + 1;
      throw ParseError("expected two vertex labels, found " + std::to_string(tokens.size()), line_no, col);
    }
    const auto& [a, col_a] = tokens[0];
    const auto& [b, col_b] = tokens[1];
    if (a == b) throw GraphError(at(line_no, col_b) + "self-loop on '" + a + "'");
    auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
    if (!seen.insert(key).second)
      throw GraphError(at(line_no, col_a) + "duplicate edge '" + a + "' - '" + b + "'");
    edges.emplace_back(a, b);
  }
  return {Graph::from_labeled_edges({}, edges), std::nullopt};
}

std::string json_label(const nlohmann::json& j, const char* where) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw ParseError(std::string("vertex labels must be strings or integers (in ") + where + ")", 0, 0);
}

std::vector<Vertex> json_cycle(const Graph& g, const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("face boundary must be an array of labels", 0, 0);
  std::vector<Vertex> cycle;
  for (const auto& l : j) {
    auto v = g.find(json_label(l, "faces"));
    if (!v) throw ParseError("face refers to unknown vertex '" + json_label(l, "faces") + "'", 0, 0);
    cycle.push_back(*v);
  }
  if (cycle.size() > 1 && cycle.front() == cycle.back()) cycle.pop_back();
  return cycle;
}

GraphDocument parse_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // Translate the byte offset into line/column.
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError("invalid JSON", line, col);
  }
  if (!doc.is_object()) throw ParseError("graph JSON must be an object", 1, 1);

  std::vector<std::string> vertices;
  bool explicit_vertices = doc.contains("vertices");
  if (explicit_vertices) {
    if (!doc["vertices"].is_array()) throw ParseError("\"vertices\" must be an array", 0, 0);
    for (const auto& v : doc["vertices"]) vertices.push_back(json_label(v, "vertices"));
  }
  std::set<std::string> known(vertices.begin(), vertices.end());
  if (known.size() != vertices.size()) throw ParseError("duplicate vertex label", 0, 0);

  LabeledEdges edges;
  std::set<std::pair<std::string, std::string>> seen;
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) throw ParseError("\"edges\" must be an array", 0, 0);
    std::size_t index = 0;
    for (const auto& e : doc["edges"]) {
      ++index;
      if (!e.is_array() || e.size() != 2)
        throw ParseError("edge #" + std::to_string(index) + " must be a pair of labels", 0, 0);
      std::string a = json_label(e[0], "edges"), b = json_label(e[1], "edges");
      if (a == b) throw GraphError("self-loop on '" + a + "' (edge #" + std::to_string(index) + ")");
      if (explicit_vertices && (!known.count(a) || !known.count(b)))
        throw ParseError("edge #" + std::to_string(index) + " uses an undeclared vertex", 0, 0);
      auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
      if (!seen.insert(key).second)
        throw GraphError("duplicate edge '" + a + "' - '" + b + "' (edge #" + std::to_string(index) + ")");
      edges.emplace_back(std::move(a), std::move(b));
    }
  }

  GraphDocument out{Graph::from_labeled_edges(std::move(vertices), edges), std::nullopt};
  if (doc.contains("faces")) {
    const auto& faces = doc["faces"];
    if (!faces.is_object()) throw ParseError("\"faces\" must be an object", 0, 0);
    PlanarEmbedding emb;
    if (faces.contains("internal")) {
      if (!faces["internal"].is_array()) throw ParseError("\"faces.internal\" must be an array", 0, 0);
      for (const auto& f : faces["internal"]) emb.internal_faces.push_back(json_cycle(out.graph, f));
    }
    if (faces.contains("outer")) emb.outer_face = json_cycle(out.graph, faces["outer"]);
    out.embedding = std::move(emb);
  }
  return out;
}

}  // namespace

GraphDocument parse_document(std::string_view text, GraphFormat format) {
  return format == GraphFormat::json ? parse_json(text) : parse_edge_list(text);
}

Graph parse_graph(std::string_view text, GraphFormat format) { return parse_document(text, format).graph; }

GraphFormat format_for_path(std::string_view path) {
  constexpr std::string_view ext = ".json";
  if (path.size() >= ext.size() && path.substr(path.size() - ext.size()) == ext) return GraphFormat::json;
  return GraphFormat::edge_list;
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  for (const Edge& e : g.edges()) out << g.label(e.u) << ' ' << g.label(e.v) << '\n';
  return out.str();
}

std::string to_json_text(const Graph& g, const std::optional<PlanarEmbedding>& embedding) {
  nlohmann::json doc;
  doc["vertices"] = g.labels();
  auto edges = nlohmann::json::array();
  for (const Edge& e : g.edges()) edges.push_back({g.label(e.u), g.label(e.v)});
  doc["edges"] = std::move(edges);
  if (embedding) {
    auto cycle = [&](const std::vector<Vertex>& c) {
      auto arr = nlohmann::json::array();
      for (Vertex v : c) arr.push_back(g.label(v));
      return arr;
    };
    nlohmann::json faces;
    faces["internal"] = nlohmann::json::array();
    for (const auto& f : embedding->internal_faces) faces["internal"].push_back(cycle(f));
    faces["outer"] = cycle(embedding->outer_face);
    doc["faces"] = std::move(faces);
  }
  return doc.dump();
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  std::queue<Vertex> q;
  q.push(0);
  seen[0] = 1;
  int count = 1;
  while (!q.empty()) {
    Vertex v = q.front();
    q.pop();
    for (Vertex w : g.neighbors(v)) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++count;
        q.push(w);
      }
    }
  }
  return count == g.order();
}

}  // namespace evc
