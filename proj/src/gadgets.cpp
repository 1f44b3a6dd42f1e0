#include "evc/gadgets.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <set>
#include <utility>

#include "evc/errors.hpp"
#include "evc/structure.hpp"

namespace evc {

std::string SizeIdentity::describe() const {
  std::string s = multiplier == 1 ? "mvc" : std::to_string(multiplier) + "*mvc";
  if (offset > 0) s += " + " + std::to_string(offset);
  if (offset < 0) s += " - " + std::to_string(-offset);
  return s;
}

namespace {

using LabeledEdge = std::pair<std::string, std::string>;

struct Builder {
  std::vector<std::string> vertices;
  std::vector<LabeledEdge> edges;
  std::set<std::string> taken;
  std::vector<std::string> added;

  explicit Builder(const Graph& g) : vertices(g.labels()), taken(g.labels().begin(), g.labels().end()) {
    for (const Edge& e : g.edges()) edges.emplace_back(g.label(e.u), g.label(e.v));
  }
  Builder() = default;

  std::string add_vertex(const std::string& base) {
    std::string label = base;
    for (int i = 1; taken.count(label); ++i) label = base + "_" + std::to_string(i);
    taken.insert(label);
    vertices.push_back(label);
    added.push_back(label);
    return label;
  }
  void add_edge(const std::string& a, const std::string& b) { edges.emplace_back(a, b); }

  GadgetOutput finish(SizeIdentity identity) const {
    GadgetOutput out{Graph::from_labeled_edges(vertices, edges), {}, identity};
    out.new_vertices = out.graph.labels_to_set(added);
    return out;
  }
};

int ceil_div(int a, int b) { return (a + b - 1) / b; }

/// Four-vertex triangulation of the face bounded by `cycle` (length t >= 4).
void face_gadget(Builder& b, const std::vector<std::string>& cycle, const std::array<std::string, 4>& names) {
  const int t = static_cast<int>(cycle.size());
  const int i = std::max(2, ceil_div(t, 3));
  const int j = std::max(i + 1, ceil_div(2 * t, 3));
  auto u = [&](int k) { return cycle[static_cast<std::size_t>(k - 1)]; };

  std::string f1 = b.add_vertex(names[0]), f2 = b.add_vertex(names[1]);
  std::string f3 = b.add_vertex(names[2]), f4 = b.add_vertex(names[3]);
  for (int k = 1; k <= i; ++k) b.add_edge(f1, u(k));
  for (int k = i; k <= j; ++k) b.add_edge(f2, u(k));
  for (int k = j; k <= t; ++k) b.add_edge(f3, u(k));
  b.add_edge(f3, u(1));
  b.add_edge(f1, f2);
  b.add_edge(f2, f3);
  b.add_edge(f1, f3);
  for (const auto& f : {f1, f2, f3}) b.add_edge(f4, f);
}

void check_face(const Graph& g, const std::vector<Vertex>& face) {
  if (face.size() < 3) throw GraphError("face boundary has fewer than three vertices");
  VertexSet distinct(face);
  if (distinct.size() != face.size()) throw GraphError("face boundary repeats a vertex");
  for (std::size_t k = 0; k < face.size(); ++k) {
    Vertex a = face[k], b = face[(k + 1) % face.size()];
    if (a < 0 || a >= g.order() || b < 0 || b >= g.order() || !g.adjacent(a, b))
      throw GraphError("face boundary is not a cycle of the graph");
  }
}

std::vector<std::string> padded_labels(int n) {
  const std::size_t width = std::to_string(std::max(0, n - 1)).size();
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) {
    std::string s = std::to_string(i);
    labels.push_back(std::string(width - s.size(), '0') + s);
  }
  return labels;
}

std::uint64_t below(std::mt19937_64& rng, std::uint64_t m) { return rng() % m; }
double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

Graph from_adjacency(int n, const std::vector<std::vector<char>>& adj) {
  auto labels = padded_labels(n);
  std::vector<LabeledEdge> edges;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)])
        edges.emplace_back(labels[static_cast<std::size_t>(a)], labels[static_cast<std::size_t>(b)]);
  return Graph::from_labeled_edges(labels, edges);
}

Graph grow_chordal(int n, double density, std::uint64_t seed, bool biconnected) {
  if (n < 1) throw PreconditionError("generator needs n >= 1");
  std::mt19937_64 rng(seed);
  std::vector<std::vector<char>> adj(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
  auto link = [&](int a, int b) {
    adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = 1;
    adj[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = 1;
  };
  for (int v = 1; v < n; ++v) {
    int w = static_cast<int>(below(rng, static_cast<std::uint64_t>(v)));
    std::vector<int> others;
    for (int x = 0; x < v; ++x)
      if (adj[static_cast<std::size_t>(w)][static_cast<std::size_t>(x)]) others.push_back(x);
    std::shuffle(others.begin(), others.end(), rng);
    // The new vertex joins a clique through w, so it is simplicial when added.
    std::vector<int> clique{w};
    auto extends = [&](int x) {
      return std::all_of(clique.begin(), clique.end(),
                         [&](int c) { return adj[static_cast<std::size_t>(c)][static_cast<std::size_t>(x)] != 0; });
    };
    for (int x : others)
      if (unit(rng) < density && extends(x)) clique.push_back(x);
    if (biconnected && v >= 2 && clique.size() < 2) clique.push_back(others.front());
    for (int c : clique) link(v, c);
  }
  Graph g = from_adjacency(n, adj);
  if (!is_chordal(g).chordal) throw InvariantError("chordal generator produced a non-chordal graph");
  if (biconnected && n >= 2 && !is_biconnected(g))
    throw InvariantError("biconnected generator produced a graph with a cut vertex");
  return g;
}

}  // namespace

GadgetOutput add_universal_vertex(const Graph& g) {
  if (g.order() < 1) throw PreconditionError("add_universal_vertex needs at least one vertex");
  Builder b(g);
  std::string apex = b.add_vertex("u");
  for (const auto& label : g.labels()) b.add_edge(apex, label);
  return b.finish({1, 1});
}

GadgetOutput triangulate_faces(const Graph& g, const PlanarEmbedding& emb) {
  Builder b(g);
  int processed = 0;
  for (std::size_t f = 0; f < emb.internal_faces.size(); ++f) {
    const auto& face = emb.internal_faces[f];
    check_face(g, face);
    if (face.size() <= 3) continue;
    std::vector<std::string> cycle;
    for (Vertex v : face) cycle.push_back(g.label(v));
    const std::string prefix = "f" + std::to_string(f) + ".";
    face_gadget(b, cycle, {prefix + "1", prefix + "2", prefix + "3", prefix + "4"});
    ++processed;
  }
  return b.finish({1, 3 * processed});
}

GadgetOutput double_and_join(const Graph& g, Vertex u, Vertex v) {
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || !g.adjacent(u, v))
    throw GraphError("double_and_join: the chosen pair is not an edge");
  Builder b;
  for (const char* suffix : {".1", ".2"}) {
    for (const auto& label : g.labels()) {
      b.vertices.push_back(label + suffix);
      b.taken.insert(label + suffix);
    }
    for (const Edge& e : g.edges()) b.add_edge(g.label(e.u) + suffix, g.label(e.v) + suffix);
  }
  const std::string u1 = g.label(u) + ".1", v1 = g.label(v) + ".1";
  const std::string u2 = g.label(u) + ".2", v2 = g.label(v) + ".2";
  b.add_edge(u1, v2);
  b.add_edge(v1, u2);

  face_gadget(b, {u1, v1, u2, v2}, {"p", "q", "r", "s"});
  return b.finish({2, 3});
}

Graph fig4_instance() {
  std::vector<LabeledEdge> edges;
  for (const char* x : {"x1", "x2", "x3"})
    for (const char* y : {"y4", "y5"}) edges.emplace_back(x, y);
  for (const char* y : {"y1", "y2", "y3"})
    for (const char* x : {"x4", "x5"}) edges.emplace_back(y, x);
  edges.emplace_back("x1", "y1");
  edges.emplace_back("x4", "y4");
  return Graph::from_labeled_edges({}, edges);
}

Graph two_triangles() {
  return Graph::from_labeled_edges({}, {{"a", "b"}, {"a", "c"}, {"b", "c"}, {"a", "d"}, {"b", "d"}});
}

Graph path_graph(int n) {
  if (n < 1) throw PreconditionError("path needs n >= 1");
  auto labels = padded_labels(n);
  std::vector<LabeledEdge> edges;
  for (int i = 0; i + 1 < n; ++i)
    edges.emplace_back(labels[static_cast<std::size_t>(i)], labels[static_cast<std::size_t>(i + 1)]);
  return Graph::from_labeled_edges(labels, edges);
}

Graph cycle_graph(int n) {
  if (n < 3) throw PreconditionError("cycle needs n >= 3");
  auto labels = padded_labels(n);
  std::vector<LabeledEdge> edges;
  for (int i = 0; i < n; ++i)
    edges.emplace_back(labels[static_cast<std::size_t>(i)], labels[static_cast<std::size_t>((i + 1) % n)]);
  return Graph::from_labeled_edges(labels, edges);
}

Graph complete_graph(int n) {
  if (n < 1) throw PreconditionError("complete graph needs n >= 1");
  auto labels = padded_labels(n);
  std::vector<LabeledEdge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      edges.emplace_back(labels[static_cast<std::size_t>(i)], labels[static_cast<std::size_t>(j)]);
  return Graph::from_labeled_edges(labels, edges);
}

Graph random_connected_chordal(int n, double density, std::uint64_t seed) {
  return grow_chordal(n, density, seed, false);
}

Graph random_biconnected_chordal(int n, double density, std::uint64_t seed) {
  return grow_chordal(n, density, seed, true);
}

Graph random_connected(int n, double p, std::uint64_t seed) {
  if (n < 1) throw PreconditionError("generator needs n >= 1");
  std::mt19937_64 rng(seed);
  std::vector<std::vector<char>> adj(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
  for (int v = 1; v < n; ++v) {
    auto w = static_cast<std::size_t>(below(rng, static_cast<std::uint64_t>(v)));
    adj[static_cast<std::size_t>(v)][w] = adj[w][static_cast<std::size_t>(v)] = 1;
  }
  for (std::size_t a = 0; a < adj.size(); ++a)
    for (std::size_t b = a + 1; b < adj.size(); ++b)
      if (!adj[a][b] && unit(rng) < p) adj[a][b] = adj[b][a] = 1;
  return from_adjacency(n, adj);
}

Graph builtin_instance(const std::string& name) {
  if (name == "fig4") return fig4_instance();
  if (name == "two-triangles") return two_triangles();
  if (name.size() >= 2 && std::string("PCK").find(name[0]) != std::string::npos &&
      std::all_of(name.begin() + 1, name.end(), [](char c) { return c >= '0' && c <= '9'; }) && name.size() <= 4) {
    int n = std::stoi(name.substr(1));
    if (name[0] == 'P') return path_graph(n);
    if (name[0] == 'C') return cycle_graph(n);
    return complete_graph(n);
  }
  throw PreconditionError("unknown builtin instance '" + name + "'");
}

}  // namespace evc
