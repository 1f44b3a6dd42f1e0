#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "evc/vertex_set.hpp"

namespace evc {

/// Undirected edge between two vertex ids; canonical orientation keeps u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  static Edge canonical(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Labeled undirected simple graph.
///
/// Vertex ids are the ranks of the labels under lexicographic (byte) order, so two
/// graphs built from the same labels and edges are identical regardless of input
/// order. Adjacency lists are sorted.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from labels and labeled edges. Endpoints not listed in
  /// `vertices` are added. Throws GraphError on self-loops, duplicate edges or
  /// duplicate vertex labels.
  static Graph from_labeled_edges(std::vector<std::string> vertices,
                                  const std::vector<std::pair<std::string, std::string>>& edges);

  int order() const { return static_cast<int>(labels_.size()); }
  std::size_t edge_count() const { return edge_count_; }

  const std::string& label(Vertex v) const { return labels_[static_cast<std::size_t>(v)]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<Vertex> find(std::string_view label) const;
  /// Throws GraphError for an unknown label.
  Vertex id(std::string_view label) const;

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
  bool adjacent(Vertex a, Vertex b) const;

  /// Neighborhood bitmask. Only valid for graphs with at most 64 vertices.
  std::uint64_t neighbor_mask(Vertex v) const;
  std::uint64_t all_mask() const;

  /// All edges in canonical orientation, sorted.
  std::vector<Edge> edges() const;

  /// Induced subgraph on `keep`. New id i corresponds to the i-th member of `keep`.
  Graph induced(const VertexSet& keep) const;
  /// G minus `drop`; new ids follow the ascending order of the kept vertices.
  Graph without(const VertexSet& drop) const;

  VertexSet all_vertices() const;
  VertexSet labels_to_set(const std::vector<std::string>& labels) const;
  std::vector<std::string> set_to_labels(const VertexSet& s) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

/// Face boundaries of a plane drawing, given as vertex-id cycles without the
/// repeated closing vertex.
struct PlanarEmbedding {
  std::vector<std::vector<Vertex>> internal_faces;
  std::vector<Vertex> outer_face;
};

enum class GraphFormat { edge_list, json };

/// Parsed input: the graph plus an optional embedding from the JSON "faces" key.
struct GraphDocument {
  Graph graph;
  std::optional<PlanarEmbedding> embedding;
};

Graph parse_graph(std::string_view text, GraphFormat format);
GraphDocument parse_document(std::string_view text, GraphFormat format);

/// Picks the JSON format when the path ends in ".json", otherwise the edge list.
GraphFormat format_for_path(std::string_view path);

std::string to_edge_list(const Graph& g);
std::string to_json_text(const Graph& g, const std::optional<PlanarEmbedding>& embedding = std::nullopt);

bool is_connected(const Graph& g);

}  // namespace evc
