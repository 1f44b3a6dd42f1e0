#pragma once

#include <cstdint>
#include <string>

#include "evc/graph.hpp"

namespace evc {

/// mvc(output) = multiplier * mvc(input) + offset.
struct SizeIdentity {
  int multiplier = 1;
  int offset = 0;

  int apply(int mvc) const { return multiplier * mvc + offset; }
  std::string describe() const;
};

struct GadgetOutput {
  Graph graph;
  VertexSet new_vertices;  ///< ids in `graph`
  SizeIdentity size_identity;
};

/// Adds one vertex adjacent to every existing vertex.
GadgetOutput add_universal_vertex(const Graph& g);

/// Triangulates every internal face of length t > 3 with four new vertices: three
/// fanned onto consecutive boundary arcs (split at i = max(2, ceil(t/3)) and
/// j = max(i + 1, ceil(2t/3))), mutually adjacent, plus an apex joined to all three.
/// Throws GraphError when a listed face is not a cycle of g.
GadgetOutput triangulate_faces(const Graph& g, const PlanarEmbedding& emb);

/// Two copies of g (labels suffixed ".1" and ".2") joined by u1-v2 and v1-u2, with the
/// quadrilateral u1 v1 u2 v2 triangulated by the four-vertex face gadget.
/// Throws GraphError when {u, v} is not an edge.
GadgetOutput double_and_join(const Graph& g, Vertex u, Vertex v);

/// Two K_{2,3} copies on {x1,x2,x3,y4,y5} and {y1,y2,y3,x4,x5} joined by x1y1 and x4y4.
Graph fig4_instance();

/// K_4 minus an edge: triangles abc and abd sharing ab.
Graph two_triangles();

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);

/// Chordal by construction: each new vertex joins a random clique through a random
/// earlier vertex. Certified with is_chordal before returning.
Graph random_connected_chordal(int n, double density, std::uint64_t seed);

/// As above with every new vertex (after the second) joining at least two earlier
/// vertices, which keeps the graph biconnected.
Graph random_biconnected_chordal(int n, double density, std::uint64_t seed);

/// Random spanning tree plus each remaining pair with probability p.
Graph random_connected(int n, double p, std::uint64_t seed);

/// Named instances: "fig4", "two-triangles", "P<n>", "C<n>", "K<n>".
/// Throws PreconditionError for unknown names.
Graph builtin_instance(const std::string& name);

}  // namespace evc
