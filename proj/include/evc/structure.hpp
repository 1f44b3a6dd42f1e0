#pragma once

#include <optional>
#include <vector>

#include "evc/graph.hpp"
#include "evc/vertex_set.hpp"

namespace evc {

struct BlockDecomposition {
  VertexSet cut_vertices;
  /// Maximal biconnected components and bridges, sorted.
  std::vector<VertexSet> blocks;
};

/// Articulation points and blocks via DFS low-link. Throws PreconditionError on a
/// disconnected graph.
BlockDecomposition cut_vertices_and_blocks(const Graph& g);

/// Convenience: true iff g is connected, has at least two vertices and no cut vertex.
bool is_biconnected(const Graph& g);

struct LocalConnectivity {
  bool holds = true;
  /// Least-id vertex whose open neighborhood is empty or induces a disconnected graph.
  std::optional<Vertex> witness;
};

LocalConnectivity is_locally_connected(const Graph& g);

/// Each block's induced subgraph is locally connected (K_2 blocks pass).
bool every_block_locally_connected(const Graph& g);

struct ChordalTest {
  bool chordal = false;
  /// Perfect elimination ordering (simplicial vertex first); empty when not chordal.
  std::vector<Vertex> peo;
};

/// Lex-BFS visiting order; ties go to the smallest id.
std::vector<Vertex> lex_bfs(const Graph& g);

/// Reverse Lex-BFS order, verified as a perfect elimination ordering.
ChordalTest is_chordal(const Graph& g);

bool is_vertex_cover(const Graph& g, const VertexSet& s);
/// Cover whose induced subgraph is connected and nonempty.
bool is_connected_cover(const Graph& g, const VertexSet& s);
/// G[s] connected (the empty set counts as disconnected).
bool induces_connected(const Graph& g, const VertexSet& s);

}  // namespace evc
