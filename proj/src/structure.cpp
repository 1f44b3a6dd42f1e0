#include "evc/structure.hpp"

#include <algorithm>
#include <queue>

#include "evc/errors.hpp"

namespace evc {

BlockDecomposition cut_vertices_and_blocks(const Graph& g) {
  if (!is_connected(g)) throw PreconditionError("block decomposition requires a connected graph");
  const auto n = static_cast<std::size_t>(g.order());
  BlockDecomposition out;
  if (n < 2) return out;

  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<std::size_t> next_edge(n, 0);
  std::vector<Vertex> parent(n, -1);
  std::vector<Edge> edge_stack;
  std::vector<char> is_cut(n, 0);
  int timer = 0;

  // Iterative DFS from vertex 0.
  std::vector<Vertex> stack{0};
  disc[0] = low[0] = timer++;
  int root_children = 0;
  while (!stack.empty()) {
    Vertex v = stack.back();
    auto vi = static_cast<std::size_t>(v);
    auto adj = g.neighbors(v);
    if (next_edge[vi] < adj.size()) {
      Vertex w = adj[next_edge[vi]++];
      auto wi = static_cast<std::size_t>(w);
      if (disc[wi] < 0) {
        parent[wi] = v;
        disc[wi] = low[wi] = timer++;
        edge_stack.push_back({v, w});
        if (v == 0) ++root_children;
        stack.push_back(w);
      } else if (w != parent[vi] && disc[wi] < disc[vi]) {
        low[vi] = std::min(low[vi], disc[wi]);
        edge_stack.push_back({v, w});
      }
      continue;
    }
    stack.pop_back();
    Vertex p = parent[vi];
    if (p < 0) continue;
    auto pi = static_cast<std::size_t>(p);
    low[pi] = std::min(low[pi], low[vi]);
    if (low[vi] >= disc[pi]) {
      if (p != 0) is_cut[pi] = 1;
      std::vector<Vertex> block;
      while (true) {
        Edge e = edge_stack.back();
        edge_stack.pop_back();
        block.push_back(e.u);
        block.push_back(e.v);
        if (e.u == p && e.v == v) break;
      }
      out.blocks.emplace_back(std::move(block));
    }
  }
  if (root_children > 1) is_cut[0] = 1;
  for (std::size_t v = 0; v < n; ++v)
    if (is_cut[v]) out.cut_vertices.insert(static_cast<Vertex>(v));
  std::sort(out.blocks.begin(), out.blocks.end());
  return out;
}

bool is_biconnected(const Graph& g) {
  return g.order() >= 2 && is_connected(g) && cut_vertices_and_blocks(g).cut_vertices.empty();
}

namespace {

// Connectivity of the subgraph induced by `members`; empty sets are disconnected.
bool subset_connected(const Graph& g, const std::vector<Vertex>& members) {
  if (members.empty()) return false;
  std::vector<char> inside(static_cast<std::size_t>(g.order()), 0), seen(inside.size(), 0);
  for (Vertex v : members) inside[static_cast<std::size_t>(v)] = 1;
  std::queue<Vertex> q;
  q.push(members.front());
  seen[static_cast<std::size_t>(members.front())] = 1;
  std::size_t count = 1;
  while (!q.empty()) {
    Vertex v = q.front();
    q.pop();
    for (Vertex w : g.neighbors(v)) {
      auto wi = static_cast<std::size_t>(w);
      if (inside[wi] && !seen[wi]) {
        seen[wi] = 1;
        ++count;
        q.push(w);
      }
    }
  }
  return count == members.size();
}

}  // namespace

LocalConnectivity is_locally_connected(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v) {
    auto adj = g.neighbors(v);
    if (!subset_connected(g, std::vector<Vertex>(adj.begin(), adj.end()))) return {false, v};
  }
  return {true, std::nullopt};
}

bool every_block_locally_connected(const Graph& g) {
  for (const VertexSet& block : cut_vertices_and_blocks(g).blocks)
    if (!is_locally_connected(g.induced(block)).holds) return false;
  return true;
}

std::vector<Vertex> lex_bfs(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<std::vector<int>> label(n);
  std::vector<char> numbered(n, 0);
  std::vector<Vertex> order;
  order.reserve(n);
  for (int step = static_cast<int>(n); step > 0; --step) {
    std::size_t best = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (numbered[v]) continue;
      if (best == n || label[v] > label[best]) best = v;
    }
    numbered[best] = 1;
    order.push_back(static_cast<Vertex>(best));
    for (Vertex w : g.neighbors(static_cast<Vertex>(best)))
      if (!numbered[static_cast<std::size_t>(w)]) label[static_cast<std::size_t>(w)].push_back(step);
  }
  return order;
}

ChordalTest is_chordal(const Graph& g) {
  std::vector<Vertex> peo = lex_bfs(g);
  std::reverse(peo.begin(), peo.end());
  std::vector<std::size_t> pos(peo.size());
  for (std::size_t i = 0; i < peo.size(); ++i) pos[static_cast<std::size_t>(peo[i])] = i;

  for (Vertex v : peo) {
    std::vector<Vertex> later;
    for (Vertex w : g.neighbors(v))
      if (pos[static_cast<std::size_t>(w)] > pos[static_cast<std::size_t>(v)]) later.push_back(w);
    if (later.empty()) continue;
    Vertex parent = *std::min_element(later.begin(), later.end(), [&](Vertex a, Vertex b) {
      return pos[static_cast<std::size_t>(a)] < pos[static_cast<std::size_t>(b)];
    });
    for (Vertex w : later)
      if (w != parent && !g.adjacent(parent, w)) return {false, {}};
  }
  return {true, std::move(peo)};
}

bool is_vertex_cover(const Graph& g, const VertexSet& s) {
  for (const Edge& e : g.edges())
    if (!s.contains(e.u) && !s.contains(e.v)) return false;
  return true;
}

bool induces_connected(const Graph& g, const VertexSet& s) { return subset_connected(g, s.ids()); }

bool is_connected_cover(const Graph& g, const VertexSet& s) {
  return is_vertex_cover(g, s) && induces_connected(g, s);
}

}  // namespace evc
