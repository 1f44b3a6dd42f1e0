#include <doctest.h>

#include <map>

#include "evc/errors.hpp"
#include "evc/gadgets.hpp"
#include "evc/structure.hpp"
#include "helpers.hpp"
#include "oracles.hpp"
#include "pool.hpp"

using namespace evc;

namespace {

std::vector<Graph> structure_pool() {
  auto graphs = pool::connected_graphs(1, 7);
  auto extra = pool::random_graphs(150, 8, 11);
  graphs.insert(graphs.end(), extra.begin(), extra.end());
  return graphs;
}

}  // namespace

TEST_SUITE("structure") {
  TEST_CASE("cut vertices") {
    Graph path = p3();
    CHECK(cut_vertices_and_blocks(path).cut_vertices == labels(path, {"b"}));
    BlockDecomposition cyc = cut_vertices_and_blocks(c5());
    CHECK(cyc.cut_vertices.empty());
    CHECK(cyc.blocks.size() == 1);
    CHECK(cut_vertices_and_blocks(fig4_instance()).cut_vertices.empty());
    CHECK_THROWS_AS(cut_vertices_and_blocks(edge_list("a b\nc d")), PreconditionError);
  }

  TEST_CASE("bowtie blocks") {
    Graph g = edge_list("a b\nb c\na c\nc d\nd e\nc e");
    BlockDecomposition d = cut_vertices_and_blocks(g);
    CHECK(d.cut_vertices == labels(g, {"c"}));
    CHECK(d.blocks == std::vector<VertexSet>{labels(g, {"a", "b", "c"}), labels(g, {"c", "d", "e"})});
  }

  TEST_CASE("local connectivity") {
    CHECK(is_locally_connected(k4()).holds);
    LocalConnectivity cyc = is_locally_connected(c5());
    CHECK_FALSE(cyc.holds);
    CHECK(cyc.witness == 0);
    Graph path = p3();
    LocalConnectivity lp = is_locally_connected(path);
    CHECK_FALSE(lp.holds);
    CHECK(lp.witness == path.id("b"));
  }

  TEST_CASE("block local connectivity") {
    CHECK(every_block_locally_connected(edge_list("a b\nb c\na c\nc d\nd e\nc e")));
    CHECK(every_block_locally_connected(p4()));
    CHECK_FALSE(every_block_locally_connected(edge_list("a b\nb c\nc d\nd a\nd e\ne f\nd f")));
  }

  TEST_CASE("chordality") {
    CHECK_FALSE(is_chordal(c4()).chordal);
    CHECK(is_chordal(p4()).chordal);
    CHECK(is_chordal(edge_list("a b\na c\na d\nd e\nd f")).chordal);
    CHECK_FALSE(is_chordal(edge_list("a x\na y\na z\nb x\nb y\nb z")).chordal);
    ChordalTest t = is_chordal(k4());
    CHECK(t.chordal);
    CHECK(t.peo.size() == 4);
  }

  TEST_CASE("lex-bfs breaks ties by smallest id") {
    CHECK(lex_bfs(c5()) == std::vector<Vertex>{0, 1, 4, 2, 3});
  }

  TEST_CASE("cover predicates") {
    Graph g = c4();
    CHECK(is_vertex_cover(g, labels(g, {"a", "c"})));
    CHECK_FALSE(is_connected_cover(g, labels(g, {"a", "c"})));
    Graph t = k3();
    CHECK(is_vertex_cover(t, labels(t, {"a", "b"})));
    CHECK(is_connected_cover(t, labels(t, {"a", "b"})));
    Graph p = p3();
    CHECK_FALSE(is_vertex_cover(p, labels(p, {"a"})));
    CHECK_FALSE(induces_connected(p, {}));
  }

  TEST_CASE("property: cut vertices match component counting") {
    for (const Graph& g : structure_pool()) {
      BlockDecomposition d = cut_vertices_and_blocks(g);
      CHECK(d.cut_vertices.ids() == oracle::cut_vertices(g));
      std::map<Edge, int> owners;
      std::vector<int> membership(std::size_t(g.order()), 0);
      for (const VertexSet& b : d.blocks) {
        for (Vertex v : b) ++membership[std::size_t(v)];
        for (Vertex u : b)
          for (Vertex v : b)
            if (u < v && g.adjacent(u, v)) ++owners[Edge{u, v}];
      }
      for (const Edge& e : g.edges()) CHECK(owners[e] == 1);
      for (Vertex v = 0; v < g.order(); ++v) CHECK((membership[std::size_t(v)] >= 2) == d.cut_vertices.contains(v));
    }
  }

  TEST_CASE("property: chordality matches induced-cycle search") {
    for (const Graph& g : structure_pool()) {
      ChordalTest t = is_chordal(g);
      CHECK(t.chordal == !oracle::has_long_induced_cycle(g));
      if (t.chordal) CHECK(t.peo.size() == std::size_t(g.order()));
    }
  }

  TEST_CASE("property: local connectivity matches the definition") {
    for (const Graph& g : structure_pool()) CHECK(is_locally_connected(g).holds == oracle::locally_connected(g));
  }

  TEST_CASE("property: locally connected graphs have only connected covers") {
    int seen = 0;
    for (const Graph& g : structure_pool()) {
      if (!is_locally_connected(g).holds) continue;
      ++seen;
      for (oracle::Mask s = 0; s < (oracle::Mask{1} << g.order()); ++s)
        if (oracle::covers(g, s)) CHECK(oracle::induces_connected(g, s));
    }
    CHECK(seen > 20);
  }
}
