#include <doctest.h>

#include <cstdint>
#include <random>

#include "evc/characterization.hpp"
#include "evc/defense.hpp"
#include "evc/errors.hpp"
#include "evc/gadgets.hpp"
#include "evc/json_io.hpp"
#include "evc/structure.hpp"
#include "evc/vertex_cover.hpp"
#include "helpers.hpp"
#include "oracles.hpp"
#include "pool.hpp"

using namespace evc;

namespace {

DefenseSession session_for(const Graph& g, std::optional<Configuration> start = {}) {
  return DefenseSession::create(g, characterize(g, ClassFMode::sufficient), start);
}

std::vector<std::pair<int, int>> pairs_of(const MoveSet& moves) {
  std::vector<std::pair<int, int>> out;
  for (const Move& m : moves) out.emplace_back(m.from, m.to);
  return out;
}

}  // namespace

TEST_SUITE("defense") {
  TEST_CASE("matching strategy examples") {
    Graph k = k4();
    DefenseSession s = session_for(k);
    CHECK(s.mode() == StrategyMode::hall_equal);
    CHECK(s.config() == VertexSet{0, 1, 2});
    const RoundRecord& r = s.defend(2, 3);
    CHECK(r.moves == MoveSet{{0, 0}, {1, 1}, {2, 3}});
    CHECK(r.config == VertexSet{0, 1, 3});
    CHECK(r.round == 1);

    // both ends guarded: swap, configuration unchanged
    const RoundRecord& sw = s.defend(0, 1);
    CHECK(sw.moves == MoveSet{{0, 1}, {1, 0}, {3, 3}});
    CHECK(sw.config == VertexSet{0, 1, 3});

    Graph p = edge_list("a b");
    DefenseSession e = session_for(p);
    CHECK(e.config() == labels(p, {"a"}));
    CHECK(e.defend(0, 1).config == labels(p, {"b"}));
    CHECK(e.defend(0, 1).config == labels(p, {"a"}));
  }

  TEST_CASE("shifting strategy examples") {
    Graph g = two_triangles();
    DefenseSession s = session_for(g);
    CHECK(s.mode() == StrategyMode::connected_plus_one);
    CHECK(s.base_cover() == labels(g, {"a", "b"}));
    CHECK(s.extra_vertex() == g.id("c"));
    const RoundRecord& r = s.defend(g.id("b"), g.id("d"));
    CHECK(r.moves == MoveSet{{0, 0}, {1, 3}, {2, 1}});
    CHECK(r.config == labels(g, {"a", "b", "d"}));
    CHECK(s.extra_vertex() == g.id("d"));
    const RoundRecord& sw = s.defend(g.id("a"), g.id("d"));
    CHECK(sw.moves == MoveSet{{0, 3}, {1, 1}, {3, 0}});

    CHECK_THROWS_AS(moves_plus_one(g, labels(g, {"a", "b"}), g.id("a"), 0, 1), PreconditionError);
    CHECK_THROWS_AS(moves_plus_one(g, labels(g, {"a"}), g.id("b"), g.id("c"), g.id("d")), PreconditionError);
    CHECK_THROWS_AS(moves_plus_one(g, labels(g, {"a"}), g.id("b"), g.id("c"), g.id("b")), InvariantError);
  }

  TEST_CASE("refinement on a four-cycle") {
    Graph c = c4();
    RefinementTrace t = refine_candidate(c, labels(c, {"a", "c"}), labels(c, {"b", "d"}), c.id("b"), {});
    CHECK(t.iterations.empty());
    CHECK(t.final == labels(c, {"b", "d"}));
    MoveSet m = moves_hall_equal(c, labels(c, {"a", "c"}), t.final, {c.id("a"), c.id("b")});
    CHECK(m == MoveSet{{0, 1}, {2, 3}});
    CHECK_THROWS_AS(refine_candidate(c, labels(c, {"a", "c"}), labels(c, {"b", "d"}), c.id("a"), {}),
                    PreconditionError);
    CHECK_THROWS_AS(refine_candidate(c, labels(c, {"a", "c"}), labels(c, {"b", "c", "d"}), c.id("b"), {}),
                    PreconditionError);
  }

  TEST_CASE("move set validation") {
    Graph c = c4();
    VertexSet s = labels(c, {"a", "c"}), t = labels(c, {"b", "d"});
    Edge ab = Edge::canonical(0, 1);
    CHECK(verify_moveset(c, s, t, {{0, 1}, {2, 3}}, ab));
    CHECK(verify_moveset(c, s, t, {{0, 3}, {2, 1}}, Edge::canonical(0, 3)));
    CHECK_FALSE(verify_moveset(c, s, t, {{0, 3}, {2, 1}}, Edge::canonical(2, 3)));
    CHECK_FALSE(verify_moveset(c, s, s, {{0, 0}, {2, 2}}, ab));  // nobody crosses
    CHECK_FALSE(verify_moveset(c, s, labels(c, {"a", "b"}), {{0, 0}, {2, 1}}, ab));  // not a cover
    CHECK_FALSE(verify_moveset(c, s, t, {{0, 1}}, ab));
    CHECK_FALSE(verify_moveset(c, s, t, {{0, 1}, {0, 3}}, ab));
    CHECK_FALSE(verify_moveset(c, s, labels(c, {"b", "d"}), {{0, 1}, {2, 1}}, ab));
    CHECK_FALSE(verify_moveset(k4(), VertexSet{0, 1}, VertexSet{2, 3}, {{0, 2}, {1, 3}}, std::nullopt));
    Graph p = p4();
    CHECK_FALSE(verify_moveset(p, VertexSet{0, 2}, VertexSet{3, 1}, {{0, 3}, {2, 1}}, std::nullopt));  // a-d not adjacent
  }

  TEST_CASE("session errors") {
    Graph k = k4();
    DefenseSession s = session_for(k);
    CHECK_THROWS_AS(s.defend(0, 0), PreconditionError);
    CHECK_THROWS_AS(s.defend(0, 7), PreconditionError);
    CHECK_THROWS_AS(session_for(k, VertexSet{0, 1}), PreconditionError);
    CHECK_THROWS_AS(session_for(c6()), EvidenceError);
    CHECK_THROWS_AS(session_for(p4()), EvidenceError);
    Graph g = two_triangles();
    CHECK_THROWS_AS(session_for(g, labels(g, {"c", "d", "a"})), PreconditionError);
    DefenseSession started = session_for(g, labels(g, {"a", "b", "d"}));
    CHECK(started.extra_vertex() == g.id("d"));
  }

  TEST_CASE("complete graph survives a long random run") {
    Graph k = complete_graph(5);
    DefenseSession s = session_for(k);
    std::mt19937_64 rng(5);
    auto edges = k.edges();
    for (int i = 0; i < 1000; ++i) {
      const Edge& e = edges[rng() % edges.size()];
      Configuration before = s.config();
      const RoundRecord& r = s.defend(e.u, e.v);
      REQUIRE(oracle::round_ok(k, before.ids(), r.config.ids(), pairs_of(r.moves), e.u, e.v));
    }
    CHECK(s.round() == 1000);
    CHECK(s.log().size() == 1000);
  }

  TEST_CASE("strategy gives up on a graph outside its hypotheses") {
    Graph g = fig4_instance();
    CharReport assumed = characterize(g, ClassFMode::assume);
    DefenseSession s = DefenseSession::create(g, assumed, labels(g, {"y1", "y2", "y3", "y4", "y5"}));
    s.defend(g.id("x2"), g.id("y4"));
    CHECK(s.config() == labels(g, {"x1", "x2", "x3", "x4", "x5"}));
    try {
      s.defend(g.id("x1"), g.id("y5"));
      FAIL("expected DefenseImpossible");
    } catch (const DefenseImpossible& e) {
      CHECK(e.round() == 2);
    }
    CHECK(s.finished());
    CHECK(s.round() == 1);
    CHECK_THROWS_AS(s.defend(g.id("x1"), g.id("y1")), PreconditionError);
  }

  TEST_CASE("round log JSON") {
    Graph g = two_triangles();
    DefenseSession s = session_for(g);
    auto j = round_json(g, s.defend(g.id("d"), g.id("b")));
    CHECK(j["round"] == 1);
    CHECK(j["attack"] == nlohmann::json{"d", "b"});
    CHECK(j["moves"] == nlohmann::json::parse(R"([["a", "a"], ["b", "d"], ["c", "b"]])"));
    CHECK(j["config"] == nlohmann::json{"a", "b", "d"});
  }

  TEST_CASE("property: refinement shrinks the distance and ends matchable") {
    auto graphs = pool::connected_graphs(3, 6);
    auto chordal = pool::biconnected_chordal(30, 8, 13);
    graphs.insert(graphs.end(), chordal.begin(), chordal.end());
    std::size_t runs = 0, repaired = 0;
    for (const Graph& g : graphs) {
      CharReport r = characterize(g, ClassFMode::sufficient);
      if (r.verdict != Verdict::evc_equals_mvc) continue;
      const VertexSet& x = r.cut_vertices;
      std::vector<VertexSet> mins;
      for (const VertexSet& c : enumerate_covers(g, r.mvc))
        if (x.is_subset_of(c)) mins.push_back(c);
      for (const VertexSet& si : mins) {
        for (const Edge& e : g.edges()) {
          for (auto [u, v] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
            if (!si.contains(u) || si.contains(v)) continue;
            for (const VertexSet& cand : mins) {
              if (!cand.contains(v)) continue;
              RefinementTrace t = refine_candidate(g, si, cand, v, x);
              ++runs;
              CHECK(t.iterations.size() < std::size_t(g.order()));
              if (!t.iterations.empty()) ++repaired;
              std::size_t prev = SIZE_MAX;
              for (const RefinementStep& step : t.iterations) {
                std::size_t d = (step.candidate ^ si).size();
                CHECK(d < prev);
                prev = d;
              }
              CHECK((t.final ^ si).size() < prev);
              CHECK(oracle::covers(g, t.final.mask()));
              CHECK(x.is_subset_of(t.final));
              CHECK(t.final.contains(v));
              MoveSet m = moves_hall_equal(g, si, t.final, {u, v});
              CHECK(oracle::round_ok(g, si.ids(), t.final.ids(), pairs_of(m), u, v));
            }
          }
        }
      }
    }
    CHECK(runs > 1000);
    CHECK(repaired > 0);
  }
}
