#include <doctest.h>

#include "evc/characterization.hpp"
#include "evc/errors.hpp"
#include "evc/gadgets.hpp"
#include "evc/game.hpp"
#include "evc/json_io.hpp"
#include "helpers.hpp"
#include "oracles.hpp"
#include "pool.hpp"

using namespace evc;

namespace {

const ClassFEvidence kEstablished{EvidenceKind::every_block_locally_connected, false};

}  // namespace

TEST_SUITE("characterization") {
  TEST_CASE("necessary condition examples") {
    NecessaryCondition p = necessary_condition(p4());
    CHECK_FALSE(p.holds);
    CHECK(p.failing_vertex == 0);  // leaf a
    CHECK(necessary_condition(k4()).holds);
    CHECK(necessary_condition(fig4_instance()).holds);

    NecessaryCondition t = necessary_condition(two_triangles());
    CHECK_FALSE(t.holds);
    CHECK(t.failing_vertex == two_triangles().id("c"));
    CHECK(necessary_condition(edge_list("a b")).holds);
    CHECK_THROWS_AS(necessary_condition(edge_list("a b\nc d")), PreconditionError);
  }

  TEST_CASE("class F evidence") {
    CHECK(class_f_membership(k4(), ClassFMode::sufficient).kind == EvidenceKind::every_block_locally_connected);
    CHECK(class_f_membership(c6(), ClassFMode::sufficient).kind == EvidenceKind::unknown);
    ClassFEvidence c6x = class_f_membership(c6(), ClassFMode::exhaustive);
    CHECK_FALSE(c6x.established());
    CHECK(c6x.refuted);
    ClassFEvidence f4 = class_f_membership(fig4_instance(), ClassFMode::exhaustive);
    CHECK_FALSE(f4.established());
    CHECK(f4.refuted);
    CHECK(class_f_membership(c4(), ClassFMode::assume).kind == EvidenceKind::assumed);
    CHECK(class_f_membership(p4(), ClassFMode::exhaustive).kind == EvidenceKind::exhaustive);
  }

  TEST_CASE("verdicts") {
    CharReport tt = characterize(two_triangles(), ClassFMode::sufficient);
    CHECK(tt.verdict == Verdict::evc_equals_mvc_plus_1);
    CHECK(tt.mvc == 2);
    CHECK(tt.evc == 3);
    CHECK(tt.biconnected);
    CHECK(tt.failing_vertex == two_triangles().id("c"));

    CharReport k = characterize(k4(), ClassFMode::sufficient);
    CHECK(k.verdict == Verdict::evc_equals_mvc);
    CHECK(k.evc == 3);

    CharReport c = characterize(c4(), ClassFMode::sufficient);
    CHECK(c.verdict == Verdict::undetermined);
    CHECK_FALSE(c.evc);
    CHECK(c.mvc == 2);

    CHECK(decide_evc_equals_mvc(k4(), ClassFEvidence{}).verdict == Verdict::undetermined);

    // A leaf on a non-biconnected graph: the characterization only says evc > mvc.
    CharReport p = characterize(p4(), ClassFMode::sufficient);
    CHECK(p.verdict == Verdict::evc_exceeds_mvc);
    CHECK_FALSE(p.evc);
    CHECK(p.cut_vertices == labels(p4(), {"b", "c"}));

    CharReport f = characterize(fig4_instance(), ClassFMode::assume);
    CHECK(f.verdict == Verdict::evc_equals_mvc);
    CHECK(f.evc == 5);  // the assumption is taken at face value; the game solver says 6
  }

  TEST_CASE("least k covering every vertex") {
    CHECK(evc_min_k_all_vertices(k4(), kEstablished) == 3);
    CHECK(evc_min_k_all_vertices(two_triangles(), kEstablished) == 3);
    CHECK_THROWS_AS(evc_min_k_all_vertices(k4(), ClassFEvidence{}), EvidenceError);
    CHECK_THROWS_AS(evc_min_k_all_vertices(p3(), kEstablished), EvidenceError);
    CHECK(evc_min_k_all_vertices(p3(), ClassFEvidence{EvidenceKind::assumed, false}) == 2);
  }

  TEST_CASE("certificates") {
    auto a = np_certificate(k3(), 2, kEstablished);
    CHECK(a.size() == 3);
    CHECK(verify_certificate(k3(), 2, a));
    auto b = np_certificate(k4(), 3, kEstablished);
    CHECK(b.size() == 4);
    CHECK(verify_certificate(k4(), 3, b));
    auto c = np_certificate(two_triangles(), 3, kEstablished);
    CHECK(verify_certificate(two_triangles(), 3, c));
    CHECK_FALSE(verify_certificate(k4(), 2, b));
    CHECK_FALSE(verify_certificate(k4(), 3, a));
    CHECK_THROWS_AS(np_certificate(two_triangles(), 2, kEstablished), PreconditionError);
    CHECK_THROWS_AS(np_certificate(k4(), 5, kEstablished), PreconditionError);

    auto broken = b;
    broken[1].cover = VertexSet{0, 2, 3};
    CHECK_FALSE(verify_certificate(k4(), 3, broken));
  }

  TEST_CASE("report JSON") {
    Graph g = two_triangles();
    auto j = char_report_json(g, characterize(g, ClassFMode::sufficient));
    CHECK(j["verdict"] == "evc-equals-mvc-plus-1");
    CHECK(j["failing_vertex"] == "c");
    CHECK(j["class_f_evidence"] == "every-block-locally-connected");
    CHECK(j["evc"] == 3);
    CHECK(j["cut_vertices"].empty());
    auto u = char_report_json(c4(), characterize(c4(), ClassFMode::sufficient));
    CHECK(u["evc"].is_null());
    CHECK(u["failing_vertex"].is_null());
    CHECK(u["class_f_evidence"] == "unknown");
  }

  TEST_CASE("property: biconnected chordal graphs match the game solver") {
    for (const Graph& g : pool::biconnected_chordal(40, 9, 101)) {
      ClassFEvidence e = class_f_membership(g, ClassFMode::sufficient);
      REQUIRE(e.established());
      int k = evc_min_k_all_vertices(g, e);
      CHECK(k == evc_exact(g).evc);
      CharReport r = decide_evc_equals_mvc(g, e, SolverMode::polynomial);
      CHECK(r.evc == k);
      CHECK(verify_certificate(g, k, np_certificate(g, k, e, SolverMode::polynomial)));
    }
  }

  TEST_CASE("property: established verdicts agree with the game solver") {
    auto graphs = pool::connected_graphs(2, 6);
    int decided = 0;
    for (const Graph& g : graphs) {
      CharReport r = characterize(g, ClassFMode::sufficient);
      if (r.verdict == Verdict::undetermined) continue;
      ++decided;
      int exact = evc_exact(g).evc;
      if (r.evc) CHECK(*r.evc == exact);
      if (r.verdict == Verdict::evc_exceeds_mvc) CHECK(exact > r.mvc);
      // the necessary condition never rejects a graph with evc = mvc
      if (exact == r.mvc) CHECK(r.necessary_condition);
    }
    CHECK(decided > 50);
  }
}
