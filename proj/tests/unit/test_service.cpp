#include <doctest.h>

#include <httplib.h>

#include <thread>

#include "evc/http_server.hpp"
#include "evc/service.hpp"

using namespace evc;
using nlohmann::json;

namespace {

std::string create_k4(SessionService& svc) {
  ServiceResponse r = svc.create(R"({"builtin": "K4"})");
  REQUIRE(r.status == 200);
  return r.body["id"].get<std::string>();
}

std::string attack_body(const std::string& a, const std::string& b) { return json{{"edge", {a, b}}}.dump(); }

}  // namespace

TEST_SUITE("service") {
  TEST_CASE("session lifecycle") {
    SessionService svc;
    ServiceResponse c = svc.handle("POST", "/api/session", R"({"builtin": "K4"})");
    REQUIRE(c.status == 200);
    CHECK(c.body["mode"] == "hall-equal");
    CHECK(c.body["verdict"] == "evc-equals-mvc");
    CHECK(c.body["config"] == json{"0", "1", "2"});
    CHECK(c.body["evc_bound"] == json{3, 4});
    CHECK(c.body["round"] == 0);
    const std::string id = c.body["id"];

    ServiceResponse a = svc.handle("POST", "/api/session/" + id + "/attack", attack_body("0", "1"));
    CHECK(a.status == 200);
    CHECK(a.body["defended"] == true);
    CHECK(a.body["moves"] == json::parse(R"([["0", "1"], ["1", "0"], ["2", "2"]])"));

    ServiceResponse b = svc.handle("POST", "/api/session/" + id + "/attack", R"({"edge": [2, 3]})");
    CHECK(b.status == 200);
    CHECK(b.body["config"] == json{"0", "1", "3"});

    ServiceResponse g = svc.handle("GET", "/api/session/" + id, "");
    CHECK(g.status == 200);
    CHECK(g.body["round"] == 2);
    CHECK(g.body["log"].size() == 2);
    CHECK(g.body["graph"]["vertices"].size() == 4);

    CHECK(svc.handle("DELETE", "/api/session/" + id, "").body["deleted"] == id);
    CHECK(svc.handle("GET", "/api/session/" + id, "").status == 404);
    CHECK(svc.session_count() == 0);
  }

  TEST_CASE("graph bodies") {
    SessionService svc;
    json tt = json::parse(R"({"vertices": ["a", "b", "c", "d"],
                              "edges": [["a", "b"], ["a", "c"], ["b", "c"], ["a", "d"], ["b", "d"]]})");
    ServiceResponse r = svc.create(tt.dump());
    REQUIRE(r.status == 200);
    CHECK(r.body["mode"] == "connected-plus-one");
    CHECK(r.body["evc_bound"] == json{2, 3});
    CHECK(r.body["config"].size() == 3);

    ServiceResponse w = svc.create(json{{"graph", tt}, {"start", {"a", "b", "d"}}}.dump());
    REQUIRE(w.status == 200);
    CHECK(w.body["config"] == json{"a", "b", "d"});
    CHECK(svc.create(json{{"graph", tt}, {"start", {"c", "d", "a"}}}.dump()).status == 400);
    CHECK(svc.create(json{{"graph", tt}, {"start", "a"}}.dump()).status == 400);
  }

  TEST_CASE("error statuses") {
    SessionService svc;
    ServiceResponse f = svc.create(R"({"builtin": "fig4"})");
    CHECK(f.status == 422);
    CHECK(f.body["report"]["verdict"] == "undetermined");
    CHECK(svc.create(R"({"builtin": "P4"})").status == 422);
    CHECK(svc.create("not json").status == 400);
    CHECK(svc.create("[1, 2]").status == 400);
    CHECK(svc.create(R"({"builtin": 4})").status == 400);
    CHECK(svc.create(R"({"builtin": "nope"})").status == 400);
    CHECK(svc.create(R"({"vertices": ["a", "b", "c"], "edges": [["a", "b"]]})").status == 422);
    CHECK(svc.create(R"({"vertices": ["a"], "edges": [["a", "z"]]})").status == 400);

    const std::string id = create_k4(svc);
    CHECK(svc.handle("POST", "/api/session/nope/attack", attack_body("0", "1")).status == 404);
    CHECK(svc.handle("POST", "/api/session/" + id + "/attack", "{}").status == 400);
    CHECK(svc.handle("POST", "/api/session/" + id + "/attack", R"({"edge": [0.5, 1]})").status == 400);
    CHECK(svc.handle("POST", "/api/session/" + id + "/attack", attack_body("0", "0")).status == 409);
    CHECK(svc.handle("POST", "/api/session/" + id + "/attack", attack_body("0", "9")).status == 409);
    CHECK(svc.handle("PUT", "/api/session/" + id, "").status == 405);
    CHECK(svc.handle("GET", "/api/session", "").status == 405);
    CHECK(svc.handle("GET", "/api/session/" + id + "/attack", "").status == 405);
    CHECK(svc.handle("GET", "/api/other", "").status == 404);
    CHECK(svc.handle("DELETE", "/api/session/nope", "").status == 404);
  }

  TEST_CASE("deleted sessions are gone") {
    SessionService svc;
    const std::string id = create_k4(svc);
    const std::string other = create_k4(svc);
    CHECK(id != other);
    svc.remove(id);
    CHECK(svc.attack(id, attack_body("0", "1")).status == 404);
    CHECK(svc.attack(other, attack_body("0", "1")).status == 200);
    CHECK(svc.session_count() == 1);
  }

  TEST_CASE("concurrent attacks on one session are serialized") {
    SessionService svc;
    const std::string id = create_k4(svc);
    std::vector<std::thread> workers;
    for (int t = 0; t < 4; ++t) {
      workers.emplace_back([&svc, &id, t]() {
        for (int i = 0; i < 50; ++i) {
          int a = (t + i) % 4, b = (t + 2 * i + 1) % 4;
          if (a == b) b = (b + 1) % 4;
          ServiceResponse r = svc.attack(id, attack_body(std::to_string(a), std::to_string(b)));
          if (r.status != 200 || r.body["defended"] != true) throw std::runtime_error("attack failed");
        }
      });
    }
    for (auto& w : workers) w.join();
    ServiceResponse g = svc.get(id);
    CHECK(g.body["round"] == 200);
    auto log = g.body["log"];
    REQUIRE(log.size() == 200);
    for (std::size_t i = 0; i < log.size(); ++i) CHECK(log[i]["round"] == i + 1);
  }

  TEST_CASE("HTTP round trip") {
    SessionService svc;
    HttpServer server(svc);
    int port = server.start("127.0.0.1", 0);
    REQUIRE(port > 0);
    httplib::Client cli("127.0.0.1", port);
    auto c = cli.Post("/api/session", R"({"builtin": "C4"})", "application/json");
    REQUIRE(c);
    CHECK(c->status == 422);

    c = cli.Post("/api/session", R"({"builtin": "two-triangles"})", "application/json");
    REQUIRE(c);
    REQUIRE(c->status == 200);
    std::string id = json::parse(c->body)["id"];
    auto a = cli.Post(("/api/session/" + id + "/attack").c_str(), attack_body("b", "d"), "application/json");
    REQUIRE(a);
    CHECK(a->status == 200);
    CHECK(json::parse(a->body)["config"] == json{"a", "b", "d"});
    auto bad = cli.Post(("/api/session/" + id + "/attack").c_str(), attack_body("c", "d"), "application/json");
    REQUIRE(bad);
    CHECK(bad->status == 409);
    auto g = cli.Get(("/api/session/" + id).c_str());
    REQUIRE(g);
    CHECK(json::parse(g->body)["log"].size() == 1);
    auto d = cli.Delete(("/api/session/" + id).c_str());
    REQUIRE(d);
    CHECK(d->status == 200);
    CHECK(cli.Get(("/api/session/" + id).c_str())->status == 404);
    server.stop();
  }
}
