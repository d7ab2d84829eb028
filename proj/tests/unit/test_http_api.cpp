#include <doctest.h>

#include "lcl/http_api.hpp"

#include <httplib.h>

#include <thread>

namespace {

struct Server {
    httplib::Server srv;
    lcl::SessionStore store;
    std::thread th;
    int port = 0;

    Server() {
        lcl::register_routes(srv, store);
        port = srv.bind_to_any_port("127.0.0.1");
        th = std::thread([this] { srv.listen_after_bind(); });
        srv.wait_until_ready();
    }
    ~Server() {
        srv.stop();
        th.join();
    }
};

nlohmann::json parse(const httplib::Result& r) {
    REQUIRE(r);
    return nlohmann::json::parse(r->body);
}

} // namespace

TEST_CASE("http: build, mutate, undo, reset") {
    Server s;
    httplib::Client c("127.0.0.1", s.port);

    auto none = c.Get("/api/state");
    REQUIRE(none);
    CHECK(none->status == 404);
    CHECK(parse(none)["error"] == "NoSession");

    auto built = c.Post("/api/build", R"({"fixture":"u-to-f"})", "application/json");
    REQUIRE(built);
    CHECK(built->status == 200);
    auto b = parse(built);
    CHECK(b["version"] == 0);
    const std::string h0 = b["hash"];

    auto m = parse(c.Post("/api/mutate", R"({"vertex":1})", "application/json"));
    CHECK(m["version"] == 1);
    CHECK(m["state"]["colors"]["1"] == "red");
    CHECK(m["state"]["g_vectors"]["1"] == std::vector<int>{-1, 1});

    auto inv = parse(c.Get("/api/invariants?u=1&v=init:1"));
    CHECK(inv["f_invariant"] == 2);
    CHECK(inv["d"] == 1);

    auto u = parse(c.Post("/api/undo", "", "application/json"));
    CHECK(u["hash"] == h0);
    CHECK(u["state"] == b["state"]);

    auto e = c.Post("/api/undo", "", "application/json");
    REQUIRE(e);
    CHECK(e->status == 400);
    CHECK(parse(e)["error"] == "EmptyUndoStack");

    auto frozen = c.Post("/api/mutate", R"({"vertex":2})", "application/json");
    CHECK(frozen->status == 400);
    CHECK(parse(frozen)["error"] == "IllegalVertex");

    auto bad = c.Post("/api/mutate", "not json", "application/json");
    CHECK(bad->status == 400);
    CHECK(parse(bad)["error"] == "BadRequest");

    c.Post("/api/mutate", R"({"vertex":1})", "application/json");
    auto r = parse(c.Post("/api/reset", "", "application/json"));
    CHECK(r["hash"] == h0);
    CHECK(r["version"] == 4);

    auto dot = c.Get("/api/quiver.dot");
    REQUIRE(dot);
    CHECK(dot->body.starts_with("digraph"));

    auto nf = c.Get("/api/nothing");
    CHECK(nf->status == 404);
    CHECK(parse(nf)["error"] == "NotFound");

    auto unknown = c.Post("/api/build", R"({"fixture":"nope"})", "application/json");
    CHECK(unknown->status == 400);
    CHECK(parse(unknown)["error"] == "UnknownFixture");
}

TEST_CASE("http: sessions are independent and serialised") {
    Server s;
    httplib::Client c("127.0.0.1", s.port);
    parse(c.Post("/api/build?session=x", R"({"fixture":"A3-adapted"})", "application/json"));
    parse(c.Post("/api/build?session=y", R"({"fixture":"u-to-f"})", "application/json"));

    // Eight clients mutate session x concurrently at the same vertex: the
    // result is the same as eight sequential mutations (an involution).
    std::vector<std::thread> ts;
    for (int k = 0; k < 8; ++k)
        ts.emplace_back([&] {
            httplib::Client cc("127.0.0.1", s.port);
            cc.Post("/api/mutate?session=x", R"({"vertex":1})", "application/json");
        });
    for (auto& t : ts) t.join();
    auto x = parse(c.Get("/api/state?session=x"));
    CHECK(x["version"] == 8);
    CHECK(x["depth"] == 8);
    lcl::Session fresh("A3-adapted");
    CHECK(lcl::find_iso(lcl::quiver_from_json(x["state"]["quiver"]), fresh.quiver()).has_value());
    CHECK(x["state"]["g_vectors"] == fresh.state()["g_vectors"]);

    auto y = parse(c.Get("/api/state?session=y"));
    CHECK(y["version"] == 0);
    auto mat = parse(c.Get("/api/export?session=y&format=matrix"));
    CHECK(mat["lambda"]["data"] == nlohmann::json::array({{0, 2}, {-2, 0}}));
}
