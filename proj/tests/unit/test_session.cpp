#include <doctest.h>

#include "fixtures.hpp"
#include "lcl/error.hpp"
#include "lcl/session.hpp"
#include "lcl/verify.hpp"

#include <functional>
#include <sstream>

namespace {

std::string code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const lcl::Error& e) {
        return e.code();
    }
    return "";
}

} // namespace

TEST_CASE("fixtures") {
    CHECK(lcl::build_fixture("u-to-f").quiver.vertices().size() == 2);
    // The named A3 example is the hand-drawn quiver.
    auto ex = lcl::build_fixture(nlohmann::json{{"fixture", "A3-example"}});
    CHECK(lcl::find_iso(ex.quiver, fx::a3_example()).has_value());
    auto generic = lcl::build_fixture(nlohmann::json{{"type", "A3"}, {"word", {1, 2, 3, 2, 1, 2}}, {"a", -2}, {"b", 6}});
    CHECK(lcl::to_json(generic.quiver) == lcl::to_json(ex.quiver));
    CHECK(code_of([] { lcl::build_fixture("nope"); }) == "UnknownFixture");
    CHECK(code_of([] { lcl::build_fixture(nlohmann::json{{"type", "A3"}}); }) == "BadFixture");
}

TEST_CASE("session transitions") {
    lcl::Session s("u-to-f");
    const auto start = s.state().dump();
    const auto h0 = s.state_hash();
    CHECK(s.version() == 0);
    CHECK(s.state()["colors"]["1"] == "green");

    s.mutate(1);
    CHECK(s.version() == 1);
    CHECK(s.state()["colors"]["1"] == "red");
    CHECK(s.state()["g_vectors"]["1"] == std::vector<int>{-1, 1});
    CHECK(s.state_hash() != h0);
    auto inv = s.invariants("1", "init:1");
    CHECK(inv["f_invariant"] == 2);
    CHECK(inv["d"] == 1);
    CHECK(inv["lambda"].is_null());
    CHECK(s.invariants("1", "2")["f_invariant"] == 0);

    s.undo();
    CHECK(s.state().dump() == start);
    CHECK(s.state_hash() == h0);
    CHECK(s.version() == 2);
    CHECK(code_of([&] { s.undo(); }) == "EmptyUndoStack");
    CHECK(code_of([&] { s.mutate(2); }) == "IllegalVertex");
    CHECK(code_of([&] { s.mutate(9); }) == "IllegalVertex");

    s.mutate(1);
    s.mutate(1);
    s.reset();
    CHECK(s.depth() == 0);
    CHECK(s.state().dump() == start);
    CHECK(s.version() == 5);
}

TEST_CASE("replaying the action log reproduces the state") {
    lcl::Session s("A3-adapted");
    for (int v : {1, 3, 4, 1, 6}) s.mutate(v);
    s.undo();
    s.mutate(3);
    lcl::Session replay("A3-adapted");
    for (const auto& act : s.log()) replay.apply(act);
    CHECK(replay.state_hash() == s.state_hash());
    CHECK(code_of([&] { replay.apply({{"op", "jump"}}); }) == "BadRequest");
}

TEST_CASE("exports") {
    lcl::Session s("A3-example");
    auto dot = s.export_doc("dot");
    int nodes = 0, boxed = 0;
    std::istringstream lines(dot);
    for (std::string line; std::getline(lines, line);) {
        if (line.find("[label=") == std::string::npos || line.find(" -> ") != std::string::npos) continue;
        ++nodes;
        if (line.find("shape=box") != std::string::npos) ++boxed;
    }
    CHECK(nodes == 9);
    CHECK(boxed == 3);

    s.mutate(0);
    s.mutate(3);
    auto doc = nlohmann::json::parse(s.export_doc("json"));
    auto back = lcl::Session::import_state(doc);
    CHECK(back.state() == s.state());

    auto mat = nlohmann::json::parse(s.export_doc("matrix"));
    for (const char* k : {"bhat", "btilde", "lambda", "d"}) CHECK(mat.contains(k));
    CHECK(code_of([&] { s.export_doc("svg"); }) == "BadFormat");
}

TEST_CASE("verify suite") {
    auto r = lcl::verify_suite("A1");
    CHECK(r["failed"] == 0);
    CHECK(r["passed"].get<int>() > 5);
    auto u = lcl::verify_suite("B7");
    CHECK(u["results"].empty());
    CHECK(u["warnings"].size() == 1);
}
