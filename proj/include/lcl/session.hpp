#pragma once

// Named fixtures and the stateful mutation session behind the CLI and the
// HTTP API. A session state is a pure function of (fixture, trail).

#include "lcl/ice_quiver.hpp"
#include "lcl/seed.hpp"

#include <json.hpp>
#include <string>
#include <vector>

namespace lcl {

struct Fixture {
    nlohmann::json descriptor; // normalised input
    IceQuiver quiver;
};

// {"fixture": name} or {"type": "A3", "word": [...], "a": a, "b": b}. Throws UnknownFixture / BadFixture.
Fixture build_fixture(const nlohmann::json& desc);
std::vector<std::string> fixture_names();

class Session {
public:
    explicit Session(const nlohmann::json& desc);

    // Each of these bumps the version.
    void mutate(int vertex); // IllegalVertex
    void undo();             // EmptyUndoStack
    void reset();
    void build(const nlohmann::json& desc);
    // {"op": "mutate", "vertex": v} | {"op": "undo"} | {"op": "reset"} | {"op": "build", "fixture": ...}
    void apply(const nlohmann::json& action);

    int version() const { return version_; }
    int depth() const { return static_cast<int>(stack_.size()) - 1; }
    const Fixture& fixture() const { return fixture_; }
    const IceQuiver& quiver() const { return stack_.back().quiver; }
    const LambdaSeed& seed() const { return stack_.back().seed; }
    const VertexOrder& order() const { return order_; }
    const std::vector<nlohmann::json>& log() const { return log_; }

    // Quiver, colours, Lambda, g-vectors; no version, so undo restores it byte for byte.
    nlohmann::json state() const;
    std::string state_hash() const;
    // u, v name cluster variables: "<id>" in the current seed, "init:<id>" in the initial one.
    nlohmann::json invariants(const std::string& u, const std::string& v) const;
    // dot | json | matrix. Throws BadFormat.
    std::string export_doc(const std::string& format) const;
    // Inverse of export_doc("json").
    static Session import_state(const nlohmann::json& state);

private:
    struct Snapshot {
        IceQuiver quiver;
        IceQuiver framed; // framed unfrozen part, for colours
        LambdaSeed seed;
        std::vector<std::vector<std::int64_t>> g; // by matrix index
    };
    void init(const nlohmann::json& desc);
    Snapshot snapshot_of(IceQuiver q, IceQuiver framed, LambdaSeed s) const;
    ClusterMonomial variable(const std::string& token) const;

    Fixture fixture_;
    VertexOrder order_;
    LambdaSeed root_;
    std::vector<Snapshot> stack_;
    std::vector<nlohmann::json> log_;
    int version_ = 0;
};

// FNV-1a, printed as 16 hex digits.
std::string stable_hash(const std::string& s);

} // namespace lcl
