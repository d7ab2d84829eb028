#include "lcl/session.hpp"

#include "lcl/error.hpp"
#include "lcl/green_seq.hpp"
#include "lcl/interval_quiver.hpp"

#include <cstdio>

namespace lcl {

namespace {

struct Named {
    const char* name;
    const char* type;
    std::vector<int> word;
    int a, b;
};

const std::vector<Named>& named_intervals() {
    static const std::vector<Named> list = {
        {"A1", "A1", {1}, -1, 0},
        {"A2", "A2", {1, 2, 1}, -5, 0},
        {"A3-example", "A3", {1, 2, 3, 2, 1, 2}, -2, 6},
        {"A3-adapted", "A3", {3, 1, 2, 3, 1, 2}, -1, 6},
    };
    return list;
}

IceQuiver interval_quiver(const std::string& type, const std::vector<int>& word, int a, int b) {
    DynkinDiagram d = parse_dynkin(type);
    return build_interval(IndexSequence::extended(d, word), a, b).qp.quiver;
}

void drop_frozen_frozen(IceQuiver& q) {
    std::vector<std::string> gone;
    for (const auto& a : q.arrows())
        if (q.is_frozen(a.src) && q.is_frozen(a.dst)) gone.push_back(a.label);
    for (const auto& l : gone) q.remove_arrow(l);
}

} // namespace

std::vector<std::string> fixture_names() {
    std::vector<std::string> out{"u-to-f"};
    for (const auto& n : named_intervals()) out.push_back(n.name);
    return out;
}

Fixture build_fixture(const nlohmann::json& desc) {
    Fixture f;
    if (desc.is_string()) return build_fixture(nlohmann::json{{"fixture", desc}});
    if (!desc.is_object()) fail("BadFixture", "descriptor must be an object or a name");
    if (desc.contains("fixture")) {
        if (!desc["fixture"].is_string()) fail("BadFixture", "\"fixture\" must be a string");
        const std::string name = desc["fixture"];
        f.descriptor = {{"fixture", name}};
        if (name == "u-to-f") {
            f.quiver.add_vertex(1, false, "u");
            f.quiver.add_vertex(2, true, "f");
            f.quiver.add_arrow("a", 1, 2);
            return f;
        }
        for (const auto& n : named_intervals())
            if (name == n.name) {
                f.quiver = interval_quiver(n.type, n.word, n.a, n.b);
                return f;
            }
        fail("UnknownFixture", name);
    }
    try {
        const std::string type = desc.at("type");
        const std::vector<int> word = desc.at("word");
        const int a = desc.at("a"), b = desc.at("b");
        f.descriptor = {{"type", type}, {"word", word}, {"a", a}, {"b", b}};
        f.quiver = interval_quiver(type, word, a, b);
    } catch (const nlohmann::json::exception& e) {
        fail("BadFixture", e.what());
    }
    return f;
}

Session::Session(const nlohmann::json& desc) { init(desc); }

void Session::init(const nlohmann::json& desc) {
    fixture_ = build_fixture(desc);
    QuiverPair qp = build_pair(fixture_.quiver);
    order_ = qp.order;
    root_ = root_seed(qp.pair, qp.bhat);
    stack_.clear();
    stack_.push_back(snapshot_of(fixture_.quiver, frame(unfrozen_part(fixture_.quiver), false), root_));
}

Session::Snapshot Session::snapshot_of(IceQuiver q, IceQuiver framed, LambdaSeed s) const {
    Snapshot snap{std::move(q), std::move(framed), std::move(s), {}};
    for (const auto& x : snap.seed.cluster) snap.g.push_back(decompose(x, root_.pair.btilde).g);
    return snap;
}

void Session::mutate(int vertex) {
    const Snapshot& cur = stack_.back();
    if (!cur.quiver.has_vertex(vertex)) fail("IllegalVertex", "no vertex " + std::to_string(vertex));
    if (cur.quiver.is_frozen(vertex)) fail("IllegalVertex", "vertex " + std::to_string(vertex) + " is frozen");
    try {
        check_mutable(cur.quiver, vertex);
    } catch (const Error& e) {
        fail("IllegalVertex", e.detail());
    }
    IceQuiver framed = mutate_fz(cur.framed, vertex);
    drop_frozen_frozen(framed);
    Snapshot next = snapshot_of(mutate_fz(cur.quiver, vertex), std::move(framed),
                                mutate_seed(cur.seed, order_.index(vertex)));
    stack_.push_back(std::move(next));
    log_.push_back({{"op", "mutate"}, {"vertex", vertex}});
    ++version_;
}

void Session::undo() {
    if (stack_.size() <= 1) fail("EmptyUndoStack", "nothing to undo");
    stack_.pop_back();
    log_.push_back({{"op", "undo"}});
    ++version_;
}

void Session::reset() {
    stack_.resize(1);
    log_.push_back({{"op", "reset"}});
    ++version_;
}

void Session::build(const nlohmann::json& desc) {
    init(desc);
    log_.push_back({{"op", "build"}, {"fixture", fixture_.descriptor}});
    ++version_;
}

void Session::apply(const nlohmann::json& action) {
    const std::string op = action.value("op", "");
    if (op == "mutate") {
        if (!action.contains("vertex") || !action["vertex"].is_number_integer())
            fail("BadRequest", "mutate needs an integer \"vertex\"");
        mutate(action["vertex"].get<int>());
    } else if (op == "undo") {
        undo();
    } else if (op == "reset") {
        reset();
    } else if (op == "build") {
        build(action.at("fixture"));
    } else {
        fail("BadRequest", "unknown op \"" + op + "\"");
    }
}

nlohmann::json Session::state() const {
    const Snapshot& cur = stack_.back();
    std::vector<int> trail;
    for (int k : cur.seed.trail) trail.push_back(order_.ids[k]);
    nlohmann::json colors = nlohmann::json::object();
    for (const auto& [v, g] : colors_of(cur.framed)) colors[std::to_string(v)] = g ? "green" : "red";
    nlohmann::json g = nlohmann::json::object();
    for (int k = 0; k < order_.m(); ++k) g[std::to_string(order_.ids[k])] = cur.g[k];
    nlohmann::json rows = nlohmann::json::object();
    for (const auto& v : cur.quiver.vertices()) rows[std::to_string(v.id)] = cur.quiver.display(v.id);
    return {{"fixture", fixture_.descriptor},
            {"trail", trail},
            {"quiver", to_json(cur.quiver)},
            {"colors", colors},
            {"order", order_.ids},
            {"btilde", to_json(cur.seed.pair.btilde)},
            {"lambda", to_json(cur.seed.pair.lambda)},
            {"d", cur.seed.pair.d},
            {"g_vectors", g}};
}

std::string Session::state_hash() const { return stable_hash(state().dump()); }

ClusterMonomial Session::variable(const std::string& token) const {
    const bool init = token.starts_with("init:");
    const std::string id = init ? token.substr(5) : token;
    int v = 0;
    try {
        std::size_t used = 0;
        v = std::stoi(id, &used);
        if (used != id.size()) throw std::invalid_argument(id);
    } catch (const std::exception&) {
        fail("BadRequest", "cannot read vertex \"" + token + "\"");
    }
    const int k = order_.index(v);
    return cluster_variable(init ? std::vector<int>{} : seed().trail, k, order_.m());
}

nlohmann::json Session::invariants(const std::string& u, const std::string& v) const {
    ClusterMonomial x = variable(u), y = variable(v);
    const std::int64_t f = f_invariant(x, y, root_);
    nlohmann::json out{{"u", u},
                       {"v", v},
                       {"tropical", {tropical_invariant(x, y, root_), tropical_invariant(y, x, root_)}},
                       {"f_invariant", f},
                       {"d", f / 2}};
    if (!u.starts_with("init:") && !v.starts_with("init:"))
        out["lambda"] = seed().pair.lambda(order_.index(std::stoi(u)), order_.index(std::stoi(v)));
    else
        out["lambda"] = nullptr;
    return out;
}

std::string Session::export_doc(const std::string& format) const {
    if (format == "dot") return to_dot(quiver());
    if (format == "json") return state().dump(2);
    if (format == "matrix") {
        const LambdaSeed& s = seed();
        return nlohmann::json{{"order", order_.ids},
                              {"bhat", to_json(s.bhat)},
                              {"btilde", to_json(s.pair.btilde)},
                              {"lambda", to_json(s.pair.lambda)},
                              {"d", s.pair.d}}
            .dump(2);
    }
    fail("BadFormat", "unknown export format \"" + format + "\"");
}

Session Session::import_state(const nlohmann::json& state) {
    Session s(state.at("fixture"));
    for (int v : state.at("trail")) s.mutate(v);
    if (s.state() != state) fail("ImportMismatch", "replayed state differs from the document");
    return s;
}

std::string stable_hash(const std::string& s) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

} // namespace lcl
