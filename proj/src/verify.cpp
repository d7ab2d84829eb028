#include "lcl/verify.hpp"

#include "lcl/compatible_pair.hpp"
#include "lcl/error.hpp"
#include "lcl/ginzburg_ext.hpp"
#include "lcl/green_seq.hpp"
#include "lcl/interval_quiver.hpp"
#include "lcl/session.hpp"

#include <spdlog/spdlog.h>

#include <functional>
#include <future>
#include <random>

namespace lcl {

namespace {

using Check = std::pair<std::string, std::function<nlohmann::json()>>; // returns null on success

nlohmann::json run(const std::vector<Check>& checks) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [name, f] : checks) {
        nlohmann::json r{{"name", name}};
        try {
            auto bad = f();
            r["pass"] = bad.is_null();
            r["detail"] = bad;
        } catch (const Error& e) {
            r["pass"] = false;
            r["detail"] = {{"error", e.code()}, {"detail", e.detail()}};
        }
        out.push_back(r);
    }
    return out;
}

IndexSequence word(const char* type, std::vector<int> w) { return IndexSequence::extended(parse_dynkin(type), w); }

nlohmann::json matrix_diff(const IntMatrix& got, const IntMatrix& want) {
    if (got == want) return nullptr;
    return {{"got", to_json(got)}, {"want", to_json(want)}};
}

// bracket = Lambda and chi = B^-T on regular windows k = 1..kmax.
std::vector<Check> window_checks(const std::string& tag, const IndexSequence& w, int kmax) {
    std::vector<Check> out;
    for (int k = 1; k <= kmax; ++k) {
        out.push_back({tag + ": bracket = Lambda, k=" + std::to_string(k), [w, k]() -> nlohmann::json {
                           auto m = regular_window(w, 0, k);
                           auto qp = build_pair(m.iqp.qp.quiver);
                           return matrix_diff(bracket_matrix(m, qp.order), qp.pair.lambda);
                       }});
        out.push_back({tag + ": chi = B^-T, k=" + std::to_string(k), [w, k]() -> nlohmann::json {
                           euler_matrix_check(regular_window(w, 0, k));
                           return nullptr;
                       }});
    }
    out.push_back({tag + ": ext tables independent of a'", [w]() -> nlohmann::json {
                       auto m1 = regular_window(w, 0, 1), m2 = regular_window(w, 0, 2);
                       for (const auto& [st, row] : ext_table(m1))
                           if (ext_dims(m2, st.first, st.second) != row)
                               return {{"s", st.first}, {"t", st.second}};
                       return nullptr;
                   }});
    return out;
}

std::vector<Check> dual_checks(const std::string& tag, const IndexSequence& w, int a, int b) {
    return {{tag + ": d(V, D^-n W) homological = monoidal, n=1..3", [w, a, b]() -> nlohmann::json {
                 DualPipeline p(w, a, b);
                 for (const auto& [v, vv] : p.model().vertices)
                     for (const auto& [x, vx] : p.model().vertices)
                         for (int n = 1; n <= 3; ++n) p.d_invariant_dual(v, x, n); // throws Mismatch
                 return nullptr;
             }},
            {tag + ": lambda series = bracket", [w, a, b]() -> nlohmann::json {
                 DualPipeline p(w, a, b);
                 const auto& m = p.model();
                 for (const auto& [v, vv] : m.vertices)
                     for (const auto& [x, vx] : m.vertices)
                         if (p.lambda_series(v, x, m.ell) != bracket(m, v, x))
                             return {{"V", v}, {"W", x}, {"series", p.lambda_series(v, x, m.ell)},
                                     {"bracket", bracket(m, v, x)}};
                 return nullptr;
             }}};
}

std::vector<Check> a1_checks() {
    std::vector<Check> out;
    out.push_back({"A1: compatible pair", []() -> nlohmann::json {
                       auto qp = build_pair(build_fixture(nlohmann::json{{"fixture", "A1"}}).quiver);
                       if (qp.bhat != IntMatrix{{0, 1}, {-1, 1}} || qp.det != 1 ||
                           qp.pair.lambda != IntMatrix{{0, 2}, {-2, 0}})
                           return {{"bhat", to_json(qp.bhat)}, {"lambda", to_json(qp.pair.lambda)}};
                       return nullptr;
                   }});
    out.push_back({"A1: ext table", []() -> nlohmann::json {
                       auto m = regular_embed(word("A1", {1}), 0, 0);
                       const int f = -1, u = 0;
                       if (ext_dims(m, u, f) == ExtRow{{0, 1}} && ext_dims(m, f, u) == ExtRow{{-1, 1}} &&
                           ext_dims(m, f, f) == ExtRow{{0, 1}, {-1, 1}} && ext_dims(m, u, u) == ExtRow{{0, 1}} &&
                           bracket(m, u, f) == 2)
                           return nullptr;
                       return to_json(ext_table(m));
                   }});
    out.push_back({"A1: F-invariant of the exchange pair", []() -> nlohmann::json {
                       Session s(nlohmann::json{{"fixture", "u-to-f"}});
                       s.mutate(1);
                       auto inv = s.invariants("1", "init:1");
                       return inv["f_invariant"] == 2 ? nlohmann::json(nullptr) : inv;
                   }});
    for (auto& c : window_checks("A1", word("A1", {1}), 2)) out.push_back(std::move(c));
    for (auto& c : dual_checks("A1", word("A1", {1}), -1, 0)) out.push_back(std::move(c));
    return out;
}

std::vector<Check> a2_checks() {
    auto w = word("A2", {1, 2, 1});
    auto out = window_checks("A2", w, 2);
    for (auto& c : dual_checks("A2", w, -5, 0)) out.push_back(std::move(c));
    return out;
}

std::vector<Check> a3_checks() {
    auto w = word("A3", {3, 1, 2, 3, 1, 2});
    auto out = window_checks("A3", w, 2);
    out.push_back({"A3: moves over [-1,6]", [w]() -> nlohmann::json {
                       const auto& d = w.diagram();
                       const int a = -1, b = 6;
                       int checked = 0;
                       for (int s = a; s < b; ++s) {
                           const int x = w.at(s), y = w.at(s + 1);
                           if (x != y && !d.adjacent(x, y)) verify_move(w, MoveKind::commutation, s, a, b), ++checked;
                           if (s > a && d.adjacent(x, y) && w.at(s - 1) == y)
                               verify_move(w, MoveKind::braid, s, a, b), ++checked;
                       }
                       return checked > 0 ? nlohmann::json(nullptr) : nlohmann::json("no legal position");
                   }});
    out.push_back({"A3: pair mutation = rebuild", []() -> nlohmann::json {
                       std::mt19937 rng(7);
                       IceQuiver q = build_fixture(nlohmann::json{{"fixture", "A3-adapted"}}).quiver;
                       auto r = build_pair(q);
                       for (int walk = 0; walk < 20; ++walk) {
                           IceQuiver cur = q;
                           CompatiblePair p = r.pair;
                           IntMatrix bhat = r.bhat;
                           std::vector<int> trail;
                           for (int step = 0; step < 6; ++step) {
                               const int k = static_cast<int>(rng() % r.order.n);
                               const int v = r.order.ids[k];
                               if (cur.has_two_cycle_at(v)) break;
                               trail.push_back(v);
                               cur = mutate_fz(cur, v);
                               auto m = mutate_pair(p, bhat, k);
                               p = m.pair;
                               bhat = m.bhat;
                               if (build_pair(cur).pair != p) return {{"trail", trail}};
                           }
                       }
                       return nullptr;
                   }});
    out.push_back({"A3: duality sequence is maximal green", [w]() -> nlohmann::json {
                       auto m = regular_window(w, 0, 1);
                       auto seq = duality_sequence(m.iqp, w, m.base_xi, 1, m.ell - 1);
                       auto run = run_green(unfrozen_part(m.iqp.qp.quiver), seq);
                       return run.sigma ? nlohmann::json(nullptr) : nlohmann::json{{"sequence", seq}};
                   }});
    return out;
}

} // namespace

std::vector<std::string> verify_scopes() { return {"A1", "A2-adapted", "A3-adapted", "all"}; }

nlohmann::json verify_suite(const std::string& scope) {
    nlohmann::json report{{"scope", scope}, {"warnings", nlohmann::json::array()}};
    std::vector<std::function<std::vector<Check>()>> groups;
    if (scope == "A1" || scope == "all") groups.push_back(a1_checks);
    if (scope == "A2-adapted" || scope == "all") groups.push_back(a2_checks);
    if (scope == "A3-adapted" || scope == "all") groups.push_back(a3_checks);
    if (groups.empty()) {
        spdlog::warn("verify: unknown scope {}", scope);
        report["warnings"].push_back("unknown scope \"" + scope + "\"");
    }
    std::vector<std::future<nlohmann::json>> jobs;
    for (auto& g : groups) jobs.push_back(std::async(std::launch::async, [g] { return run(g()); }));
    nlohmann::json results = nlohmann::json::array();
    int passed = 0, failed = 0;
    for (auto& j : jobs)
        for (auto& r : j.get()) {
            (r["pass"].get<bool>() ? passed : failed)++;
            results.push_back(std::move(r));
        }
    report["results"] = results;
    report["passed"] = passed;
    report["failed"] = failed;
    return report;
}

} // namespace lcl
