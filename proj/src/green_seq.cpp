#include "lcl/green_seq.hpp"

#include "lcl/error.hpp"

#include <spdlog/spdlog.h>

namespace lcl {

namespace {

// Arrows between frozen vertices play no role for colours and are dropped.
void drop_frozen_frozen(IceQuiver& q) {
    std::vector<std::string> gone;
    for (const auto& a : q.arrows())
        if (q.is_frozen(a.src) && q.is_frozen(a.dst)) gone.push_back(a.label);
    for (const auto& l : gone) q.remove_arrow(l);
}

} // namespace

bool GreenState::all_red() const {
    for (const auto& [v, g] : green)
        if (g) return false;
    return true;
}

std::map<int, bool> colors_of(const IceQuiver& framed) {
    std::map<int, bool> out;
    for (int v : framed.unfrozen_ids()) out[v] = true;
    for (const auto& a : framed.arrows())
        if (framed.is_frozen(a.src) && !framed.is_frozen(a.dst)) out[a.dst] = false;
    return out;
}

GreenState start_green(const IceQuiver& q) {
    GreenState st;
    st.base = q;
    st.current = frame(q, false);
    st.green = colors_of(st.current);
    return st;
}

GreenRun run_green(const IceQuiver& q, const std::vector<int>& seq) {
    GreenRun run;
    run.sequence = seq;
    GreenState st = start_green(q);
    for (std::size_t k = 0; k < seq.size(); ++k) {
        const int v = seq[k];
        const std::string step = "step " + std::to_string(k + 1);
        run.colors.push_back(st.green);
        try {
            check_mutable(st.current, v);
        } catch (const Error& e) {
            fail("MutationIllegal", step + ": " + e.detail());
        }
        if (!st.green.at(v)) fail("NotGreenAtStep", step + ": vertex " + std::to_string(v) + " is red");
        st.current = mutate_fz(st.current, v);
        drop_frozen_frozen(st.current);
        st.green = colors_of(st.current);
    }
    run.colors.push_back(st.green);
    if (st.all_red()) {
        IceQuiver co = frame(q, true);
        IsoOptions opt;
        opt.ignore_frozen_frozen = true;
        opt.compare_arrow_frozen = false;
        for (int f : co.frozen_ids()) opt.fixed[f] = f;
        auto iso = find_iso(st.current, co, opt);
        if (!iso) fail("Internal", "all vertices red but no frozen-fixing isomorphism to the coframed quiver");
        VertexMap sigma;
        for (int v : q.vertex_ids()) sigma[v] = iso->at(v);
        run.sigma = sigma;
    }
    spdlog::debug("run_green: {} steps, maximal={}", seq.size(), run.sigma.has_value());
    run.final = std::move(st);
    return run;
}

std::vector<std::pair<int, int>> boxtimes_sequence(const std::vector<int>& v, const std::vector<int>& w) {
    std::vector<std::pair<int, int>> out;
    for (int x : v)
        for (int y : w) out.emplace_back(x, y);
    return out;
}

std::vector<int> boxtimes_ids(const ProductQuiver& p, const std::vector<int>& v, const std::vector<int>& w) {
    std::vector<int> out;
    for (auto [x, y] : boxtimes_sequence(v, w)) out.push_back(p.id_of(x, y));
    return out;
}

std::optional<int> row_vertex(const IntervalIQP& iqp, const IndexSequence& w, int j, int s) {
    int t = iqp.b;
    while (w.at(t) != j) --t;
    for (int k = 1; k < s; ++k) t = w.minus(t);
    if (t < iqp.a) return std::nullopt;
    return t;
}

std::vector<int> duality_sequence(const IntervalIQP& iqp, const IndexSequence& w, const HeightFunction& xi, int n,
                                  int r) {
    if (n < 1 || r < 1) fail("BadArgument", "duality_sequence needs n >= 1 and r >= 1");
    hl_coordinates(iqp, w, xi); // adaptedness
    const auto& wd = weyl_data(w.diagram());
    std::vector<int> out;
    for (int block = 0; block < n; ++block) {
        for (int t = iqp.b; t > iqp.b - w.l0(); --t) {
            int j = w.at(t);
            if (block % 2 == 1) j = wd.star[j];
            for (int s = 1; s <= r; ++s) {
                auto v = row_vertex(iqp, w, j, s);
                if (!v) fail("WindowTooSmall", "row " + std::to_string(j) + " has fewer than " + std::to_string(s) +
                                                   " vertices in the window");
                out.push_back(*v);
            }
        }
    }
    return out;
}

nlohmann::json to_json(const GreenRun& run) {
    nlohmann::json steps = nlohmann::json::array();
    for (const auto& c : run.colors) {
        nlohmann::json j = nlohmann::json::object();
        for (const auto& [v, g] : c) j[std::to_string(v)] = g ? "green" : "red";
        steps.push_back(j);
    }
    nlohmann::json out{{"sequence", run.sequence}, {"colors", steps}, {"maximal", run.sigma.has_value()},
                       {"quiver", to_json(run.final.current)}};
    if (run.sigma) {
        nlohmann::json s = nlohmann::json::object();
        for (const auto& [a, b] : *run.sigma) s[std::to_string(a)] = b;
        out["sigma"] = s;
    } else {
        out["sigma"] = nullptr;
    }
    return out;
}

} // namespace lcl
