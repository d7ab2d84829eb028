#include "lcl/interval_quiver.hpp"

#include "lcl/error.hpp"

#include <algorithm>
#include <spdlog/spdlog.h>

namespace lcl {

namespace {

int floor_div(int x, int y) { return x >= 0 ? x / y : -((-x + y - 1) / y); }

} // namespace

IndexSequence IndexSequence::extended(const DynkinDiagram& d, const std::vector<int>& w0) {
    const auto& wd = weyl_data(d);
    check_word(d, w0);
    if (static_cast<int>(w0.size()) != wd.l0() || !is_reduced(d, w0))
        fail("NotLongestWord", "word is not a reduced expression of w0 for " + d.name());
    IndexSequence s;
    s.d_ = d;
    s.base_ = w0;
    s.star_ = wd.star;
    s.reach_ = 2 * wd.l0() + 1;
    return s;
}

int IndexSequence::at(int s) const {
    auto it = overrides_.find(s);
    if (it != overrides_.end()) return it->second;
    const int l = l0();
    const int k = floor_div(s - 1, l);
    const int letter = base_[(s - 1) - k * l];
    return (k % 2 == 0) ? letter : star_[letter];
}

int IndexSequence::minus(int s) const {
    const int i = at(s);
    for (int t = s - 1; t >= s - reach_; --t)
        if (at(t) == i) return t;
    fail("Internal", "no earlier repetition of letter at " + std::to_string(s));
}

int IndexSequence::plus(int s) const {
    const int i = at(s);
    for (int t = s + 1; t <= s + reach_; ++t)
        if (at(t) == i) return t;
    fail("Internal", "no later repetition of letter at " + std::to_string(s));
}

SeqWindow IndexSequence::window(int a, int b) const {
    SeqWindow w{a, {}};
    for (int s = a; s <= b; ++s) w.letters.push_back(at(s));
    return w;
}

IndexSequence IndexSequence::with_move(MoveKind kind, int s) const {
    SeqWindow local = window(s - 1, s + 2);
    SeqWindow moved = apply_move(d_, local, kind, s);
    IndexSequence r = *this;
    for (int t = s - 1; t <= s + 2; ++t)
        if (moved.at(t) != local.at(t)) r.overrides_[t] = moved.at(t);
    if (!r.overrides_.empty()) {
        const int span = r.overrides_.rbegin()->first - r.overrides_.begin()->first + 1;
        r.reach_ = 2 * l0() + span + 1;
    }
    return r;
}

IntervalIQP build_interval(const IndexSequence& w, int a, int b) {
    if (a > b) fail("EmptyInterval", "[" + std::to_string(a) + "," + std::to_string(b) + "] is empty");
    IntervalIQP out;
    out.a = a;
    out.b = b;
    IceQuiver& q = out.qp.quiver;
    const DynkinDiagram& d = w.diagram();
    std::map<int, int> mn;
    for (int s = a; s <= b; ++s) {
        mn[s] = w.minus(s);
        out.row[s] = w.at(s);
        q.add_vertex(s, mn[s] < a, std::to_string(s));
    }
    auto label = [](int s, int t) { return std::to_string(s) + "->" + std::to_string(t); };
    for (int s = a; s <= b; ++s) {
        if (mn[s] >= a) q.add_arrow(label(s, mn[s]), s, mn[s]);
        for (int t = s + 1; t <= b; ++t) {
            if (!d.adjacent(out.row[s], out.row[t])) continue;
            const bool c2 = mn[s] < mn[t] && mn[t] < s;
            const bool c3 = mn[s] < a && mn[t] < a;
            if (c2 || c3) q.add_arrow(label(s, t), s, t, c3);
        }
    }
    // One chordless cycle per arrow s -> t with s < t and t unfrozen:
    // s -> t -> t^- -> ... -> t_l -> s.
    for (const auto& arr : std::vector<Arrow>(q.arrows().begin(), q.arrows().end())) {
        const int s = arr.src, t = arr.dst;
        if (s >= t || q.is_frozen(t)) continue;
        Path path{arr.label};
        int cur = t;
        const Arrow* back = nullptr;
        for (;;) {
            const int prev = mn[cur];
            if (prev < a) fail("Internal", "cycle through " + arr.label + " leaves the interval");
            path.insert(path.begin(), label(cur, prev));
            cur = prev;
            if (cur < s && (back = q.find_arrow(label(cur, s)))) break;
        }
        path.insert(path.begin(), back->label);
        out.qp.potential.add(path, 1);
    }
    q.validate();
    validate_potential(out.qp);
    return out;
}

int regular_width(const IntervalIQP& iqp, const DynkinDiagram& d) {
    std::map<int, int> size;
    for (int i = 1; i <= d.n; ++i) size[i] = 0;
    for (const auto& [s, i] : iqp.row) ++size[i];
    int m = size.begin()->second;
    for (const auto& [i, c] : size) m = std::min(m, c);
    return m;
}

HeightFunction shifted_height(const IndexSequence& w, const HeightFunction& xi, int b) {
    HeightFunction r = xi;
    for (int t = 1; t <= b; ++t) r[w.at(t)] += 2;
    for (int t = 0; t > b; --t) r[w.at(t)] -= 2;
    return r;
}

IceQuiver hl_window(const DynkinDiagram& d, const std::vector<HLPoint>& pts) {
    IceQuiver q;
    std::map<HLPoint, int> id;
    for (std::size_t k = 0; k < pts.size(); ++k) {
        id[pts[k]] = static_cast<int>(k);
        q.add_vertex(static_cast<int>(k), false,
                     "(" + std::to_string(pts[k].i) + "," + std::to_string(pts[k].p) + ")");
    }
    for (const auto& pt : pts) {
        for (int j : d.adj[pt.i]) {
            auto it = id.find({j, pt.p + 1});
            if (it != id.end()) q.add_arrow_auto(id[pt], it->second);
        }
        auto it = id.find({pt.i, pt.p - 2});
        if (it != id.end()) q.add_arrow_auto(id[pt], it->second);
    }
    return q;
}

std::map<int, HLPoint> hl_coordinates(const IntervalIQP& iqp, const IndexSequence& w, const HeightFunction& xi) {
    const DynkinDiagram& d = w.diagram();
    validate_height(d, xi);
    if (!w.overrides().empty() || !is_source_sequence(d, xi, w.base()))
        fail("NotAdapted", "word is not adapted to the given height function");
    HeightFunction xb = shifted_height(w, xi, iqp.b);
    std::map<int, HLPoint> coords;
    for (const auto& [s, i] : iqp.row) {
        int c = 0;
        for (int t = s; t <= iqp.b; t = w.plus(t)) ++c;
        coords[s] = {i, xb.at(i) - 2 * c};
    }
    // Verify against Q_HL: same vertex order, arrows between frozen vertices ignored.
    std::vector<HLPoint> pts;
    VertexMap m;
    for (const auto& [s, pt] : coords) {
        m[s] = static_cast<int>(pts.size());
        pts.push_back(pt);
    }
    IceQuiver hl = hl_window(d, pts);
    for (const auto& v : iqp.qp.quiver.frozen_ids()) hl.set_frozen(m.at(v), true);
    IceQuiver plain = iqp.qp.quiver;
    for (auto& a : plain.arrows_mut()) a.frozen = false;
    IsoOptions opt;
    opt.ignore_frozen_frozen = true;
    opt.compare_arrow_frozen = false;
    if (!is_iso_map(plain, hl, m, opt)) fail("NotAdapted", "interval quiver does not match the Q_HL window");
    return coords;
}

KRLabel kr_label(const HLPoint& pt, const HeightFunction& xi) {
    const int top = xi.at(pt.i);
    if (pt.p >= top) fail("OutsideWindow", "point is not below the height function");
    // Largest r with p + 2(r-1) < xi_i.
    return {pt.i, (top - pt.p + 1) / 2, pt.p};
}

KRLabel dual_label(const KRLabel& l, int n, const DynkinDiagram& d) {
    const auto& w = weyl_data(d);
    KRLabel r = l;
    for (int k = 0; k < std::abs(n); ++k) {
        r.i = w.star[r.i];
        r.p += n > 0 ? -w.h : w.h;
    }
    return r;
}

Residue residue(const IndexSequence& w, int a, int b) {
    if (a > b) fail("EmptyInterval", "[" + std::to_string(a) + "," + std::to_string(b) + "] is empty");
    const DynkinDiagram& d = w.diagram();
    Residue r;
    const int l = w.l0();
    r.a_prime = a + ((b - a) / l) * l;
    for (int s = r.a_prime; s <= b; ++s) r.letters.push_back(w.at(s));
    r.element = word_element(d, r.letters);
    const auto& wd = weyl_data(d);
    r.is_w0 = length(wd, r.element) == wd.l0();
    r.adapted = adapted_expression(d, r.element);
    return r;
}

namespace {

std::optional<MoveWitness> witness(const QP& from, const QP& to, const VertexMap& m) {
    if (!is_iso_map(from.quiver, to.quiver, m)) return std::nullopt;
    auto arrows = match_potentials(from, to, m);
    if (!arrows) return std::nullopt;
    return MoveWitness{m, *arrows};
}

} // namespace

MoveWitness verify_move(const IndexSequence& w, MoveKind kind, int s, int a, int b) {
    IndexSequence w2 = w.with_move(kind, s);
    QP source;
    VertexMap m;
    for (int t = a; t <= b; ++t) m[t] = t;
    if (kind == MoveKind::commutation) {
        if (s < a || s >= b) fail("MovePreconditionFailed", "commutation needs a <= s < b");
        source = build_interval(w, a, b).qp;
        std::swap(m[s], m[s + 1]);
    } else {
        if (s <= a || s >= b) fail("MovePreconditionFailed", "braid needs a < s < b");
        source = mutate_qp(build_interval(w, a, b).qp, s + 1);
        std::swap(m[s - 1], m[s]);
    }
    QP target = build_interval(w2, a, b).qp;
    auto wit = witness(source, target, m);
    if (!wit) {
        spdlog::debug("verify_move: {} at {} on [{},{}] has no witness", to_string(kind), s, a, b);
        fail("NoIsoFound", to_string(kind) + " move at " + std::to_string(s) + " has no isomorphism");
    }
    return *wit;
}

nlohmann::json to_json(const IntervalIQP& iqp) {
    nlohmann::json rows = nlohmann::json::object();
    for (const auto& [s, i] : iqp.row) rows[std::to_string(s)] = i;
    return {{"a", iqp.a},
            {"b", iqp.b},
            {"quiver", to_json(iqp.qp.quiver)},
            {"potential", to_json(iqp.qp.potential)},
            {"rows", rows}};
}

nlohmann::json to_json(const KRLabel& l) { return {{"i", l.i}, {"r", l.r}, {"p", l.p}}; }

} // namespace lcl
