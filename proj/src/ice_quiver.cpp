#include "lcl/ice_quiver.hpp"

#include "lcl/error.hpp"

#include <spdlog/spdlog.h>

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace lcl {

std::size_t IceQuiver::vertex_index(int id) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), id,
                               [](const Vertex& v, int x) { return v.id < x; });
    if (it == vertices_.end() || it->id != id) fail("UnknownVertex", "no vertex " + std::to_string(id));
    return static_cast<std::size_t>(it - vertices_.begin());
}

void IceQuiver::add_vertex(int id, bool frozen, std::string name) {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), id,
                               [](const Vertex& v, int x) { return v.id < x; });
    if (it != vertices_.end() && it->id == id) fail("DuplicateVertex", "vertex " + std::to_string(id));
    vertices_.insert(it, Vertex{id, frozen, std::move(name)});
}

void IceQuiver::add_arrow(std::string label, int src, int dst, bool frozen) {
    arrows_.push_back(Arrow{std::move(label), src, dst, frozen});
}

const Arrow& IceQuiver::add_arrow_auto(int src, int dst, bool frozen) {
    add_arrow(fresh_label(std::to_string(src) + "->" + std::to_string(dst)), src, dst, frozen);
    return arrows_.back();
}

bool IceQuiver::has_vertex(int id) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), Vertex{id, false, {}},
                              [](const Vertex& a, const Vertex& b) { return a.id < b.id; });
}

const Vertex& IceQuiver::vertex(int id) const { return vertices_[vertex_index(id)]; }

void IceQuiver::set_frozen(int id, bool frozen) { vertices_[vertex_index(id)].frozen = frozen; }

const Arrow* IceQuiver::find_arrow(const std::string& label) const {
    for (const auto& a : arrows_)
        if (a.label == label) return &a;
    return nullptr;
}

std::string IceQuiver::fresh_label(std::string base) const {
    while (has_label(base)) base += "'";
    return base;
}

std::vector<int> IceQuiver::vertex_ids() const {
    std::vector<int> r;
    for (const auto& v : vertices_) r.push_back(v.id);
    return r;
}

std::vector<int> IceQuiver::unfrozen_ids() const {
    std::vector<int> r;
    for (const auto& v : vertices_)
        if (!v.frozen) r.push_back(v.id);
    return r;
}

std::vector<int> IceQuiver::frozen_ids() const {
    std::vector<int> r;
    for (const auto& v : vertices_)
        if (v.frozen) r.push_back(v.id);
    return r;
}

int IceQuiver::count_arrows(int src, int dst) const {
    int n = 0;
    for (const auto& a : arrows_) n += (a.src == src && a.dst == dst);
    return n;
}

int IceQuiver::count_unfrozen_arrows(int src, int dst) const {
    int n = 0;
    for (const auto& a : arrows_) n += (a.src == src && a.dst == dst && !a.frozen);
    return n;
}

bool IceQuiver::has_loop_at(int v) const {
    return std::any_of(arrows_.begin(), arrows_.end(), [v](const Arrow& a) { return a.src == v && a.dst == v; });
}

bool IceQuiver::has_two_cycle_at(int v) const {
    for (const auto& a : arrows_) {
        if (a.src != v || a.dst == v) continue;
        if (count_arrows(a.dst, v) > 0) return true;
    }
    return false;
}

bool IceQuiver::has_unfrozen_two_cycle() const {
    for (const auto& a : arrows_)
        if (!a.frozen && a.src != a.dst && count_unfrozen_arrows(a.dst, a.src) > 0) return true;
    return false;
}

void IceQuiver::remove_arrow(const std::string& label) {
    auto it = std::find_if(arrows_.begin(), arrows_.end(), [&](const Arrow& a) { return a.label == label; });
    if (it == arrows_.end()) fail("UnknownArrow", label);
    arrows_.erase(it);
}

void IceQuiver::remove_vertex(int id) {
    vertices_.erase(vertices_.begin() + static_cast<std::ptrdiff_t>(vertex_index(id)));
    std::erase_if(arrows_, [id](const Arrow& a) { return a.src == id || a.dst == id; });
}

void IceQuiver::validate() const {
    std::set<std::string> seen;
    for (const auto& a : arrows_) {
        if (!has_vertex(a.src) || !has_vertex(a.dst)) fail("DanglingArrow", a.label);
        if (a.frozen && (!is_frozen(a.src) || !is_frozen(a.dst))) fail("FrozenArrowUnfrozenEndpoint", a.label);
        if (!seen.insert(a.label).second) fail("DuplicateLabel", a.label);
    }
}

std::string IceQuiver::display(int id) const {
    const Vertex& v = vertex(id);
    return v.name.empty() ? std::to_string(id) : v.name;
}

void check_mutable(const IceQuiver& iq, int v) {
    if (!iq.has_vertex(v)) fail("UnknownVertex", "no vertex " + std::to_string(v));
    if (iq.is_frozen(v)) fail("VertexFrozen", "vertex " + std::to_string(v) + " is frozen");
    if (iq.has_loop_at(v) || iq.has_two_cycle_at(v))
        fail("LoopOrTwoCycleAtVertex", "vertex " + std::to_string(v));
}

namespace {

std::string star_label(const std::string& l) {
    if (!l.empty() && l.back() == '*') return l.substr(0, l.size() - 1);
    return l + "*";
}

bool by_label(const Arrow& a, const Arrow& b) { return a.label < b.label; }

} // namespace

IceQuiver mutate_fz(const IceQuiver& iq, int v) {
    check_mutable(iq, v);
    IceQuiver out;
    for (const auto& x : iq.vertices()) out.add_vertex(x.id, x.frozen, x.name);

    std::vector<Arrow> in, outgoing, rest;
    for (const auto& a : iq.arrows()) {
        if (a.dst == v) in.push_back(a);
        else if (a.src == v) outgoing.push_back(a);
        else rest.push_back(a);
    }
    std::sort(in.begin(), in.end(), by_label);
    std::sort(outgoing.begin(), outgoing.end(), by_label);

    for (const auto& a : rest) out.add_arrow(a.label, a.src, a.dst, a.frozen);
    for (const auto& a : in)
        for (const auto& b : outgoing)
            out.add_arrow(out.fresh_label("[" + b.label + "∘" + a.label + "]"), a.src, b.dst, false);
    for (const auto& a : in) out.add_arrow(out.fresh_label(star_label(a.label)), v, a.src, false);
    for (const auto& b : outgoing) out.add_arrow(out.fresh_label(star_label(b.label)), b.dst, v, false);

    // Step 3: fully unfrozen 2-cycles, greedily in label order.
    auto& arrows = out.arrows_mut();
    std::sort(arrows.begin(), arrows.end(), by_label);
    std::vector<bool> dead(arrows.size(), false);
    for (std::size_t i = 0; i < arrows.size(); ++i) {
        if (dead[i] || arrows[i].frozen || arrows[i].src == arrows[i].dst) continue;
        for (std::size_t j = 0; j < arrows.size(); ++j) {
            if (j == i || dead[j] || arrows[j].frozen) continue;
            if (arrows[j].src == arrows[i].dst && arrows[j].dst == arrows[i].src) {
                dead[i] = dead[j] = true;
                break;
            }
        }
    }
    // Step 4: half-frozen 2-cycles become a frozen arrow along the unfrozen one.
    for (std::size_t i = 0; i < arrows.size(); ++i) {
        if (dead[i] || arrows[i].frozen) continue;
        for (std::size_t j = 0; j < arrows.size(); ++j) {
            if (dead[j] || !arrows[j].frozen) continue;
            if (arrows[j].src == arrows[i].dst && arrows[j].dst == arrows[i].src) {
                spdlog::debug("mutate_fz at {}: half-frozen 2-cycle {} / {} replaced by frozen {}", v,
                              arrows[i].label, arrows[j].label, arrows[i].label);
                dead[j] = true;
                arrows[i].frozen = true;
                break;
            }
        }
    }
    std::vector<Arrow> kept;
    for (std::size_t i = 0; i < arrows.size(); ++i)
        if (!dead[i]) kept.push_back(arrows[i]);
    arrows = std::move(kept);
    return out;
}

int frame_offset(const IceQuiver& q) {
    if (q.vertices().empty()) return 1;
    return q.vertices().back().id - q.vertices().front().id + 1;
}

IceQuiver frame(const IceQuiver& q, bool co) {
    for (const auto& v : q.vertices())
        if (v.frozen) fail("FrozenVertexInFrame", "frame expects a quiver without frozen vertices");
    const int off = frame_offset(q);
    IceQuiver out = q;
    for (const auto& v : q.vertices()) {
        const std::string base = v.name.empty() ? std::to_string(v.id) : v.name;
        out.add_vertex(v.id + off, true, base + "'");
        if (co) out.add_arrow(out.fresh_label(base + "'->" + base), v.id + off, v.id);
        else out.add_arrow(out.fresh_label(base + "->" + base + "'"), v.id, v.id + off);
    }
    return out;
}

IceQuiver unfrozen_part(const IceQuiver& q) {
    IceQuiver out;
    for (const auto& v : q.vertices())
        if (!v.frozen) out.add_vertex(v.id, false, v.name);
    for (const auto& a : q.arrows())
        if (!q.is_frozen(a.src) && !q.is_frozen(a.dst)) out.add_arrow(a.label, a.src, a.dst, false);
    return out;
}

int ProductQuiver::id_of(int left, int right) const {
    auto li = std::find(left_ids.begin(), left_ids.end(), left);
    auto ri = std::find(right_ids.begin(), right_ids.end(), right);
    if (li == left_ids.end() || ri == right_ids.end()) fail("UnknownVertex", "product pair out of range");
    return static_cast<int>((li - left_ids.begin()) * static_cast<std::ptrdiff_t>(right_ids.size()) +
                            (ri - right_ids.begin()));
}

std::pair<int, int> ProductQuiver::pair_of(int id) const {
    const int n2 = static_cast<int>(right_ids.size());
    return {left_ids.at(static_cast<std::size_t>(id / n2)), right_ids.at(static_cast<std::size_t>(id % n2))};
}

ProductQuiver product(const IceQuiver& q, const IceQuiver& q2, ProductKind kind) {
    ProductQuiver p;
    p.left_ids = q.vertex_ids();
    p.right_ids = q2.vertex_ids();
    for (int i : p.left_ids)
        for (int j : p.right_ids)
            p.quiver.add_vertex(p.id_of(i, j), false, "(" + q.display(i) + "," + q2.display(j) + ")");
    for (const auto& a : q.arrows())
        for (int j : p.right_ids)
            p.quiver.add_arrow("(" + a.label + "," + q2.display(j) + ")", p.id_of(a.src, j), p.id_of(a.dst, j));
    for (int i : p.left_ids)
        for (const auto& b : q2.arrows())
            p.quiver.add_arrow("(" + q.display(i) + "," + b.label + ")", p.id_of(i, b.src), p.id_of(i, b.dst));
    if (kind == ProductKind::triangle)
        for (const auto& a : q.arrows())
            for (const auto& b : q2.arrows())
                p.quiver.add_arrow("(" + a.label + "," + b.label + ")^op", p.id_of(a.dst, b.dst),
                                   p.id_of(a.src, b.src));
    return p;
}

namespace {

struct CountTable {
    std::vector<int> ids;
    std::vector<bool> frozen;
    std::vector<std::vector<int>> unf, frz; // [src][dst]
    std::map<int, int> index;

    CountTable(const IceQuiver& q, const IsoOptions& opt) {
        ids = q.vertex_ids();
        const std::size_t n = ids.size();
        for (std::size_t k = 0; k < n; ++k) {
            index[ids[k]] = static_cast<int>(k);
            frozen.push_back(q.is_frozen(ids[k]));
        }
        unf.assign(n, std::vector<int>(n, 0));
        frz.assign(n, std::vector<int>(n, 0));
        for (const auto& a : q.arrows()) {
            int s = index.at(a.src), d = index.at(a.dst);
            if (opt.ignore_frozen_frozen && frozen[s] && frozen[d]) continue;
            if (a.frozen && opt.compare_arrow_frozen) ++frz[s][d];
            else ++unf[s][d];
        }
    }

    // Sorted profile used to prune candidates.
    std::vector<int> signature(int k) const {
        std::vector<int> out_u, in_u, out_f, in_f;
        for (std::size_t j = 0; j < ids.size(); ++j) {
            if (unf[k][j]) out_u.push_back(unf[k][j]);
            if (unf[j][k]) in_u.push_back(unf[j][k]);
            if (frz[k][j]) out_f.push_back(frz[k][j]);
            if (frz[j][k]) in_f.push_back(frz[j][k]);
        }
        std::vector<int> sig{frozen[k] ? 1 : 0, unf[k][k], frz[k][k]};
        for (auto* v : {&out_u, &in_u, &out_f, &in_f}) {
            std::sort(v->begin(), v->end());
            sig.push_back(-1);
            sig.insert(sig.end(), v->begin(), v->end());
        }
        return sig;
    }
};

} // namespace

std::optional<VertexMap> find_iso(const IceQuiver& a, const IceQuiver& b, const IsoOptions& opt) {
    if (a.vertices().size() != b.vertices().size()) return std::nullopt;
    CountTable ta(a, opt), tb(b, opt);
    const int n = static_cast<int>(ta.ids.size());
    std::vector<std::vector<int>> sa(n), sb(n);
    for (int k = 0; k < n; ++k) {
        sa[k] = ta.signature(k);
        sb[k] = tb.signature(k);
    }
    std::vector<int> mapping(n, -1);
    std::vector<bool> used(n, false);
    for (const auto& [x, y] : opt.fixed) {
        if (!ta.index.count(x) || !tb.index.count(y)) return std::nullopt;
        int i = ta.index.at(x), j = tb.index.at(y);
        if (used[j] || sa[i] != sb[j]) return std::nullopt;
        mapping[i] = j;
        used[j] = true;
    }
    // Order: most connected first, so that pruning bites early.
    std::vector<int> order;
    for (int k = 0; k < n; ++k)
        if (mapping[k] < 0) order.push_back(k);
    std::sort(order.begin(), order.end(), [&](int x, int y) { return sa[x].size() > sa[y].size(); });

    auto consistent = [&](int i, int j) {
        for (int k = 0; k < n; ++k) {
            int mk = (k == i) ? j : mapping[k];
            if (mk < 0) continue;
            if (ta.unf[i][k] != tb.unf[j][mk] || ta.unf[k][i] != tb.unf[mk][j]) return false;
            if (ta.frz[i][k] != tb.frz[j][mk] || ta.frz[k][i] != tb.frz[mk][j]) return false;
        }
        return true;
    };
    for (const auto& [x, y] : opt.fixed)
        if (!consistent(ta.index.at(x), tb.index.at(y))) return std::nullopt;

    std::function<bool(std::size_t)> rec = [&](std::size_t pos) -> bool {
        if (pos == order.size()) return true;
        int i = order[pos];
        for (int j = 0; j < n; ++j) {
            if (used[j] || sa[i] != sb[j] || !consistent(i, j)) continue;
            mapping[i] = j;
            used[j] = true;
            if (rec(pos + 1)) return true;
            mapping[i] = -1;
            used[j] = false;
        }
        return false;
    };
    if (!rec(0)) return std::nullopt;
    VertexMap m;
    for (int k = 0; k < n; ++k) m[ta.ids[k]] = tb.ids[mapping[k]];
    return m;
}

bool is_iso_map(const IceQuiver& a, const IceQuiver& b, const VertexMap& m, const IsoOptions& opt) {
    if (a.vertices().size() != b.vertices().size() || m.size() != a.vertices().size()) return false;
    IsoOptions o = opt;
    o.fixed = m;
    return find_iso(a, b, o).has_value();
}

IceQuiver relabel_vertices(const IceQuiver& q, const VertexMap& m) {
    IceQuiver out;
    for (const auto& v : q.vertices()) out.add_vertex(m.at(v.id), v.frozen, v.name);
    for (const auto& a : q.arrows()) out.add_arrow(a.label, m.at(a.src), m.at(a.dst), a.frozen);
    return out;
}

nlohmann::json to_json(const IceQuiver& q) {
    nlohmann::json vs = nlohmann::json::array(), as = nlohmann::json::array();
    for (const auto& v : q.vertices()) {
        nlohmann::json jv{{"id", v.id}, {"frozen", v.frozen}};
        if (!v.name.empty()) jv["name"] = v.name;
        vs.push_back(jv);
    }
    for (const auto& a : q.arrows())
        as.push_back({{"label", a.label}, {"src", a.src}, {"dst", a.dst}, {"frozen", a.frozen}});
    return {{"vertices", vs}, {"arrows", as}};
}

IceQuiver quiver_from_json(const nlohmann::json& j) {
    IceQuiver q;
    try {
        for (const auto& v : j.at("vertices"))
            q.add_vertex(v.at("id").get<int>(), v.value("frozen", false), v.value("name", std::string{}));
        for (const auto& a : j.at("arrows")) {
            int src = a.at("src").get<int>(), dst = a.at("dst").get<int>();
            bool fr = a.value("frozen", false);
            if (a.contains("label")) q.add_arrow(a.at("label").get<std::string>(), src, dst, fr);
            else q.add_arrow_auto(src, dst, fr);
        }
    } catch (const nlohmann::json::exception& e) {
        fail("BadJson", e.what());
    }
    q.validate();
    return q;
}

std::string to_dot(const IceQuiver& q, const std::string& name) {
    std::ostringstream os;
    os << "digraph " << name << " {\n";
    for (const auto& v : q.vertices()) {
        os << "  \"" << v.id << "\" [label=\"" << q.display(v.id) << "\"";
        if (v.frozen) os << ", shape=box, color=blue";
        os << "];\n";
    }
    for (const auto& a : q.arrows()) {
        os << "  \"" << a.src << "\" -> \"" << a.dst << "\" [label=\"" << a.label << "\"";
        if (a.frozen) os << ", color=blue";
        os << "];\n";
    }
    os << "}\n";
    return os.str();
}

} // namespace lcl
