#include "lcl/coxeter.hpp"

#include "lcl/error.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <memory>
#include <mutex>
#include <regex>
#include <set>

namespace lcl {

bool DynkinDiagram::adjacent(int i, int j) const {
    if (!has_vertex(i) || !has_vertex(j)) return false;
    return std::find(adj[i].begin(), adj[i].end(), j) != adj[i].end();
}

std::vector<int> DynkinDiagram::vertices() const {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i + 1;
    return v;
}

DynkinDiagram parse_dynkin(const std::string& s) {
    static const std::regex re("^\\s*([ADEade])_?([0-9]+)\\s*$");
    std::smatch m;
    if (!std::regex_match(s, m, re)) fail("BadDiagram", "cannot parse diagram '" + s + "'");
    DynkinDiagram d;
    d.type = static_cast<char>(std::toupper(m[1].str()[0]));
    d.n = std::stoi(m[2].str());
    auto edge = [&](int i, int j) {
        d.adj[i].push_back(j);
        d.adj[j].push_back(i);
    };
    if (d.type == 'A' && d.n < 1) fail("BadDiagram", "A_n needs n >= 1");
    if (d.type == 'D' && d.n < 4) fail("BadDiagram", "D_n needs n >= 4");
    if (d.type == 'E' && (d.n < 6 || d.n > 8)) fail("BadDiagram", "E_n needs n in 6..8");
    if (d.n > 64) fail("BadDiagram", "rank too large");
    d.adj.assign(d.n + 1, {});
    switch (d.type) {
    case 'A':
        for (int i = 1; i < d.n; ++i) edge(i, i + 1);
        break;
    case 'D':
        for (int i = 1; i < d.n - 2; ++i) edge(i, i + 1);
        edge(d.n - 2, d.n - 1);
        edge(d.n - 2, d.n);
        break;
    default:
        edge(1, 3);
        edge(2, 4);
        for (int i = 3; i < d.n; ++i) edge(i, i + 1);
        break;
    }
    for (auto& a : d.adj) std::sort(a.begin(), a.end());
    return d;
}

int WeylData::index_of(const Root& r) const {
    auto it = lookup.find(r);
    if (it == lookup.end()) fail("BadRoot", "not a root");
    return it->second;
}

int WeylData::simple_index(int i) const {
    Root r(star.size() - 1, 0);
    r[i - 1] = 1;
    return index_of(r);
}

namespace {

Root reflect(const DynkinDiagram& d, const Root& b, int i) {
    int pairing = 2 * b[i - 1];
    for (int j : d.adj[i]) pairing -= b[j - 1];
    Root r = b;
    r[i - 1] -= pairing;
    return r;
}

bool positive(const Root& r) {
    return std::all_of(r.begin(), r.end(), [](int c) { return c >= 0; });
}

std::unique_ptr<WeylData> compute(const DynkinDiagram& d) {
    auto w = std::make_unique<WeylData>();
    // Positive roots by reflection closure of the simple roots.
    std::set<Root> seen;
    std::deque<Root> queue;
    for (int i = 1; i <= d.n; ++i) {
        Root r(d.n, 0);
        r[i - 1] = 1;
        seen.insert(r);
        queue.push_back(r);
    }
    while (!queue.empty()) {
        Root b = queue.front();
        queue.pop_front();
        for (int i = 1; i <= d.n; ++i) {
            Root r = reflect(d, b, i);
            if (positive(r) && seen.insert(r).second) queue.push_back(r);
        }
    }
    // Height then lex order.
    std::vector<Root> pos(seen.begin(), seen.end());
    std::stable_sort(pos.begin(), pos.end(), [](const Root& x, const Root& y) {
        int hx = 0, hy = 0;
        for (int c : x) hx += c;
        for (int c : y) hy += c;
        return hx < hy;
    });
    w->npos = static_cast<int>(pos.size());
    w->roots = pos;
    for (const auto& r : pos) {
        Root m = r;
        for (auto& c : m) c = -c;
        w->roots.push_back(m);
    }
    for (int k = 0; k < static_cast<int>(w->roots.size()); ++k) w->lookup[w->roots[k]] = k;
    w->star.assign(d.n + 1, 0);
    w->simple.assign(d.n + 1, {});
    for (int i = 1; i <= d.n; ++i) {
        WeylElement p(w->roots.size());
        for (int k = 0; k < static_cast<int>(w->roots.size()); ++k) p[k] = w->index_of(reflect(d, w->roots[k], i));
        w->simple[i] = std::move(p);
    }
    // Greedy reduced word for w0: extend while some simple root stays positive.
    WeylElement cur = identity_element(*w);
    for (;;) {
        int next = 0;
        for (int i = 1; i <= d.n && !next; ++i)
            if (cur[w->simple_index(i)] < w->npos) next = i;
        if (!next) break;
        cur = compose(cur, w->simple[next]);
        w->w0_word.push_back(next);
    }
    for (int i = 1; i <= d.n; ++i) {
        const Root& img = w->roots[cur[w->simple_index(i)]];
        for (int j = 1; j <= d.n; ++j)
            if (img[j - 1] == -1) w->star[i] = j;
    }
    w->h = 2 * w->npos / d.n;
    return w;
}

} // namespace

const WeylData& weyl_data(const DynkinDiagram& d) {
    static std::mutex mu;
    static std::map<std::string, std::unique_ptr<WeylData>> cache;
    std::lock_guard lock(mu);
    auto& slot = cache[d.name()];
    if (!slot) slot = compute(d);
    return *slot;
}

WeylElement identity_element(const WeylData& w) {
    WeylElement e(w.roots.size());
    for (int k = 0; k < static_cast<int>(e.size()); ++k) e[k] = k;
    return e;
}

WeylElement compose(const WeylElement& a, const WeylElement& b) {
    WeylElement r(b.size());
    for (std::size_t k = 0; k < b.size(); ++k) r[k] = a[b[k]];
    return r;
}

WeylElement inverse(const WeylElement& a) {
    WeylElement r(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) r[a[k]] = static_cast<int>(k);
    return r;
}

void check_word(const DynkinDiagram& d, const std::vector<int>& word) {
    for (int i : word)
        if (!d.has_vertex(i)) fail("BadWord", "letter " + std::to_string(i) + " not a vertex of " + d.name());
}

WeylElement word_element(const DynkinDiagram& d, const std::vector<int>& word) {
    check_word(d, word);
    const auto& w = weyl_data(d);
    WeylElement e = identity_element(w);
    for (int i : word) e = compose(e, w.simple[i]);
    return e;
}

int length(const WeylData& w, const WeylElement& e) {
    int l = 0;
    for (int k = 0; k < w.npos; ++k)
        if (e[k] >= w.npos) ++l;
    return l;
}

bool is_reduced(const DynkinDiagram& d, const std::vector<int>& word) {
    return length(weyl_data(d), word_element(d, word)) == static_cast<int>(word.size());
}

int epsilon(const DynkinDiagram& d, int i) {
    std::vector<int> eps(d.n + 1, -1);
    eps[1] = 0;
    std::deque<int> q{1};
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int u : d.adj[v])
            if (eps[u] < 0) {
                eps[u] = 1 - eps[v];
                q.push_back(u);
            }
    }
    return eps.at(i);
}

void validate_height(const DynkinDiagram& d, const HeightFunction& xi) {
    for (int i = 1; i <= d.n; ++i)
        if (!xi.count(i)) fail("BadHeightFunction", "missing value at " + std::to_string(i));
    for (int i = 1; i <= d.n; ++i) {
        auto it = xi.find(i);
        if (((it->second % 2) + 2) % 2 != epsilon(d, i))
            fail("BadHeightFunction", "parity mismatch at " + std::to_string(i));
        for (int j : d.adj[i])
            if (std::abs(xi.at(j) - it->second) != 1)
                fail("BadHeightFunction", "neighbours " + std::to_string(i) + "," + std::to_string(j) +
                                              " differ by more than one");
    }
    if (xi.size() != static_cast<std::size_t>(d.n)) fail("BadHeightFunction", "values outside the diagram");
}

std::vector<int> sources(const DynkinDiagram& d, const HeightFunction& xi) {
    std::vector<int> out;
    for (int i = 1; i <= d.n; ++i) {
        bool src = true;
        for (int j : d.adj[i])
            if (xi.at(j) != xi.at(i) + 1) src = false;
        if (src) out.push_back(i);
    }
    return out;
}

HeightFunction reflect_source(const DynkinDiagram& d, const HeightFunction& xi, int i) {
    auto s = sources(d, xi);
    if (std::find(s.begin(), s.end(), i) == s.end()) fail("NotSource", std::to_string(i) + " is not a source");
    HeightFunction r = xi;
    r[i] += 2;
    return r;
}

bool is_source_sequence(const DynkinDiagram& d, const HeightFunction& xi, const std::vector<int>& word) {
    validate_height(d, xi);
    check_word(d, word);
    HeightFunction cur = xi;
    for (int i : word) {
        auto s = sources(d, cur);
        if (std::find(s.begin(), s.end(), i) == s.end()) return false;
        cur[i] += 2;
    }
    return true;
}

std::vector<int> adapted_word(const DynkinDiagram& d, const HeightFunction& xi) {
    validate_height(d, xi);
    const auto& w = weyl_data(d);
    HeightFunction cur = xi;
    WeylElement e = identity_element(w);
    std::vector<int> word;
    while (static_cast<int>(word.size()) < w.npos) {
        bool progressed = false;
        for (int i : sources(d, cur)) {
            if (static_cast<int>(word.size()) == w.npos) break;
            // Only letters that keep the word reduced.
            if (e[w.simple_index(i)] >= w.npos) continue;
            e = compose(e, w.simple[i]);
            word.push_back(i);
            cur[i] += 2;
            progressed = true;
        }
        if (!progressed) fail("Internal", "source emission stalled");
    }
    return word;
}

std::vector<HeightFunction> all_orientations(const DynkinDiagram& d) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= d.n; ++i)
        for (int j : d.adj[i])
            if (i < j) edges.emplace_back(i, j);
    std::vector<HeightFunction> out;
    for (unsigned mask = 0; mask < (1u << edges.size()); ++mask) {
        // The diagram is a tree, so propagating from vertex 1 is consistent.
        HeightFunction xi{{1, 0}};
        std::deque<int> q{1};
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (std::size_t k = 0; k < edges.size(); ++k) {
                auto [i, j] = edges[k];
                int up = (mask >> k) & 1 ? 1 : -1; // bit set: i -> j
                if (i == v && !xi.count(j)) {
                    xi[j] = xi[i] + up;
                    q.push_back(j);
                } else if (j == v && !xi.count(i)) {
                    xi[i] = xi[j] - up;
                    q.push_back(i);
                }
            }
        }
        int lo = xi.begin()->second;
        for (auto& [k, v] : xi) lo = std::min(lo, v);
        // Shift by an even amount to keep parity.
        int shift = lo - (((lo % 2) + 2) % 2);
        for (auto& [k, v] : xi) v -= shift;
        out.push_back(xi);
    }
    return out;
}

std::optional<std::pair<HeightFunction, std::vector<int>>> adapted_expression(const DynkinDiagram& d,
                                                                                const WeylElement& target) {
    const auto& w = weyl_data(d);
    const int lt = length(w, target);
    for (const auto& xi0 : all_orientations(d)) {
        std::set<std::pair<WeylElement, HeightFunction>> dead;
        std::vector<int> word;
        std::function<bool(const HeightFunction&, const WeylElement&)> dfs = [&](const HeightFunction& xi,
                                                                                  const WeylElement& u) {
            if (static_cast<int>(word.size()) == lt) return u == target;
            if (dead.count({u, xi})) return false;
            for (int i : sources(d, xi)) {
                WeylElement v = compose(u, w.simple[i]);
                // v must be a left prefix of the target: l(v^-1 target) = l(target) - l(v).
                if (length(w, compose(inverse(v), target)) != lt - static_cast<int>(word.size()) - 1) continue;
                word.push_back(i);
                HeightFunction nx = xi;
                nx[i] += 2;
                if (dfs(nx, v)) return true;
                word.pop_back();
            }
            dead.insert({u, xi});
            return false;
        };
        if (dfs(xi0, identity_element(w))) return std::make_pair(xi0, word);
    }
    return std::nullopt;
}

MoveKind parse_move_kind(const std::string& s) {
    if (s == "commutation") return MoveKind::commutation;
    if (s == "braid") return MoveKind::braid;
    fail("BadMoveKind", "unknown move '" + s + "'");
}

std::string to_string(MoveKind k) { return k == MoveKind::commutation ? "commutation" : "braid"; }

int SeqWindow::at(int s) const {
    if (!contains(s)) fail("OutOfWindow", "position " + std::to_string(s) + " outside the window");
    return letters[s - first];
}

SeqWindow apply_move(const DynkinDiagram& d, const SeqWindow& w, MoveKind kind, int s) {
    SeqWindow r = w;
    if (kind == MoveKind::commutation) {
        if (!w.contains(s) || !w.contains(s + 1))
            fail("MovePreconditionFailed", "positions s, s+1 must lie in the window");
        if (w.at(s) == w.at(s + 1) || d.adjacent(w.at(s), w.at(s + 1)))
            fail("MovePreconditionFailed", "commutation needs non-adjacent distinct letters");
        std::swap(r.letters[s - w.first], r.letters[s + 1 - w.first]);
        return r;
    }
    if (!w.contains(s - 1) || !w.contains(s + 1)) fail("MovePreconditionFailed", "positions s-1..s+1 must lie in the window");
    if (!d.adjacent(w.at(s), w.at(s + 1)) || w.at(s - 1) != w.at(s + 1))
        fail("MovePreconditionFailed", "braid needs a pattern j,i,j with i ~ j");
    r.letters[s - 1 - w.first] = w.at(s);
    r.letters[s + 1 - w.first] = w.at(s);
    r.letters[s - w.first] = w.at(s + 1);
    return r;
}

nlohmann::json to_json(const WeylData& w) {
    nlohmann::json pos = nlohmann::json::array();
    for (int k = 0; k < w.npos; ++k) pos.push_back(w.roots[k]);
    std::vector<int> star(w.star.begin() + 1, w.star.end());
    return {{"positive_roots", pos}, {"l0", w.npos}, {"star", star}, {"h", w.h}, {"w0", w.w0_word}};
}

} // namespace lcl
