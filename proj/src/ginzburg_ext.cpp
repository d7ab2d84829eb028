#include "lcl/ginzburg_ext.hpp"

#include "lcl/dynkin_ar.hpp"
#include "lcl/error.hpp"
#include "lcl/green_seq.hpp"

#include <algorithm>
#include <deque>

namespace lcl {

HeightFunction adapted_height(const IndexSequence& w) {
    const DynkinDiagram& d = w.diagram();
    if (!w.overrides().empty()) fail("NotAdapted", "word carries moves");
    std::map<int, int> first;
    for (int k = 0; k < w.l0(); ++k) first.emplace(w.base()[k], k);
    // i -> j iff i occurs first; heights by breadth-first search from vertex 1.
    HeightFunction xi{{1, 0}};
    std::deque<int> todo{1};
    while (!todo.empty()) {
        int i = todo.front();
        todo.pop_front();
        for (int j : d.adj[i]) {
            if (xi.count(j)) continue;
            xi[j] = xi[i] + (first.at(i) < first.at(j) ? 1 : -1);
            todo.push_back(j);
        }
    }
    if (!is_source_sequence(d, xi, w.base())) fail("NotAdapted", "base word is not a source sequence");
    return xi;
}

namespace {

RegularModel make_model(const IndexSequence& w, const HeightFunction& base_xi, int a, int b) {
    const DynkinDiagram& d = w.diagram();
    RegularModel m;
    m.w = w;
    m.base_xi = base_xi;
    m.xi = shifted_height(w, base_xi, b);
    m.a = a;
    m.b = b;
    m.iqp = build_interval(w, a, b);
    hl_coordinates(m.iqp, w, base_xi); // throws NotAdapted
    m.ell = (b - a + 1) / d.n;
    for (const auto& [s, i] : m.iqp.row) {
        int dd = 0;
        for (int t = s; t <= b; t = w.plus(t)) ++dd;
        m.vertices[s] = {i, m.ell + 1 - dd, dd};
    }
    for (const auto& [s, v] : m.vertices)
        if (v.c < 1) fail("NotAdapted", "rows of the window have different sizes");
    return m;
}

} // namespace

RegularModel regular_embed(const IndexSequence& w, int a, int b) {
    if (a > b) fail("EmptyInterval", "a > b");
    const int period = 2 * w.l0();
    const int len = b - a + 1;
    const int k = (len + period - 1) / period;
    return make_model(w, adapted_height(w), b - k * period + 1, b);
}

RegularModel regular_window(const IndexSequence& w, int b, int k) {
    if (k < 1) fail("BadArgument", "k must be positive");
    return make_model(w, adapted_height(w), b - 2 * w.l0() * k + 1, b);
}

ExtRow ext_dims(const RegularModel& m, int s, int t) {
    auto is = m.vertices.find(s), it = m.vertices.find(t);
    if (is == m.vertices.end() || it == m.vertices.end())
        fail("VertexOutsideModel", "vertex " + std::to_string(is == m.vertices.end() ? s : t) + " not in [" +
                                       std::to_string(m.a) + "," + std::to_string(m.b) + "]");
    const DynkinDiagram& d = m.w.diagram();
    const ModelVertex& vs = is->second;
    const ModelVertex& vt = it->second;
    ExtRow row;
    for (int q = 0; q <= m.ell - 1; ++q) {
        const int lo = std::max(1, m.ell + 1 - vt.d - q), hi = m.ell - q;
        if (vs.c < lo || vs.c > hi) continue;
        DerivedIndec x = tau_inv_derived(d, m.xi, vt.row, q);
        const int dim = x.dim[vs.row - 1];
        if (dim != 0) row[-x.m] += dim;
    }
    return row;
}

ExtTable ext_table(const RegularModel& m, int a, int b) {
    ExtTable out;
    for (const auto& [s, vs] : m.vertices)
        for (const auto& [t, vt] : m.vertices)
            if (s >= a && s <= b && t >= a && t <= b) out[{s, t}] = ext_dims(m, s, t);
    return out;
}

ExtTable ext_table(const RegularModel& m) { return ext_table(m, m.a, m.b); }

int bracket(const RegularModel& m, int s, int t) {
    auto st = ext_dims(m, s, t), ts = ext_dims(m, t, s);
    int total = 0;
    for (const auto& [n, dim] : st) total += (n % 2 == 0 ? 1 : -1) * dim;
    for (const auto& [n, dim] : ts) total -= (n % 2 == 0 ? 1 : -1) * dim;
    return total;
}

int euler_char(const RegularModel& m, int s, int t) {
    int total = 0;
    for (const auto& [n, dim] : ext_dims(m, s, t)) total += (n % 2 == 0 ? 1 : -1) * dim;
    return total;
}

IntMatrix bracket_matrix(const RegularModel& m, const VertexOrder& order) {
    IntMatrix out(order.m(), order.m());
    for (int x = 0; x < order.m(); ++x)
        for (int y = 0; y < order.m(); ++y) out(x, y) = bracket(m, order.ids[x], order.ids[y]);
    return out;
}

IntMatrix chi_matrix(const RegularModel& m, const VertexOrder& order) {
    IntMatrix out(order.m(), order.m());
    for (int x = 0; x < order.m(); ++x)
        for (int y = 0; y < order.m(); ++y) out(x, y) = euler_char(m, order.ids[x], order.ids[y]);
    return out;
}

bool euler_matrix_check(const RegularModel& m, int a, int b) {
    IntervalIQP sub = build_interval(m.w, a, b);
    QuiverPair qp = build_pair(sub.qp.quiver);
    BigInt det;
    IntMatrix adj = adjugate(qp.bhat, &det);
    if (det != 1 && det != -1) fail("MatrixMismatch", "Euler matrix is not unimodular");
    const IntMatrix inv_t = adj.transpose().scaled(to_i64(det)); // B^-T since det^2 = 1
    IntMatrix chi = chi_matrix(m, qp.order);
    for (int x = 0; x < chi.rows(); ++x)
        for (int y = 0; y < chi.cols(); ++y)
            if (chi(x, y) != inv_t(x, y))
                fail("MatrixMismatch", "chi(" + std::to_string(qp.order.ids[x]) + "," +
                                           std::to_string(qp.order.ids[y]) + ") = " + std::to_string(chi(x, y)) +
                                           " but B^-T has " + std::to_string(inv_t(x, y)));
    return true;
}

bool euler_matrix_check(const RegularModel& m) { return euler_matrix_check(m, m.a, m.b); }

int lambda_additive(const RegularModel& m, int s, int t) { return bracket(m, s, t); }

DualPipeline::DualPipeline(IndexSequence w, int a, int b, int max_k)
    : w_(std::move(w)), a_(a), b_(b), max_k_(max_k), model_(regular_embed(w_, a, b)) {
    table_ = ext_table(model_);
}

int DualPipeline::route_a(int v, int w, int n) const {
    auto it = table_.find({v, w});
    if (it == table_.end())
        fail("VertexOutsideModel", "pair (" + std::to_string(v) + "," + std::to_string(w) + ") not in the fixture");
    auto e = it->second.find(1 - n);
    return e == it->second.end() ? 0 : e->second;
}

DualPipeline::Window& DualPipeline::window(int k) {
    auto it = windows_.find(k);
    if (it != windows_.end()) return it->second;
    Window win;
    win.model = regular_window(w_, b_, k);
    win.pair = build_pair(win.model.iqp.qp.quiver);
    return windows_.emplace(k, std::move(win)).first->second;
}

const LambdaSeed& DualPipeline::dual_seed(Window& win, int n) {
    auto it = win.seeds.find(n);
    if (it != win.seeds.end()) return it->second;
    // Grow from the largest cached prefix: the sequence for n extends the one for n-1.
    const int r = win.model.ell - 1;
    auto seq = duality_sequence(win.model.iqp, w_, win.model.base_xi, n, r);
    int from = 0;
    LambdaSeed s = root_seed(win.pair.pair, win.pair.bhat);
    for (int p = n - 1; p >= 1; --p)
        if (auto c = win.seeds.find(p); c != win.seeds.end()) {
            s = c->second;
            from = static_cast<int>(seq.size() / n * p);
            break;
        }
    for (std::size_t k = from; k < seq.size(); ++k) s = mutate_seed(s, win.pair.order.index(seq[k]));
    return win.seeds.emplace(n, std::move(s)).first->second;
}

int DualPipeline::route_b(int v, int w, int n, int k) {
    Window& win = window(k);
    const auto& vv = win.model.vertices.at(v);
    const auto& vw = win.model.vertices.at(w);
    if (vv.d > win.model.ell - 1 || vw.d > win.model.ell - 1)
        fail("WindowTooSmall", "vertex lies in the frozen column of window k=" + std::to_string(k));
    const int row = n % 2 == 1 ? weyl_data(w_.diagram()).star[vw.row] : vw.row;
    auto tracked = row_vertex(win.model.iqp, w_, row, vw.d);
    if (!tracked) fail("WindowTooSmall", "tracked vertex left the window");
    const LambdaSeed& s = dual_seed(win, n);
    const int mm = s.m();
    PointedDecomposition x_v;
    x_v.g.assign(mm, 0);
    x_v.g[win.pair.order.index(v)] = 1;
    x_v.f = LaurentPoly::constant(s.n(), 1);
    PointedDecomposition y = decompose(s.cluster[win.pair.order.index(*tracked)], win.pair.pair.btilde);
    const std::int64_t f = f_invariant(x_v, y, win.pair.pair);
    if (f % 2 != 0) fail("Mismatch", "odd F-invariant " + std::to_string(f));
    return static_cast<int>(f / 2);
}

DualD DualPipeline::d_invariant_dual(int v, int w, int n) {
    if (n < 1) fail("BadArgument", "n must be at least 1");
    std::lock_guard lock(mu_);
    DualD out;
    out.route_a = route_a(v, w, n);
    const int h = weyl_data(w_.diagram()).h;
    const int need = std::max(model_.vertices.at(v).d, model_.vertices.at(w).d);
    int k = 1;
    while (h * k - 1 < need) ++k;
    int prev = route_b(v, w, n, k);
    for (; k < max_k_; ++k) {
        int next = route_b(v, w, n, k + 1);
        if (next == prev) {
            out.route_b = prev;
            out.k = k;
            if (out.route_a != out.route_b)
                fail("Mismatch", "d(" + std::to_string(v) + ", D^-" + std::to_string(n) + " " + std::to_string(w) +
                                     "): homological " + std::to_string(out.route_a) + ", monoidal " +
                                     std::to_string(out.route_b));
            return out;
        }
        prev = next;
    }
    fail("WindowTooSmall", "route B did not stabilise up to k=" + std::to_string(max_k_));
}

int DualPipeline::lambda_series(int v, int w, int n_max) {
    for (const auto& key : {std::pair{v, w}, std::pair{w, v}}) {
        const auto& row = table_.at(key);
        if (!row.empty() && row.begin()->first < 1 - n_max)
            fail("TailNotVanished", "N=" + std::to_string(n_max) + " misses degree " +
                                        std::to_string(row.begin()->first));
    }
    int total = 0; // d(V,W) = 0 for a pair in one seed
    for (int n = 1; n <= n_max; ++n) {
        const int term = d_invariant_dual(v, w, n).route_b - d_invariant_dual(w, v, n).route_b;
        total += (n % 2 == 1 ? 1 : -1) * term;
    }
    return total;
}

nlohmann::json to_json(const RegularModel& m) {
    nlohmann::json vs = nlohmann::json::object();
    for (const auto& [s, v] : m.vertices) vs[std::to_string(s)] = {{"row", v.row}, {"c", v.c}, {"d", v.d}};
    nlohmann::json xi = nlohmann::json::object();
    for (const auto& [i, x] : m.xi) xi[std::to_string(i)] = x;
    return {{"a", m.a}, {"b", m.b}, {"ell", m.ell}, {"xi", xi}, {"vertices", vs}};
}

nlohmann::json to_json(const ExtTable& t) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [st, row] : t) {
        nlohmann::json dims = nlohmann::json::object();
        for (const auto& [n, dim] : row) dims[std::to_string(n)] = dim;
        out.push_back({{"s", st.first}, {"t", st.second}, {"dims", dims}});
    }
    return out;
}

} // namespace lcl
