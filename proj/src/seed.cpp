#include "lcl/seed.hpp"

#include "lcl/error.hpp"

#include <algorithm>

namespace lcl {

LambdaSeed root_seed(const CompatiblePair& pair, const IntMatrix& bhat) {
    LambdaSeed s;
    s.pair = pair;
    s.bhat = bhat;
    const int m = bhat.rows();
    for (int i = 0; i < m; ++i) s.cluster.push_back(LaurentPoly::variable(m, i));
    return s;
}

LambdaSeed mutate_seed(const LambdaSeed& s, int v) {
    const int m = s.m(), n = s.n();
    if (v < 0 || v >= n) fail("IndexFrozen", "index " + std::to_string(v) + " is not unfrozen");
    LaurentPoly plus = LaurentPoly::constant(m, 1), minus = LaurentPoly::constant(m, 1);
    for (int j = 0; j < m; ++j) {
        std::int64_t b = s.pair.btilde(j, v);
        if (b > 0) plus = plus * s.cluster[j].pow(static_cast<int>(b));
        if (b < 0) minus = minus * s.cluster[j].pow(static_cast<int>(-b));
    }
    LambdaSeed out = s;
    out.cluster[v] = exact_divide(plus + minus, s.cluster[v]);
    for (const auto& [e, c] : out.cluster[v].terms())
        for (int k = n; k < m; ++k)
            if (e[k] < 0) fail("FrozenInverted", "mutation produced a negative frozen exponent");
    MutatedPair mp = mutate_pair(s.pair, s.bhat, v);
    out.pair = mp.pair;
    out.bhat = mp.bhat;
    out.trail.push_back(v);
    return out;
}

LambdaSeed mutate_along(const LambdaSeed& s, const std::vector<int>& seq) {
    LambdaSeed cur = s;
    for (int v : seq) cur = mutate_seed(cur, v);
    return cur;
}

ClusterMonomial cluster_variable(const std::vector<int>& trail, int slot, int m) {
    ClusterMonomial u{trail, std::vector<int>(static_cast<std::size_t>(m), 0)};
    u.exps.at(static_cast<std::size_t>(slot)) = 1;
    return u;
}

std::vector<int> reduce_trail(const std::vector<int>& seq) {
    std::vector<int> out;
    for (int v : seq) {
        if (!out.empty() && out.back() == v) out.pop_back();
        else out.push_back(v);
    }
    return out;
}

namespace {

// Indices of n linearly independent rows of a full column rank m x n matrix.
std::vector<int> independent_rows(const IntMatrix& b) {
    const int m = b.rows(), n = b.cols();
    std::vector<std::vector<BigInt>> basis; // echelon rows
    std::vector<int> pivots, chosen;
    for (int i = 0; i < m && static_cast<int>(chosen.size()) < n; ++i) {
        std::vector<BigInt> row(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) row[j] = b(i, j);
        for (std::size_t k = 0; k < basis.size(); ++k) {
            int p = pivots[k];
            if (row[p] == 0) continue;
            BigInt f = row[p], g = basis[k][p];
            for (int j = 0; j < n; ++j) row[j] = row[j] * g - basis[k][j] * f;
        }
        auto nz = std::find_if(row.begin(), row.end(), [](const BigInt& x) { return x != 0; });
        if (nz == row.end()) continue;
        pivots.push_back(static_cast<int>(nz - row.begin()));
        basis.push_back(std::move(row));
        chosen.push_back(i);
    }
    if (static_cast<int>(chosen.size()) < n) fail("NotPointed", "extended exchange matrix lacks full column rank");
    return chosen;
}

} // namespace

PointedDecomposition decompose(const LaurentPoly& u, const IntMatrix& btilde) {
    const int m = btilde.rows(), n = btilde.cols();
    if (u.nvars() != m) fail("BadShape", "polynomial and matrix sizes differ");
    if (u.is_zero()) fail("NotPointed", "zero polynomial");
    std::vector<int> rows = independent_rows(btilde);
    IntMatrix a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = btilde(rows[i], j);
    BigInt det;
    IntMatrix adj = adjugate(a, &det);

    const Exponent& h0 = u.terms().begin()->first;
    std::vector<std::pair<Exponent, std::vector<std::int64_t>>> coords;
    std::vector<std::int64_t> lo(static_cast<std::size_t>(n), INT64_MAX);
    for (const auto& [h, c] : u.terms()) {
        std::vector<std::int64_t> w(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            BigInt acc = 0;
            for (int k = 0; k < n; ++k) acc += BigInt(adj(i, k)) * (h[rows[k]] - h0[rows[k]]);
            if (acc % det != 0) fail("NotPointed", "exponent difference outside the lattice of B~");
            w[i] = to_i64(acc / det);
        }
        for (int r = 0; r < m; ++r) {
            std::int64_t s = 0;
            for (int j = 0; j < n; ++j) s += btilde(r, j) * w[j];
            if (s != h[r] - h0[r]) fail("NotPointed", "exponent difference not in the image of B~");
        }
        for (int i = 0; i < n; ++i) lo[i] = std::min(lo[i], w[i]);
        coords.emplace_back(h, std::move(w));
    }
    PointedDecomposition d;
    d.f = LaurentPoly(n);
    bool found = false;
    for (const auto& [h, w] : coords) {
        Exponent v(static_cast<std::size_t>(n));
        bool zero = true;
        for (int i = 0; i < n; ++i) {
            v[i] = static_cast<int>(w[i] - lo[i]);
            zero = zero && v[i] == 0;
        }
        if (zero) {
            found = true;
            d.g.assign(h.begin(), h.end());
        }
        d.f.add_term(v, u.terms().at(h));
    }
    if (!found) fail("NotPointed", "no componentwise-minimal exponent");
    if (d.f.terms().begin()->second != 1) fail("NotPointed", "F-polynomial constant term is not 1");
    return d;
}

LaurentPoly express_in(const ClusterMonomial& u, const LambdaSeed& t) {
    std::vector<int> path(t.trail.rbegin(), t.trail.rend());
    path.insert(path.end(), u.trail.begin(), u.trail.end());
    LambdaSeed s = mutate_along(root_seed(t.pair, t.bhat), reduce_trail(path));
    LaurentPoly out = LaurentPoly::constant(t.m(), 1);
    for (int i = 0; i < t.m(); ++i)
        if (u.exps[i] < 0) fail("NotClusterMonomial", "negative exponent");
        else if (u.exps[i] > 0) out = out * s.cluster[i].pow(u.exps[i]);
    return out;
}

PointedDecomposition decompose_in(const ClusterMonomial& u, const LambdaSeed& t) {
    return decompose(express_in(u, t), t.pair.btilde);
}

std::int64_t tropical_eval(const LaurentPoly& f, const std::vector<std::int64_t>& r) {
    if (f.is_zero()) fail("ZeroPolynomial", "tropical evaluation of 0");
    std::int64_t best = INT64_MIN;
    for (const auto& [e, c] : f.terms()) {
        std::int64_t s = 0;
        for (std::size_t k = 0; k < e.size(); ++k) s += e[k] * r.at(k);
        best = std::max(best, s);
    }
    return best;
}

namespace {

std::vector<std::int64_t> scaled_head(const std::vector<std::int64_t>& g, int n, std::int64_t d) {
    std::vector<std::int64_t> r(g.begin(), g.begin() + n);
    for (auto& x : r) x *= d;
    return r;
}

} // namespace

std::int64_t tropical_invariant(const PointedDecomposition& u, const PointedDecomposition& u2, const CompatiblePair& p) {
    const int m = p.lambda.rows(), n = p.btilde.cols();
    std::int64_t s = 0;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) s += u.g[i] * p.lambda(i, j) * u2.g[j];
    return s + tropical_eval(u.f, scaled_head(u2.g, n, p.d));
}

std::int64_t tropical_invariant(const ClusterMonomial& u, const ClusterMonomial& u2, const LambdaSeed& t) {
    return tropical_invariant(decompose_in(u, t), decompose_in(u2, t), t.pair);
}

std::int64_t f_invariant(const PointedDecomposition& u, const PointedDecomposition& u2, const CompatiblePair& p) {
    const int n = p.btilde.cols();
    std::int64_t f = tropical_eval(u.f, scaled_head(u2.g, n, p.d)) + tropical_eval(u2.f, scaled_head(u.g, n, p.d));
    if (f != tropical_invariant(u, u2, p) + tropical_invariant(u2, u, p))
        fail("MatrixMismatch", "F-invariant differs from the sum of tropical invariants");
    if (f < 0) fail("MatrixMismatch", "negative F-invariant");
    return f;
}

std::int64_t f_invariant(const ClusterMonomial& u, const ClusterMonomial& u2, const LambdaSeed& t) {
    return f_invariant(decompose_in(u, t), decompose_in(u2, t), t.pair);
}

nlohmann::json to_json(const LambdaSeed& s) {
    nlohmann::json cl = nlohmann::json::array();
    for (const auto& x : s.cluster) cl.push_back(to_json(x));
    return {{"cluster", cl},
            {"btilde", to_json(s.pair.btilde)},
            {"lambda", to_json(s.pair.lambda)},
            {"d", s.pair.d},
            {"bhat", to_json(s.bhat)},
            {"trail", s.trail}};
}

} // namespace lcl
