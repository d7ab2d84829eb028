#include "lcl/compatible_pair.hpp"

#include "lcl/error.hpp"

#include <algorithm>

namespace lcl {

int VertexOrder::index(int id) const {
    auto it = std::find(ids.begin(), ids.end(), id);
    if (it == ids.end()) fail("UnknownVertex", "vertex " + std::to_string(id) + " not in order");
    return static_cast<int>(it - ids.begin());
}

VertexOrder standard_order(const IceQuiver& q) {
    VertexOrder o;
    o.ids = q.unfrozen_ids();
    o.n = static_cast<int>(o.ids.size());
    for (int f : q.frozen_ids()) o.ids.push_back(f);
    return o;
}

IntMatrix euler_matrix(const IceQuiver& q, const VertexOrder& order) {
    const int m = order.m();
    if (m != static_cast<int>(q.vertices().size())) fail("BadOrdering", "order does not list every vertex");
    for (int k = 0; k < m; ++k) {
        if (!q.has_vertex(order.ids[k])) fail("BadOrdering", "unknown vertex in order");
        if (q.is_frozen(order.ids[k]) != (k >= order.n)) fail("BadOrdering", "unfrozen vertices must come first");
    }
    IntMatrix b(m, m);
    for (int k = order.n; k < m; ++k) b(k, k) = 1;
    for (const auto& a : q.arrows()) {
        int i = order.index(a.src), j = order.index(a.dst);
        if (i == j) continue;
        if (!a.frozen) b(i, j) += 1;
        b(j, i) -= 1;
    }
    return b;
}

CompatiblePair build_pair(const IntMatrix& bhat, int n) {
    BigInt det;
    IntMatrix adj;
    try {
        adj = adjugate(bhat, &det);
    } catch (const Error& e) {
        if (e.code() == "Singular") fail("EulerSingular", "Euler matrix has determinant 0");
        throw;
    }
    // B^-1 = adj / det, so |det| (B^-T - B^-1) = sign(det) (adj^T - adj).
    const std::int64_t sign = det > 0 ? 1 : -1;
    CompatiblePair p;
    p.btilde = bhat.col_block(0, n);
    p.lambda = (adj.transpose() - adj).scaled(sign);
    p.d = 2 * to_i64(det > 0 ? det : BigInt(-det));
    if (!is_compatible(p)) fail("MatrixMismatch", "compatibility identity fails");
    return p;
}

QuiverPair build_pair(const IceQuiver& q) {
    QuiverPair r;
    r.order = standard_order(q);
    r.bhat = euler_matrix(q, r.order);
    r.det = determinant(r.bhat);
    r.pair = build_pair(r.bhat, r.order.n);
    return r;
}

bool is_compatible(const CompatiblePair& p) {
    const int m = p.lambda.rows(), n = p.btilde.cols();
    if (!p.lambda.is_skew() || p.btilde.rows() != m) return false;
    IntMatrix prod = p.btilde.transpose() * p.lambda;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j)
            if (prod(i, j) != (i == j ? p.d : 0)) return false;
    return true;
}

IntMatrix e_matrix(const IntMatrix& bhat, int v) {
    const int m = bhat.rows();
    IntMatrix e = IntMatrix::identity(m);
    for (int i = 0; i < m; ++i)
        if (i != v) e(i, v) = std::max<std::int64_t>(bhat(i, v), 0);
    e(v, v) = -1;
    return e;
}

IntMatrix mutate_btilde(const IntMatrix& b, int v) {
    IntMatrix r = b;
    auto pos = [](std::int64_t x) { return std::max<std::int64_t>(x, 0); };
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) {
            if (i == v || j == v) r(i, j) = -b(i, j);
            else r(i, j) = b(i, j) + pos(b(i, v)) * pos(b(v, j)) - pos(-b(i, v)) * pos(-b(v, j));
        }
    return r;
}

IntMatrix mutate_lambda(const IntMatrix& lambda, const IntMatrix& btilde, int v) {
    const int m = lambda.rows();
    IntMatrix r = lambda;
    for (int i = 0; i < m; ++i) {
        if (i == v) continue;
        std::int64_t s = -lambda(i, v), t = -lambda(v, i);
        for (int l = 0; l < m; ++l) {
            std::int64_t w = std::max<std::int64_t>(btilde(l, v), 0);
            s += w * lambda(i, l);
            t += w * lambda(l, i);
        }
        r(i, v) = s;
        r(v, i) = t;
    }
    return r;
}

MutatedPair mutate_pair(const CompatiblePair& p, const IntMatrix& bhat, int v) {
    if (v < 0 || v >= p.btilde.cols()) fail("IndexFrozen", "index " + std::to_string(v) + " is not unfrozen");
    IntMatrix e = e_matrix(bhat, v);
    MutatedPair out;
    out.bhat = e * bhat * e.transpose();
    out.pair.btilde = out.bhat.col_block(0, p.btilde.cols());
    out.pair.lambda = e.transpose() * p.lambda * e;
    out.pair.d = p.d;
    if (out.pair.lambda != mutate_lambda(p.lambda, p.btilde, v))
        fail("MatrixMismatch", "E_v conjugation and componentwise Lambda rule disagree");
    if (out.pair.btilde != mutate_btilde(p.btilde, v))
        fail("MatrixMismatch", "E_v conjugation and componentwise exchange rule disagree");
    return out;
}

nlohmann::json to_json(const IntMatrix& m) {
    nlohmann::json data = nlohmann::json::array();
    for (int i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        data.push_back(row);
    }
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", data}};
}

IntMatrix matrix_from_json(const nlohmann::json& j) {
    try {
        IntMatrix m(j.at("rows").get<int>(), j.at("cols").get<int>());
        const auto& data = j.at("data");
        if (static_cast<int>(data.size()) != m.rows()) fail("BadShape", "row count");
        for (int i = 0; i < m.rows(); ++i) {
            if (static_cast<int>(data[i].size()) != m.cols()) fail("BadShape", "column count");
            for (int k = 0; k < m.cols(); ++k) m(i, k) = data[i][k].get<std::int64_t>();
        }
        return m;
    } catch (const nlohmann::json::exception& e) {
        fail("BadJson", e.what());
    }
}

} // namespace lcl
