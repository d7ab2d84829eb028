#include <doctest.h>

#include "fixtures.hpp"
#include "lcl/compatible_pair.hpp"
#include "lcl/error.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <functional>
#include <random>

using lcl::IntMatrix;

namespace {

using Q = boost::multiprecision::cpp_rational;

// Rational Gauss-Jordan inverse: an oracle independent of the Bareiss kernel.
std::vector<std::vector<Q>> rational_inverse(const IntMatrix& a) {
    const int n = a.rows();
    std::vector<std::vector<Q>> m(n, std::vector<Q>(2 * n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m[i][j] = Q(a(i, j));
        m[i][n + i] = Q(1);
    }
    for (int c = 0; c < n; ++c) {
        int p = c;
        while (m[p][c] == 0) ++p;
        std::swap(m[p], m[c]);
        Q piv = m[c][c];
        for (auto& x : m[c]) x /= piv;
        for (int i = 0; i < n; ++i) {
            if (i == c || m[i][c] == 0) continue;
            Q f = m[i][c];
            for (int j = 0; j < 2 * n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    std::vector<std::vector<Q>> inv(n, std::vector<Q>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
    return inv;
}

std::string code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const lcl::Error& e) {
        return e.code();
    }
    return "";
}

} // namespace

TEST_CASE("Euler matrix hand cases") {
    auto q = fx::u_to_f();
    auto order = lcl::standard_order(q);
    CHECK(lcl::euler_matrix(q, order) == IntMatrix{{0, 1}, {-1, 1}});
    CHECK(lcl::euler_matrix(fx::linear(2), lcl::standard_order(fx::linear(2))) == IntMatrix{{0, 1}, {-1, 0}});

    lcl::VertexOrder bad{{2, 1}, 1};
    CHECK(code_of([&] { lcl::euler_matrix(q, bad); }) == "BadOrdering");
}

TEST_CASE("build_pair on u->f") {
    auto r = lcl::build_pair(fx::u_to_f());
    CHECK(r.det == 1);
    CHECK(r.pair.lambda == IntMatrix{{0, 2}, {-2, 0}});
    CHECK(r.pair.d == 2);
    CHECK(r.pair.btilde == IntMatrix{{0}, {-1}});

    lcl::IceQuiver single;
    single.add_vertex(1);
    CHECK(code_of([&] { lcl::build_pair(single); }) == "EulerSingular");
}

TEST_CASE("build_pair on linear quivers with the first vertex frozen") {
    for (int l = 1; l <= 7; ++l) {
        // Arrows point left, towards the frozen vertex, as in an A1 interval quiver.
        lcl::IceQuiver q;
        for (int c = 1; c <= l; ++c) q.add_vertex(c, c == 1);
        for (int c = 2; c <= l; ++c) q.add_arrow_auto(c, c - 1);
        auto r = lcl::build_pair(q);
        CHECK(lcl::is_compatible(r.pair));
        CHECK(r.pair.d == 2 * static_cast<std::int64_t>(abs(r.det)));
    }
}

TEST_CASE("Lambda agrees with a rational-inverse oracle") {
    auto q = fx::a3_example();
    auto r = lcl::build_pair(q);
    auto inv = rational_inverse(r.bhat);
    Q absdet(boost::multiprecision::abs(r.det));
    for (int i = 0; i < r.bhat.rows(); ++i)
        for (int j = 0; j < r.bhat.cols(); ++j) CHECK(absdet * (inv[j][i] - inv[i][j]) == Q(r.pair.lambda(i, j)));
    // b_ij = -b_ji whenever i or j is unfrozen.
    for (int i = 0; i < r.bhat.rows(); ++i)
        for (int j = 0; j < r.bhat.cols(); ++j)
            if (i < r.order.n || j < r.order.n) CHECK(r.bhat(i, j) == -r.bhat(j, i));
}

TEST_CASE("mutate_pair on u->f") {
    auto r = lcl::build_pair(fx::u_to_f());
    auto m = lcl::mutate_pair(r.pair, r.bhat, 0);
    CHECK(m.pair.lambda == IntMatrix{{0, -2}, {2, 0}});
    CHECK(m.bhat == IntMatrix{{0, -1}, {1, 1}});
    auto mq = lcl::mutate_fz(fx::u_to_f(), 1);
    CHECK(lcl::euler_matrix(mq, lcl::standard_order(mq)) == m.bhat);
    auto back = lcl::mutate_pair(m.pair, m.bhat, 0);
    CHECK(back.pair == r.pair);
    CHECK(back.bhat == r.bhat);
    CHECK(code_of([&] { lcl::mutate_pair(r.pair, r.bhat, 1); }) == "IndexFrozen");
}

TEST_CASE("mutate_pair commutes with rebuilding on the A3 example quiver") {
    auto q = fx::a3_example();
    auto r = lcl::build_pair(q);
    for (int k = 0; k < r.order.n; ++k) {
        int v = r.order.ids[k];
        auto mq = lcl::mutate_fz(q, v);
        auto rebuilt = lcl::build_pair(mq);
        CHECK(rebuilt.order.ids == r.order.ids);
        auto m = lcl::mutate_pair(r.pair, r.bhat, k);
        CHECK(m.bhat == rebuilt.bhat);
        CHECK(m.pair == rebuilt.pair);
        CHECK(lcl::determinant(m.bhat) == r.det);
    }
}

TEST_CASE("random mutation walks keep compatibility") {
    std::mt19937 rng(3);
    auto q = fx::a3_example();
    for (int walk = 0; walk < 30; ++walk) {
        auto cur = q;
        auto r = lcl::build_pair(cur);
        lcl::CompatiblePair p = r.pair;
        IntMatrix bhat = r.bhat;
        for (int step = 0; step < 8; ++step) {
            int k = static_cast<int>(rng() % r.order.n);
            int v = r.order.ids[k];
            if (cur.has_two_cycle_at(v)) break;
            cur = lcl::mutate_fz(cur, v);
            auto m = lcl::mutate_pair(p, bhat, k);
            p = m.pair;
            bhat = m.bhat;
            CHECK(lcl::is_compatible(p));
            CHECK(lcl::build_pair(cur).pair == p);
        }
    }
}

TEST_CASE("matrix json round trip") {
    IntMatrix m{{1, -2, 3}, {0, 4, 5}};
    CHECK(lcl::matrix_from_json(lcl::to_json(m)) == m);
}
