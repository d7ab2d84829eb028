#include <doctest.h>

#include "lcl/error.hpp"
#include "lcl/ginzburg_ext.hpp"

#include <functional>

namespace {

std::string code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const lcl::Error& e) {
        return e.code();
    }
    return "";
}

lcl::IndexSequence a1() { return lcl::IndexSequence::extended(lcl::parse_dynkin("A1"), {1}); }

// Adapted fixtures: one word per orientation.
std::vector<lcl::IndexSequence> adapted_words(const char* type) {
    auto d = lcl::parse_dynkin(type);
    std::vector<lcl::IndexSequence> out;
    for (const auto& xi : lcl::all_orientations(d))
        out.push_back(lcl::IndexSequence::extended(d, lcl::adapted_word(d, xi)));
    return out;
}

} // namespace

TEST_CASE("regular_embed") {
    auto m = lcl::regular_embed(a1(), -1, 0);
    CHECK(m.a == -1);
    CHECK(m.ell == 2);
    auto m0 = lcl::regular_embed(a1(), 0, 0);
    CHECK(m0.a == -1);
    CHECK(m0.ell == 2);
    CHECK(m0.vertices.at(-1).c == 1);
    CHECK(m0.vertices.at(0).d == 1);

    auto a3 = lcl::parse_dynkin("A3");
    auto w = lcl::IndexSequence::extended(a3, {3, 1, 2, 3, 1, 2});
    auto m3 = lcl::regular_embed(w, -1, 6);
    CHECK(m3.a == -5);
    CHECK(m3.ell == 4); // 12 vertices on 3 rows
    for (const auto& [s, v] : m3.vertices) CHECK(v.c + v.d == 5);

    auto bad = lcl::IndexSequence::extended(a3, {1, 2, 3, 2, 1, 2});
    CHECK(code_of([&] { lcl::regular_embed(bad, -1, 6); }) == "NotAdapted");
    CHECK(code_of([&] { lcl::ext_dims(m0, 1, 0); }) == "VertexOutsideModel");
}

TEST_CASE("A1 window of width 2") {
    auto m = lcl::regular_embed(a1(), 0, 0);
    const int f = -1, u = 0;
    CHECK(lcl::ext_dims(m, u, f) == lcl::ExtRow{{0, 1}});
    CHECK(lcl::ext_dims(m, f, u) == lcl::ExtRow{{-1, 1}});
    CHECK(lcl::ext_dims(m, f, f) == lcl::ExtRow{{0, 1}, {-1, 1}});
    CHECK(lcl::ext_dims(m, u, u) == lcl::ExtRow{{0, 1}});
    CHECK(lcl::bracket(m, u, f) == 2);
    CHECK(lcl::bracket(m, f, u) == -2);
    CHECK(lcl::bracket(m, u, u) == 0);
    CHECK(lcl::euler_char(m, u, u) == 1);

    auto order = lcl::standard_order(m.iqp.qp.quiver); // u, f
    CHECK(lcl::chi_matrix(m, order) == lcl::IntMatrix{{1, 1}, {-1, 0}});
    CHECK(lcl::euler_matrix_check(m));
}

TEST_CASE("bracket and Euler form against the matrix formulas") {
    for (const char* type : {"A1", "A2", "A3"}) {
        CAPTURE(type);
        for (const auto& w : adapted_words(type)) {
            for (int k = 1; k <= 2; ++k) {
                auto m = lcl::regular_window(w, 0, k);
                if (m.iqp.qp.quiver.vertices().size() > 24) continue;
                CAPTURE(k);
                CHECK(lcl::euler_matrix_check(m));
                auto qp = lcl::build_pair(m.iqp.qp.quiver);
                CHECK(lcl::bracket_matrix(m, qp.order) == qp.pair.lambda);
            }
        }
    }
}

TEST_CASE("ext tables: support and a-independence") {
    for (const char* type : {"A1", "A2", "A3"}) {
        CAPTURE(type);
        for (const auto& w : adapted_words(type)) {
            for (int b : {0, 2, 5}) {
                auto m1 = lcl::regular_window(w, b, 1);
                auto m2 = lcl::regular_window(w, b, 2);
                for (const auto& [st, row] : lcl::ext_table(m1)) {
                    for (const auto& [n, dim] : row) {
                        CHECK(n <= 0);
                        CHECK(n > -m1.ell);
                        CHECK(dim > 0);
                    }
                    CHECK(lcl::ext_dims(m2, st.first, st.second) == row);
                }
            }
        }
    }
}

TEST_CASE("Euler check on a sub-window of a regular model") {
    auto d = lcl::parse_dynkin("A2");
    auto w = lcl::IndexSequence::extended(d, {1, 2, 1});
    auto m = lcl::regular_embed(w, -2, 1);
    CHECK(m.a == -4);
    CHECK(lcl::euler_matrix_check(m, -2, 1));
}

TEST_CASE("d invariants of left duals: A1") {
    lcl::DualPipeline p(a1(), 0, 0);
    const int f = -1, u = 0;
    auto one = p.d_invariant_dual(u, f, 1);
    CHECK(one.route_a == 1);
    CHECK(one.route_b == 1);
    CHECK(p.d_invariant_dual(f, u, 2).route_a == 1);
    for (int v : {f, u})
        for (int x : {f, u}) {
            CHECK(p.d_invariant_dual(v, x, 4).route_b == 0);
            CHECK(p.lambda_series(v, x, 2) == lcl::bracket(p.model(), v, x));
        }
    CHECK(p.lambda_series(u, f, 2) == 2);
    CHECK(p.lambda_series(u, f, 3) == 2);
    CHECK(code_of([&] { p.lambda_series(u, f, 1); }) == "TailNotVanished");
}

TEST_CASE("d invariants of left duals: A2") {
    for (const auto& w : adapted_words("A2")) {
        lcl::DualPipeline p(w, -5, 0);
        const auto& m = p.model();
        for (const auto& [v, vv] : m.vertices)
            for (const auto& [x, vx] : m.vertices) {
                CAPTURE(v);
                CAPTURE(x);
                for (int n = 1; n <= 3; ++n) {
                    auto dd = p.d_invariant_dual(v, x, n);
                    CHECK(dd.route_a == dd.route_b);
                }
                CHECK(p.lambda_series(v, x, m.ell) == lcl::bracket(m, v, x));
            }
    }
}

TEST_CASE("sub-windows inherit bracket and Euler form from the regular embedding") {
    for (const char* type : {"A2", "A3"}) {
        CAPTURE(type);
        for (const auto& w : adapted_words(type)) {
            const int b = 3;
            for (int a = b - 2 * w.l0() + 1; a <= b; ++a) {
                CAPTURE(a);
                auto m = lcl::regular_embed(w, a, b);
                auto qp = lcl::build_pair(lcl::build_interval(w, a, b).qp.quiver);
                CHECK(lcl::bracket_matrix(m, qp.order) == qp.pair.lambda);
                CHECK(lcl::euler_matrix_check(m, a, b));
            }
        }
    }
}
