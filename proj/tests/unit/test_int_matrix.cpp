#include <doctest.h>

#include "lcl/error.hpp"
#include "lcl/int_matrix.hpp"

#include <numeric>
#include <random>

using lcl::BigInt;
using lcl::IntMatrix;

namespace {

// Leibniz expansion; exponential but independent of elimination.
BigInt leibniz(const IntMatrix& a) {
    const int n = a.rows();
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    BigInt total = 0;
    do {
        int inv = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) inv += p[i] > p[j];
        BigInt term = (inv % 2) ? -1 : 1;
        for (int i = 0; i < n; ++i) term *= a(i, p[i]);
        total += term;
    } while (std::next_permutation(p.begin(), p.end()));
    return total;
}

} // namespace

TEST_CASE("det_inv on small hand cases") {
    IntMatrix a{{0, 1}, {-1, 1}};
    auto d = lcl::det_inv(a);
    CHECK(d.det == 1);
    CHECK(lcl::adjugate(a) == IntMatrix{{1, -1}, {1, 0}});

    CHECK(lcl::det_inv(IntMatrix::identity(4)).det == 1);
    CHECK(lcl::adjugate(IntMatrix::identity(3)) == IntMatrix::identity(3));

    IntMatrix z{{0}};
    CHECK(lcl::det_inv(z).det == 0);
    CHECK_THROWS_WITH_AS(lcl::adjugate(z), doctest::Contains("Singular"), lcl::Error);
}

TEST_CASE("det_inv needs pivoting") {
    IntMatrix a{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}};
    CHECK(lcl::determinant(a) == -1);
    CHECK(lcl::adjugate(a) * a == IntMatrix::identity(3).scaled(-1));
}

TEST_CASE("det_inv agrees with Leibniz and A*adj = det*I on random matrices") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> entry(-3, 3), size(1, 6);
    for (int trial = 0; trial < 300; ++trial) {
        int n = size(rng);
        IntMatrix a(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) a(i, j) = entry(rng);
        auto d = lcl::det_inv(a);
        REQUIRE(d.det == leibniz(a));
        if (d.det == 0) continue;
        IntMatrix adj = lcl::adjugate(a);
        IntMatrix want = IntMatrix::identity(n).scaled(static_cast<std::int64_t>(d.det));
        CHECK(a * adj == want);
        CHECK(adj * a == want);
    }
}
