#include <doctest.h>

#include "lcl/error.hpp"
#include "lcl/qp_mutation.hpp"

#include <functional>
#include <random>

using lcl::IceQuiver;
using lcl::Path;
using lcl::QP;

namespace {

// Local picture around s+1 for a braid move with s-1, s frozen:
// vertices 1 = s-1, 2 = s (frozen), 3 = s+1, 4 = (s+1)^+, 5 = s^+.
QP braid_local(bool with_eps) {
    QP qp;
    auto& q = qp.quiver;
    q.add_vertex(1, true);
    q.add_vertex(2, true);
    q.add_vertex(3);
    q.add_vertex(4);
    q.add_vertex(5);
    q.add_arrow("d1", 1, 2, true);
    q.add_arrow("g1", 3, 1);
    q.add_arrow("g2", 4, 3);
    q.add_arrow("g3", 2, 3);
    q.add_arrow("g4", 3, 5);
    q.add_arrow("g5", 5, 2);
    qp.potential.add({"g5", "g4", "g3"}, 1);
    qp.potential.add({"g1", "g3", "d1"}, 1);
    if (with_eps) {
        // A longer cycle through g1 g2, so that premutation keeps it of length 3.
        q.add_vertex(6);
        q.add_arrow("e1", 1, 6);
        q.add_arrow("e2", 6, 4);
        qp.potential.add({"g1", "g2", "e2", "e1"}, 1);
    }
    return qp;
}

std::string comp(const std::string& b, const std::string& a) { return "[" + b + "∘" + a + "]"; }

std::string code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const lcl::Error& e) {
        return e.code();
    }
    return "";
}

} // namespace

TEST_CASE("canonical rotation") {
    CHECK(lcl::canonical_rotation({"c", "a", "b"}) == Path{"a", "b", "c"});
    lcl::Potential w;
    w.add({"b", "c", "a"}, 2);
    w.add({"a", "b", "c"}, -2);
    CHECK(w.empty());
}

TEST_CASE("cyclic derivative") {
    QP qp;
    qp.quiver.add_vertex(1);
    qp.quiver.add_vertex(2);
    qp.quiver.add_vertex(3);
    qp.quiver.add_arrow("a", 2, 1);
    qp.quiver.add_arrow("b", 3, 2);
    qp.quiver.add_arrow("c", 1, 3);
    qp.quiver.add_arrow("z", 1, 2);
    qp.potential.add({"a", "b", "c"}, 1);
    CHECK(lcl::cyclic_derivative(qp, "a") == lcl::PathSum{{{"b", "c"}, 1}});
    CHECK(lcl::cyclic_derivative(qp, "z").empty());
    CHECK(code_of([&] { lcl::cyclic_derivative(qp, "q"); }) == "UnknownArrow");

    // Two occurrences of a; only closedness of the word matters for the derivative.
    QP loop;
    loop.quiver.add_vertex(1);
    loop.quiver.add_arrow("a", 1, 1);
    loop.quiver.add_arrow("b", 1, 1);
    loop.potential.add({"a", "b", "a"}, 1);
    auto d = lcl::cyclic_derivative(loop, "a");
    // aba ~ aab: the derivative is ab + ba.
    CHECK(d == lcl::PathSum{{{"a", "b"}, 1}, {{"b", "a"}, 1}});
}

TEST_CASE("Euler identity for the cyclic derivative") {
    QP qp = braid_local(true);
    for (const auto& [term, c] : qp.potential.terms()) {
        QP single = qp;
        single.potential = {};
        single.potential.add(term, c);
        lcl::Potential acc;
        for (const auto& a : qp.quiver.arrows())
            for (const auto& [p, k] : lcl::cyclic_derivative(single, a.label)) {
                Path full{a.label};
                full.insert(full.end(), p.begin(), p.end());
                acc.add(full, k);
            }
        CHECK(acc.coeff(term) == static_cast<std::int64_t>(term.size()) * c);
        CHECK(acc.terms().size() == 1);
    }
}

TEST_CASE("premutate with zero potential on 1->2->3") {
    QP qp;
    for (int i = 1; i <= 3; ++i) qp.quiver.add_vertex(i);
    qp.quiver.add_arrow("a", 1, 2);
    qp.quiver.add_arrow("b", 2, 3);
    QP p = lcl::premutate(qp, 2);
    REQUIRE(p.potential.terms().size() == 1);
    CHECK(p.potential.coeff({comp("b", "a"), "a*", "b*"}) == 1);
    CHECK(p.quiver.count_arrows(1, 3) == 1);
}

TEST_CASE("premutate of a 3-cycle") {
    QP qp;
    for (int i = 1; i <= 3; ++i) qp.quiver.add_vertex(i);
    qp.quiver.add_arrow("a", 1, 2);
    qp.quiver.add_arrow("b", 2, 3);
    qp.quiver.add_arrow("c", 3, 1);
    qp.potential.add({"c", "b", "a"}, 1);
    QP p = lcl::premutate(qp, 2);
    CHECK(p.potential.terms().size() == 2);
    CHECK(p.potential.coeff({"c", comp("b", "a")}) == 1);
    CHECK(p.potential.coeff({comp("b", "a"), "a*", "b*"}) == 1);
    // Reduction removes c and [b a], leaving 2->1, 3->2.
    QP r = lcl::reduce(p);
    CHECK(r.potential.empty());
    CHECK(r.quiver.arrows().size() == 2);
    CHECK(lcl::find_iso(r.quiver, lcl::mutate_fz(qp.quiver, 2)).has_value());
}

TEST_CASE("premutate and reduce on the braid-move local configuration") {
    QP qp = braid_local(true);
    QP p = lcl::premutate(qp, 3);
    const std::string g43 = comp("g4", "g3"), g13 = comp("g1", "g3"), g12 = comp("g1", "g2"),
                      g42 = comp("g4", "g2");
    CHECK(p.potential.coeff({"g5", g43}) == 1);
    CHECK(p.potential.coeff({g13, "d1"}) == 1);
    CHECK(p.potential.coeff({g12, "e2", "e1"}) == 1);
    CHECK(p.potential.coeff({g12, "g2*", "g1*"}) == 1);
    CHECK(p.potential.coeff({g13, "g3*", "g1*"}) == 1);
    CHECK(p.potential.coeff({g42, "g2*", "g4*"}) == 1);
    CHECK(p.potential.coeff({g43, "g3*", "g4*"}) == 1);
    CHECK(p.potential.terms().size() == 7);

    QP r = lcl::reduce(p);
    CHECK_FALSE(r.quiver.has_label("g5"));
    CHECK_FALSE(r.quiver.has_label(g43));
    CHECK_FALSE(r.quiver.has_label("d1"));
    REQUIRE(r.quiver.has_label(g13));
    CHECK(r.quiver.find_arrow(g13)->frozen);
    CHECK(r.potential.terms().size() == 4);
    CHECK(r.potential.coeff({g12, "g2*", "g1*"}) == 1);
    CHECK(r.potential.coeff({g13, "g3*", "g1*"}) == 1);
    CHECK(r.potential.coeff({g42, "g2*", "g4*"}) == 1);
    CHECK(r.potential.coeff({g12, "e2", "e1"}) == 1);
    CHECK(lcl::find_iso(r.quiver, lcl::mutate_fz(qp.quiver, 3)).has_value());
    CHECK_NOTHROW(r.quiver.validate());
}

TEST_CASE("reduce edge cases") {
    QP two;
    two.quiver.add_vertex(1);
    two.quiver.add_vertex(2);
    two.quiver.add_arrow("a", 1, 2);
    two.quiver.add_arrow("b", 2, 1);
    two.potential.add({"a", "b"}, 1);
    QP r = lcl::reduce(two);
    CHECK(r.quiver.arrows().empty());
    CHECK(r.potential.empty());

    QP fixed = braid_local(false);
    QP same = lcl::reduce(fixed);
    CHECK(same.potential == fixed.potential);
    CHECK(same.quiver.arrows().size() == fixed.quiver.arrows().size());

    two.potential = {};
    two.potential.add({"a", "b"}, 2);
    CHECK(code_of([&] { lcl::reduce(two); }) == "NonUnitTwoCycleCoefficient");

    QP red;
    red.quiver.add_vertex(1, true);
    red.quiver.add_vertex(2, true);
    red.quiver.add_arrow("a", 1, 2, true);
    red.quiver.add_arrow("b", 2, 1, true);
    red.potential.add({"a", "b"}, 1);
    CHECK(code_of([&] { lcl::reduce(red); }) == "RedundantPotentialTerm");
}

TEST_CASE("reduce substitutes through longer terms") {
    // x y + x w u + y t v + w u t v: y -> y - w u, then x -> x - t v, and all terms cancel.
    QP qp;
    for (int i = 1; i <= 3; ++i) qp.quiver.add_vertex(i);
    qp.quiver.add_arrow("x", 1, 2);
    qp.quiver.add_arrow("y", 2, 1);
    qp.quiver.add_arrow("u", 2, 3);
    qp.quiver.add_arrow("w", 3, 1);
    qp.quiver.add_arrow("v", 1, 3);
    qp.quiver.add_arrow("t", 3, 2);
    qp.potential.add({"x", "y"}, 1);
    qp.potential.add({"x", "w", "u"}, 1);
    qp.potential.add({"y", "t", "v"}, 1);
    qp.potential.add({"w", "u", "t", "v"}, 1);
    QP r = lcl::reduce(qp);
    CHECK_FALSE(r.quiver.has_label("x"));
    CHECK_FALSE(r.quiver.has_label("y"));
    CHECK(r.potential.empty());

    qp.potential.add({"w", "u", "t", "v"}, 1);
    QP r2 = lcl::reduce(qp);
    CHECK(r2.potential.coeff({"w", "u", "t", "v"}) == 1);
    QP rr = lcl::reduce(r2);
    CHECK(rr.potential == r2.potential);
}

TEST_CASE("mutate_qp is an involution on the quiver level") {
    QP qp = braid_local(true);
    QP once = lcl::mutate_qp(qp, 3);
    QP twice = lcl::mutate_qp(once, 3);
    CHECK(lcl::find_iso(twice.quiver, qp.quiver).has_value());
}

TEST_CASE("match_potentials handles relabelling and sign flips") {
    QP a = braid_local(true);
    QP b = a;
    b.potential = {};
    b.potential.add({"g5", "g4", "g3"}, -1);
    b.potential.add({"g1", "g3", "d1"}, 1);
    b.potential.add({"g1", "g2", "e2", "e1"}, 1);
    lcl::VertexMap id{{1, 1}, {2, 2}, {3, 3}, {4, 4}, {5, 5}, {6, 6}};
    CHECK(lcl::match_potentials(a, b, id).has_value()); // flip g4
    b.potential.add({"g1", "g2", "e2", "e1"}, 1);
    CHECK_FALSE(lcl::match_potentials(a, b, id).has_value());
}

TEST_CASE("potential json round trip") {
    QP qp = braid_local(true);
    CHECK(lcl::potential_from_json(lcl::to_json(qp.potential)) == qp.potential);
}
