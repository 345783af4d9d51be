#include <doctest.h>

#include "helpers.hpp"

using namespace twf;
using twf::testing::el;

TEST_CASE("enumeration sizes and order") {
    CHECK(enumerate(GroupSpec::fermionic(1)).size() == 4);
    CHECK(enumerate(GroupSpec::finite_weyl(3, 1)).size() == 9);
    CHECK(enumerate(GroupSpec::fermionic(2)).size() == 16);
    GroupSpec f = GroupSpec::fermionic(1);
    // Canonical index order: coordinate 0 fastest, i.e. 00, 10, 01, 11.
    auto elems = enumerate(f);
    CHECK(elems[0].c == std::vector<int>{0, 0});
    CHECK(elems[1].c == std::vector<int>{1, 0});
    CHECK(elems[2].c == std::vector<int>{0, 1});
    CHECK(elems[3].c == std::vector<int>{1, 1});
    for (std::int64_t i = 0; i < 4; ++i) CHECK(element_index(f, elems[i]) == i);
}

TEST_CASE("arithmetic mod d") {
    GroupSpec f = GroupSpec::fermionic(1);
    CHECK(add(f, el(f, {1, 1}), el(f, {1, 0})) == el(f, {0, 1}));
    GroupSpec t = GroupSpec::finite_weyl(3, 1);
    CHECK(neg(t, el(t, {1, 2})) == el(t, {2, 1}));
    for (const auto& x : enumerate(t)) {
        CHECK(add(t, x, zero(t)) == x);
        CHECK(add(t, x, neg(t, x)) == zero(t));
    }
}

TEST_CASE("group axioms exhaustive at small order") {
    for (GroupSpec spec : {GroupSpec::finite_weyl(4, 1), GroupSpec::fermionic(2)}) {
        auto elems = enumerate(spec);
        for (const auto& x : elems)
            for (const auto& y : elems) {
                GroupElement s = add(spec, x, y);
                CHECK(element_index(spec, s) >= 0);     // closure
                CHECK(add(spec, y, x) == s);            // commutativity
            }
    }
}

TEST_CASE("characters") {
    GroupSpec q = GroupSpec::fermionic(1);
    CHECK(character(q, el(q, {0, 1}), el(q, {0, 1})).real() == doctest::Approx(-1.0));
    GroupSpec t = GroupSpec::finite_weyl(3, 1);
    std::complex<double> w2 = unit_phase(2, 3);
    CHECK(std::abs(character(t, el(t, {1, 0}), el(t, {2, 0})) - w2) < 1e-14);
    for (const auto& x : enumerate(t)) CHECK(character(t, zero(t), x) == 1.0);
}

TEST_CASE("character multiplicativity and orthogonality") {
    GroupSpec t = GroupSpec::finite_weyl(5, 1);
    auto elems = enumerate(t);
    GroupElement p = el(t, {2, 3});
    for (const auto& x : elems)
        for (const auto& y : elems)
            CHECK(std::abs(character(t, p, add(t, x, y)) -
                           character(t, p, x) * character(t, p, y)) < 1e-12);
    for (const auto& q : elems) {
        std::complex<double> sum = 0;
        for (const auto& x : elems) sum += character(t, q, x);
        double expect = (q == zero(t)) ? static_cast<double>(t.order()) : 0.0;
        CHECK(std::abs(sum - expect) < 1e-10);
    }
}

TEST_CASE("haar weights") {
    CHECK(GroupSpec::fermionic(2).point_weight() == doctest::Approx(0.25));
    CHECK(GroupSpec::finite_weyl(3, 1).point_weight() == doctest::Approx(1.0 / 3.0));
    GroupSpec t = GroupSpec::finite_weyl(3, 2);
    CHECK(t.order() * t.point_weight() == doctest::Approx(9.0));  // mu(G) = d^n
}

TEST_CASE("spec validation") {
    CHECK_THROWS(GroupSpec::finite_weyl(1, 1));
    CHECK_THROWS(GroupSpec::finite_weyl(17, 1));
    CHECK_THROWS(GroupSpec::fermionic(0));
    // Sign tables must be symmetric with -1 diagonal.
    CHECK_THROWS(SignTable({{1, 1}, {1, -1}}));
    CHECK_THROWS(SignTable({{-1, 1}, {-1, -1}}));
    CHECK_NOTHROW(SignTable::hardcore_boson(2));
    CHECK_NOTHROW(SignTable::fermionic(3));
}

TEST_CASE("enumeration overflow guard") {
    CHECK_THROWS(enumerate(GroupSpec::finite_weyl(16, 4)));
}
