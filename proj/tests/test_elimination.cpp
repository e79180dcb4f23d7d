// Kernel method: catalytic systems, series branch points, and the
// eliminants compared against the published equations.

#include <doctest.h>

#include "trideg/equations.hpp"
#include "trideg/trisystem.hpp"

using namespace trideg;

namespace {
constexpr int kOrder = 34;
}

TEST_CASE("catalytic polynomial vanishes along the solved series") {
    for (FamilyTag tag : {FamilyTag::S, FamilyTag::T, FamilyTag::U}) {
        CAPTURE(family_name(tag));
        TriSystem sys = TriSystem::make(tag);
        CHECK(sys.p1 == sys.p.derivative(0));
        CHECK(sys.p3 == sys.p.derivative(2));
    }
}

TEST_CASE("kernel root exists and starts at z") {
    // The branch point X(z) = z + O(z^4): a root face of degree one more
    // costs one edge plus a multiple of three.
    for (FamilyTag tag : {FamilyTag::S, FamilyTag::T, FamilyTag::U}) {
        CAPTURE(family_name(tag));
        TriSystem sys = TriSystem::make(tag);
        SolvedFamily f = solve_family(tag, kOrder);
        USeries xs = kernel_root(sys, f);  // verifies P, P1, P3 internally
        CHECK(xs.coeff(0) == 0);
        CHECK(xs.coeff(1) == 1);
        CHECK(xs.coeff(2) == 0);
        CHECK(xs.coeff(3) == 0);
    }
}

TEST_CASE("kernel roots of the three systems are distinct") {
    SolvedFamily s = solve_S(kOrder), t = solve_T(kOrder), u = solve_U(kOrder);
    USeries xs = kernel_root(TriSystem::make(FamilyTag::S), s);
    USeries xt = kernel_root(TriSystem::make(FamilyTag::T), t);
    USeries xu = kernel_root(TriSystem::make(FamilyTag::U), u);
    CHECK(xs.coeff(4) == 2);
    CHECK(xt.coeff(4) == 1);
    CHECK(xu.coeff(4) == 0);
}

TEST_CASE("S eliminant reproduces the published cubic") {
    SolvedFamily s = solve_S(kOrder);
    BiPoly elim = eliminate_quadratic(TriSystem::make(FamilyTag::S), s.w0);
    CHECK(elim.equivalent(eq_S0()));
    CHECK(digon_substitute(elim).equivalent(eq_F()));
}

TEST_CASE("T eliminant reproduces the published cubic") {
    SolvedFamily t = solve_T(kOrder);
    BiPoly elim = eliminate_quadratic(TriSystem::make(FamilyTag::T), t.w0);
    CHECK(elim.equivalent(eq_T0()));
    CHECK(digon_substitute(elim).equivalent(eq_G()));
}

TEST_CASE("U eliminant maps to the published equation for H") {
    SolvedFamily u = solve_U(kOrder);
    BiPoly elim = eliminate_quadratic(TriSystem::make(FamilyTag::U), u.w0);
    CHECK(digon_substitute(elim).equivalent(eq_H()));
    // The eliminant itself annihilates the digon series.
    CHECK(verify_algebraic(elim, u.w0).ok);
}

TEST_CASE("elimination rejects a series the system does not annihilate") {
    SolvedFamily s = solve_S(kOrder);
    USeries wrong = s.w0;
    wrong.coeff(10) += 1;
    CHECK_THROWS_AS(
        eliminate_quadratic(TriSystem::make(FamilyTag::S), wrong),
        NoAnnihilatingFactor);
}
