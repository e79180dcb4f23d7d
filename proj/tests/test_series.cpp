// Ring axioms and truncation coherence for the series types.

#include <doctest.h>

#include <random>

#include "trideg/biseries.hpp"
#include "trideg/useries.hpp"

using namespace trideg;

namespace {

USeries random_useries(std::mt19937& rng, int order, bool unit = false) {
    std::uniform_int_distribution<int> d(-9, 9);
    USeries r(order);
    for (int n = 0; n < order; ++n) r.coeff(n) = d(rng);
    if (unit && order > 0) r.coeff(0) = d(rng) % 2 ? 1 : -1;
    return r;
}

BiSeries random_biseries(std::mt19937& rng, int order) {
    std::uniform_int_distribution<int> d(-5, 5);
    BiSeries r(order);
    for (int n = 0; n < order; ++n) {
        PolyX p;
        for (int k = 0; k <= n % 4; ++k)
            p += PolyX(Int(d(rng))).shifted(k);
        r.coeff(n) = p;
    }
    return r;
}

}  // namespace

TEST_CASE("USeries ring axioms on random inputs") {
    std::mt19937 rng(42);
    for (int rep = 0; rep < 20; ++rep) {
        USeries a = random_useries(rng, 16), b = random_useries(rng, 16),
                c = random_useries(rng, 16);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == USeries(16));
    }
}

TEST_CASE("USeries truncation commutes with arithmetic") {
    std::mt19937 rng(7);
    USeries a = random_useries(rng, 24), b = random_useries(rng, 24);
    CHECK((a * b).truncated(10) == a.truncated(10) * b.truncated(10));
    CHECK((a + b).truncated(10) == a.truncated(10) + b.truncated(10));
    // Mixed-order products truncate to the smaller order.
    CHECK((a.truncated(12) * b).order() == 12);
}

TEST_CASE("USeries inversion of units is exact") {
    std::mt19937 rng(3);
    for (int rep = 0; rep < 10; ++rep) {
        USeries a = random_useries(rng, 20, /*unit=*/true);
        USeries prod = a * a.inverse();
        CHECK(prod.coeff(0) == 1);
        for (int n = 1; n < 20; ++n) CHECK(prod.coeff(n) == 0);
    }
}

TEST_CASE("USeries inversion rejects non-units") {
    USeries a = useries_from({2, 1, 1}, 6);
    CHECK_THROWS_AS(a.inverse(), NotAUnit);
    USeries b = useries_from({0, 1}, 6);
    CHECK_THROWS_AS(b.inverse(), NotAUnit);
}

TEST_CASE("USeries shift") {
    USeries a = useries_from({1, 2, 3}, 5);
    USeries s = a.shifted_t(2);
    CHECK(s.coeff(0) == 0);
    CHECK(s.coeff(2) == 1);
    CHECK(s.coeff(4) == 3);
}

TEST_CASE("cube lift and extract are inverse") {
    std::mt19937 rng(11);
    USeries f = random_useries(rng, 8);
    USeries w0 = cube_lift(f, 3 * 8 + 1);
    USeries back = cube_extract(w0);
    for (int n = 0; n < back.order(); ++n) CHECK(back.coeff(n) == f.coeff(n));
}

TEST_CASE("cube extract rejects support off 1 mod 3") {
    USeries w0 = useries_from({0, 1, 1}, 6);  // z^2 term is illegal
    CHECK_THROWS_AS(cube_extract(w0), BadSupport);
    USeries w1 = useries_from({1}, 3);  // constant term is illegal
    CHECK_THROWS_AS(cube_extract(w1), BadSupport);
}

TEST_CASE("BiSeries ring identities and unit inversion") {
    std::mt19937 rng(5);
    for (int rep = 0; rep < 8; ++rep) {
        BiSeries a = random_biseries(rng, 10), b = random_biseries(rng, 10);
        CHECK(bs_mul(a, b) == bs_mul(b, a));
        CHECK(bs_mul(a, b + b) == Int(2) * bs_mul(a, b));
        BiSeries u = BiSeries::one(10) + a.shifted(0, 1);
        BiSeries prod = bs_mul(u, bs_inv_unit(u));
        CHECK(prod == BiSeries::one(10));
    }
}

TEST_CASE("BiSeries x-division is exact or throws") {
    BiSeries a(4);
    a.coeff(1) = PolyX(Int(3)).shifted(2);  // 3 x^2 z
    BiSeries q = bs_div_x(a, 2);
    CHECK(q.coeff(1).coeff(0) == 3);
    a.coeff(2) = PolyX(Int(1)).shifted(1);  // x z^2 is not divisible by x^2
    CHECK_THROWS_AS(bs_div_x(a, 2), NotDivisible);
}

TEST_CASE("BiSeries x-degree stays bounded under products") {
    // Degree in x of a product is the sum of the degrees.
    BiSeries a(4), b(4);
    a.coeff(1) = PolyX(Int(1)).shifted(3);
    b.coeff(2) = PolyX(Int(1)).shifted(2);
    BiSeries p = bs_mul(a, b);
    CHECK(p.coeff(3).degree() == 5);
}
