// Sturm sequences and certified isolation of dominant singularities.

#include <doctest.h>

#include <cmath>

#include "trideg/appendix.hpp"
#include "trideg/equations.hpp"
#include "trideg/sturm.hpp"

using namespace trideg;

namespace {

const char* data_path() {
    const char* p = std::getenv("TRIDEG_DATA");
    return p ? p : "data/appendix_polynomials.txt";
}

const Rat kTight(Int(1), Int("1000000000000000"));  // 10^-15

}  // namespace

TEST_CASE("Sturm counts on a polynomial with known roots") {
    UPoly p = UPoly{-1, 1} * UPoly{-2, 1} * UPoly{-3, 1};  // roots 1, 2, 3
    SturmSequence seq(p);
    CHECK(seq.count_roots(Rat(0), Rat(4)) == 3);
    CHECK(seq.count_roots(Rat(0), Rat(1)) == 1);   // (0, 1] contains 1
    CHECK(seq.count_roots(Rat(1), Rat(2)) == 1);
    CHECK(seq.count_roots(Rat(3, 2), Rat(7, 4)) == 0);
}

TEST_CASE("Sturm counting handles repeated roots via squarefree part") {
    UPoly p = UPoly{-1, 1} * UPoly{-1, 1} * UPoly{-2, 1};  // double root at 1
    SturmSequence seq(p);
    CHECK(seq.count_roots(Rat(0), Rat(3)) == 2);  // distinct roots only
}

TEST_CASE("smallest positive root of t^2 - 2") {
    RootInterval iv = smallest_positive_root(UPoly{-2, 0, 1}, kTight);
    CHECK(std::abs(iv.midpoint() - std::sqrt(2.0)) < 1e-12);
    CHECK(iv.lo < iv.hi);
}

TEST_CASE("negative roots are ignored; none positive throws") {
    // Roots -1 and 2: smallest positive is 2.
    RootInterval iv = smallest_positive_root(UPoly{-2, -1, 1}, kTight);
    CHECK(std::abs(iv.midpoint() - 2.0) < 1e-12);
    CHECK_THROWS_AS(smallest_positive_root(UPoly{1, 0, 1}, kTight),
                    NoPositiveRoot);
    CHECK_THROWS_AS(smallest_positive_root(UPoly{1, 1}, kTight),
                    NoPositiveRoot);
}

TEST_CASE("rho_F = 2/27 exactly") {
    UPoly rf = singular_candidates(eq_F());
    CHECK(rf.eval(Rat(2, 27)) == 0);
    RootInterval iv = smallest_positive_root(rf, kTight);
    CHECK(iv.lo < Rat(2, 27));
    CHECK(Rat(2, 27) <= iv.hi);
}

TEST_CASE("rho_G = (3 sqrt 3 - 5) / 2 to 1e-12") {
    RootInterval iv = smallest_positive_root(singular_candidates(eq_G()),
                                             kTight);
    double target = (3.0 * std::sqrt(3.0) - 5.0) / 2.0;
    CHECK(std::abs(iv.midpoint() - target) < 1e-12);
    // Certified: rho_G is a root of 4t^2 + 20t - 2 (i.e. 2t^2 + 10t - 1).
    UPoly min_poly{-1, 10, 2};
    CHECK(min_poly.sign_at(iv.lo) * min_poly.sign_at(iv.hi) <= 0);
}

TEST_CASE("rho_H matches the appendix minimal polynomial") {
    AppendixData app = AppendixData::load(data_path());
    RootInterval computed = smallest_positive_root(
        singular_candidates(eq_H()), kTight);
    RootInterval published = smallest_positive_root(app.r_h(), kTight);
    CHECK(std::abs(computed.midpoint() - published.midpoint()) < 1e-12);
    CHECK(std::abs(1.0 / computed.midpoint() - 7.03) < 0.005);
}

TEST_CASE("rho_K from the appendix equation") {
    AppendixData app = AppendixData::load(data_path());
    RootInterval iv = smallest_positive_root(app.r_k(), kTight);
    CHECK(std::abs(1.0 / iv.midpoint() - 4.06) < 0.005);
}
