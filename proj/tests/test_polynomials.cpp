// Exact polynomial algebra: UPoly, MPoly resultants, BiPoly discriminants
// and gcds, algebraic series solving, and the digon substitution.

#include <doctest.h>

#include "trideg/bipoly.hpp"
#include "trideg/equations.hpp"
#include "trideg/mpoly.hpp"
#include "trideg/upoly.hpp"

using namespace trideg;

TEST_CASE("UPoly arithmetic, content, exact division") {
    UPoly a{6, 10, 4};  // 2(t+1)(2t+3) -> content 2
    CHECK(a.content() == 2);
    UPoly n = a.normalized();
    CHECK(n == UPoly{3, 5, 2});
    UPoly b{1, 1};
    CHECK(b.divides(a));
    CHECK(a.div_exact(b) * b == a);
    CHECK(a.derivative() == UPoly{10, 8});
    CHECK(a.eval(Rat(1, 2)) == Rat(12));
    CHECK(a.sign_at(Rat(-5, 4)) < 0);  // between the roots -3/2 and -1
    CHECK(a.sign_at(Rat(-3, 2)) == 0);
}

TEST_CASE("UPoly gcd via primitive remainder sequence") {
    UPoly p = UPoly{-1, 1} * UPoly{-2, 1} * UPoly{3, 7};
    UPoly q = UPoly{-1, 1} * UPoly{5, 1} * UPoly{1, 2};
    CHECK(gcd(p, q) == UPoly{-1, 1});
    CHECK(gcd(p, UPoly{}) == p.normalized());
    // Coprime inputs give a constant gcd.
    CHECK(gcd(UPoly{1, 1}, UPoly{2, 1}).degree() == 0);
}

TEST_CASE("MPoly resultant agrees with hand values") {
    // Res_x(x^2 - 2, x - 3) = 3^2 - 2 = 7.
    MPoly x = MPoly::variable(0);
    MPoly a = x * x - MPoly::constant(2);
    MPoly b = x - MPoly::constant(3);
    CHECK(resultant(a, b, 0) == MPoly::constant(7));
    // Res_x(x^2 + t, x + t) = t^2 + t  (substitute x = -t).
    MPoly t = MPoly::variable(1);
    MPoly r = resultant(x * x + t, x + t, 0);
    CHECK(r == t * t + t);
    // Resultant of polynomials with a common factor is zero.
    CHECK(resultant(a * b, b, 0).is_zero());
}

TEST_CASE("BiPoly discriminant") {
    // disc_y(y^2 - t) = 4t.
    BiPoly q({UPoly{0, -1}, UPoly{}, UPoly{1}});
    CHECK(discriminant_y(q) == UPoly{0, 4});
    // disc_y(y^2 + y + t) = 1 - 4t.
    BiPoly q2({UPoly{0, 1}, UPoly{1}, UPoly{1}});
    CHECK(discriminant_y(q2) == UPoly{1, -4});
}

TEST_CASE("BiPoly gcd_y") {
    BiPoly common({UPoly{0, -1}, UPoly{1}});  // y - t
    BiPoly a = common * BiPoly({UPoly{1}, UPoly{1}});
    BiPoly b = common * BiPoly({UPoly{2}, UPoly{0, 5}});
    CHECK(gcd_y(a, b).equivalent(common));
    // Coprime polynomials have y-degree-0 gcd.
    CHECK(gcd_y(BiPoly({UPoly{1}, UPoly{1}}), BiPoly({UPoly{2}, UPoly{1}}))
              .degree_y() == 0);
}

TEST_CASE("us_solve_algebraic finds the series branch") {
    // y = t + y^2 -> Catalan-like series t + t^2 + 2t^3 + 5t^4 + ...
    BiPoly q({UPoly{0, 1}, UPoly{-1}, UPoly{1}});
    USeries y = us_solve_algebraic(q, 8);
    CHECK(y.coeff(1) == 1);
    CHECK(y.coeff(2) == 1);
    CHECK(y.coeff(3) == 2);
    CHECK(y.coeff(4) == 5);
    CHECK(y.coeff(5) == 14);
    CHECK(verify_algebraic(q, y).ok);
    require_algebraic(q, y);  // must not throw
}

TEST_CASE("verify_algebraic reports the first failing order") {
    BiPoly q({UPoly{0, 1}, UPoly{-1}, UPoly{1}});
    USeries y = us_solve_algebraic(q, 8);
    y.coeff(5) += 1;
    ResidualReport rep = verify_algebraic(q, y);
    CHECK_FALSE(rep.ok);
    CHECK(rep.first_bad_order == 5);
    CHECK_THROWS_AS(require_algebraic(q, y), ResidualNonzero);
}

TEST_CASE("us_solve_algebraic rejects equations without a series root") {
    // Constant term q(0, t) = 1 has no root with y(0) = 0.
    BiPoly q({UPoly{1}, UPoly{1}});
    CHECK_THROWS_AS(us_solve_algebraic(q, 8), NoSeriesRoot);
}

TEST_CASE("digon substitution maps the z-cubics to the t-cubics") {
    CHECK(digon_substitute(eq_S0()).equivalent(eq_F()));
    CHECK(digon_substitute(eq_T0()).equivalent(eq_G()));
}

TEST_CASE("digon substitution rejects support off 0 mod 3") {
    // y -> z + z y' turns y - z - z^2 into z y' - z^2; after stripping the
    // common z, the constant term sits on z^1, which is not a power of z^3.
    BiPoly q({UPoly{0, -1, -1}, UPoly{1}});
    CHECK_THROWS_AS(digon_substitute(q), BadSupport);
}

TEST_CASE("singular candidates of the published equations") {
    UPoly rf = singular_candidates(eq_F());
    // R_F(t) = t^5 (27t - 2)(729 t^2 - 108t + 4) up to normalization:
    // 19683 t^8 - 4374 t^7 + 324 t^6 - 8 t^5.
    CHECK(rf == UPoly{0, 0, 0, 0, 0, -8, 324, -4374, 19683});
    CHECK(rf.eval(Rat(2, 27)) == 0);
}

TEST_CASE("BiPoly canonical form and equivalence") {
    BiPoly q = eq_G();
    CHECK(q.equivalent(Int(-6) * q));
    CHECK_FALSE(q.equivalent(eq_F()));
    CHECK((Int(-6) * q).canonical() == q.canonical());
}
