#ifndef TRIDEG_EQUATIONS_HPP
#define TRIDEG_EQUATIONS_HPP

#include "trideg/bipoly.hpp"
#include "trideg/mpoly.hpp"
#include "trideg/solver.hpp"

namespace trideg {

/// Published algebraic equations in (y, t), canonical form.
/// 16t^2 y^3 + 8t(6t+1) y^2 + (48t^2 - 20t + 1) y + t(16t - 1) = 0.
BiPoly eq_F();
/// 16t^2 y^3 + 8t(t^2+8t+1) y^2 + (t^4+20t^3+50t^2-16t+1) y
/// + t^2(t^2+11t-1) = 0.
BiPoly eq_G();
/// 16t^2(t-1)^4 y^3 + 8t(t-1)^2(t^4+4t^3-13t^2+8t+1) y^2
/// + (t^8+12t^7-14t^6-84t^5+207t^4-192t^3+86t^2-16t+1) y
/// + t^4(t-1)(t^3+5t^2-8t+1) = 0.
BiPoly eq_H();

/// Cubic satisfied by S(0, z), as a BiPoly in (y, z):
/// y = z - 27z^4 + 36z^3 y - 8z^2 y^2 - 16z^4 y^3.
BiPoly eq_S0();
/// Cubic satisfied by T(0, z):
/// y = z - 24z^4 + 3z^7 + z^10 + (32z^3 + 30z^6 - 4z^9 - z^12) y
///     - 8z^2 (1 + z^3)^2 y^2 - 16z^4 y^3.
BiPoly eq_T0();

/// The quadratic catalytic equation of a family with one catalytic unknown,
/// cleared of denominators: P(W, W0, X, Z) = 0 along W = W(x,z), W0 = W(0,z).
/// Variable slots follow the MPoly convention 0 = W, 1 = W0, 2 = X, 3 = Z.
/// Defined for S, T, U (the V equation needs two catalytic unknowns and is
/// handled separately).
MPoly catalytic_polynomial(FamilyTag tag);

}  // namespace trideg

#endif
