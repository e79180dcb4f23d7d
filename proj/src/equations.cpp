#include "trideg/equations.hpp"

#include <cassert>

namespace trideg {

BiPoly eq_F() {
    return BiPoly({UPoly{0, -1, 16},        // t(16t - 1)
                   UPoly{1, -20, 48},       // 1 - 20t + 48t^2
                   UPoly{0, 8, 48},         // 8t(6t + 1)
                   UPoly{0, 0, 16}});       // 16t^2
}

BiPoly eq_G() {
    return BiPoly({UPoly{0, 0, -1, 11, 1},          // t^2(t^2 + 11t - 1)
                   UPoly{1, -16, 50, 20, 1},
                   UPoly{0, 8, 64, 8},              // 8t(t^2 + 8t + 1)
                   UPoly{0, 0, 16}});
}

BiPoly eq_H() {
    UPoly t{0, 1};
    UPoly tm1{-1, 1};
    UPoly c3 = Int(16) * (t * t) * (tm1 * tm1 * tm1 * tm1);
    UPoly c2 = Int(8) * t * (tm1 * tm1) * UPoly{1, 8, -13, 4, 1};
    UPoly c1{1, -16, 86, -192, 207, -84, -14, 12, 1};
    UPoly c0 = (t * t * t * t) * tm1 * UPoly{1, -8, 5, 1};
    return BiPoly({c0, c1, c2, c3});
}

BiPoly eq_S0() {
    // 16z^4 y^3 + 8z^2 y^2 + (1 - 36z^3) y - z + 27z^4 = 0.
    return BiPoly({UPoly{0, -1, 0, 0, 27},
                   UPoly{1, 0, 0, -36},
                   UPoly{0, 0, 8},
                   UPoly{0, 0, 0, 0, 16}});
}

BiPoly eq_T0() {
    // 16z^4 y^3 + 8z^2(1+z^3)^2 y^2 + (1 - 32z^3 - 30z^6 + 4z^9 + z^12) y
    // - z + 24z^4 - 3z^7 - z^10 = 0.
    UPoly z2{0, 0, 1};
    UPoly onepz3{1, 0, 0, 1};
    return BiPoly({UPoly{0, -1, 0, 0, 24, 0, 0, -3, 0, 0, -1},
                   UPoly{1, 0, 0, -32, 0, 0, -30, 0, 0, 4, 0, 0, 1},
                   Int(8) * z2 * onepz3 * onepz3,
                   UPoly{0, 0, 0, 0, 16}});
}

MPoly catalytic_polynomial(FamilyTag tag) {
    const MPoly W = MPoly::variable(0);
    const MPoly W0 = MPoly::variable(1);
    const MPoly X = MPoly::variable(2);
    const MPoly Z = MPoly::variable(3);
    const MPoly Z3 = Z * Z * Z;
    switch (tag) {
        case FamilyTag::S:
            // x * (z + xzW^2 + (z/x)(W - W0) - W)
            return X * Z + X * X * Z * W * W + Z * W - Z * W0 - X * W;
        case FamilyTag::T:
            // as S, with the extra loop-deletion term -z^3 W
            return X * Z + X * X * Z * W * W + Z * W - Z * W0 - X * W -
                   X * Z3 * W;
        case FamilyTag::U: {
            // x * (z + xz(1-z^3)W^2 + z(1-z^3)(W - W0)/x - z^3(1-z^3)W - W)
            MPoly c = MPoly::constant(1) - Z3;  // 1 - z^3
            return X * Z + X * X * Z * c * W * W + Z * c * W - Z * c * W0 -
                   X * Z3 * c * W - X * W;
        }
        default:
            assert(false && "catalytic_polynomial: S, T, U only");
            return MPoly();
    }
}

}  // namespace trideg
