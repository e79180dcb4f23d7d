#include "trideg/lagrange.hpp"

#include <cassert>

#include "trideg/errors.hpp"

namespace trideg {

namespace {

USeries us_one(int order) {
    USeries r(order);
    if (order > 0) r.coeff(0) = 1;
    return r;
}

USeries us_poly_of(const USeries& y, std::initializer_list<long> coeffs) {
    // Evaluate a small integer polynomial at the series y (Horner).
    USeries acc(y.order());
    for (auto it = std::rbegin(coeffs); it != std::rend(coeffs); ++it) {
        acc = acc * y;
        if (acc.order() > 0) acc.coeff(0) += *it;
    }
    return acc;
}

USeries half_exact(const USeries& a) {
    USeries r(a.order());
    for (int n = 0; n < a.order(); ++n) {
        if (a.coeff(n) % 2 != 0) throw NonIntegral(n);
        r.coeff(n) = a.coeff(n) / 2;
    }
    return r;
}

}  // namespace

USeries solve_tree_series(TreeTag tag, int order) {
    assert(order >= 1);
    // Fixed-point iteration; the right-hand side carries a factor t, so
    // each pass settles one more coefficient.
    USeries y(order);
    for (int pass = 0; pass + 1 < order; ++pass) {
        y = tag == TreeTag::X
                ? Int(2) * us_poly_of(y, {1, 3, 3, 1}).shifted_t(1)
                : us_poly_of(y, {1, 5, 6, 2}).shifted_t(1);
    }
    return y;
}

USeries parametrized_series(CensusTag tag, int order) {
    switch (tag) {
        case CensusTag::F: {
            USeries x = solve_tree_series(TreeTag::X, order);
            return half_exact(x * (us_one(order) - x));
        }
        case CensusTag::G: {
            USeries y = solve_tree_series(TreeTag::Y, order);
            return (y * us_poly_of(y, {1, 1}) * us_poly_of(y, {1, -1, -1}))
                .shifted_t(1);
        }
        case CensusTag::Gstar: {
            USeries y = solve_tree_series(TreeTag::Y, order);
            return (us_poly_of(y, {1, 1}) * us_poly_of(y, {1, -1, -1}) *
                    us_poly_of(y, {1, 3, 6, 2}))
                .shifted_t(2);
        }
        default:
            assert(false && "parametrized_series: F, G, Gstar only");
            return USeries();
    }
}

bool check_parametrization(CensusTag tag, const USeries& expected,
                           bool hard_fail) {
    USeries param = parametrized_series(tag, expected.order());
    for (int n = 0; n < expected.order(); ++n) {
        if (param.coeff(n) != expected.coeff(n)) {
            if (hard_fail) throw Mismatch(n);
            return false;
        }
    }
    return true;
}

}  // namespace trideg
