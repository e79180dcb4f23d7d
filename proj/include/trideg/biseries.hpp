#ifndef TRIDEG_BISERIES_HPP
#define TRIDEG_BISERIES_HPP

#include <algorithm>
#include <cassert>
#include <utility>
#include <vector>

#include "trideg/errors.hpp"
#include "trideg/polyx.hpp"
#include "trideg/useries.hpp"

namespace trideg {

/// Power series in z truncated at a given order, whose z-coefficients are
/// integer polynomials in x. Mixed-order arithmetic truncates to the
/// smaller order.
class BiSeries {
  public:
    BiSeries() = default;
    explicit BiSeries(int order) : c_(order) { assert(order >= 0); }

    int order() const { return static_cast<int>(c_.size()); }

    const PolyX& coeff(int n) const {
        assert(n >= 0 && n < order());
        return c_[n];
    }
    PolyX& coeff(int n) {
        assert(n >= 0 && n < order());
        return c_[n];
    }

    bool is_zero() const {
        return std::all_of(c_.begin(), c_.end(),
                           [](const PolyX& p) { return p.is_zero(); });
    }

    /// The pure-z series z itself (the link-map contribution).
    static BiSeries z(int order) {
        BiSeries r(order);
        if (order > 1) r.c_[1] = PolyX(Int(1));
        return r;
    }

    static BiSeries one(int order) {
        BiSeries r(order);
        if (order > 0) r.c_[0] = PolyX(Int(1));
        return r;
    }

    BiSeries truncated(int m) const {
        BiSeries r(std::min(m, order()));
        for (int i = 0; i < r.order(); ++i) r.c_[i] = c_[i];
        return r;
    }

    friend BiSeries operator+(const BiSeries& a, const BiSeries& b) {
        BiSeries r(std::min(a.order(), b.order()));
        for (int i = 0; i < r.order(); ++i) r.c_[i] = a.c_[i] + b.c_[i];
        return r;
    }
    friend BiSeries operator-(const BiSeries& a, const BiSeries& b) {
        BiSeries r(std::min(a.order(), b.order()));
        for (int i = 0; i < r.order(); ++i) r.c_[i] = a.c_[i] - b.c_[i];
        return r;
    }
    friend BiSeries operator-(const BiSeries& a) {
        BiSeries r(a.order());
        for (int i = 0; i < r.order(); ++i) r.c_[i] = -a.c_[i];
        return r;
    }
    friend BiSeries operator*(const Int& s, const BiSeries& a) {
        BiSeries r(a.order());
        for (int i = 0; i < r.order(); ++i) r.c_[i] = s * a.c_[i];
        return r;
    }

    bool operator==(const BiSeries& b) const { return c_ == b.c_; }
    bool operator!=(const BiSeries& b) const { return c_ != b.c_; }

    /// Multiply by the monomial x^a z^b.
    BiSeries shifted(int xpow, int zpow) const {
        BiSeries r(order());
        for (int i = 0; i + zpow < order(); ++i)
            r.c_[i + zpow] = c_[i].shifted(xpow);
        return r;
    }

    std::vector<PolyX> take() && { return std::move(c_); }
    static BiSeries adopt(std::vector<PolyX> coeffs) {
        BiSeries r;
        r.c_ = std::move(coeffs);
        return r;
    }

  private:
    std::vector<PolyX> c_;
};

/// Truncated Cauchy product.
inline BiSeries bs_mul(const BiSeries& a, const BiSeries& b) {
    BiSeries r(std::min(a.order(), b.order()));
    for (int i = 0; i < std::min(a.order(), r.order()); ++i) {
        if (a.coeff(i).is_zero()) continue;
        for (int j = 0; i + j < r.order() && j < b.order(); ++j)
            r.coeff(i + j) += a.coeff(i) * b.coeff(j);
    }
    return r;
}

/// Multiply by a univariate series in z.
inline BiSeries bs_mul_uni(const BiSeries& a, const USeries& u) {
    BiSeries r(std::min(a.order(), u.order()));
    for (int j = 0; j < std::min(u.order(), r.order()); ++j) {
        if (u.coeff(j) == 0) continue;
        for (int i = 0; i + j < r.order() && i < a.order(); ++i)
            r.coeff(i + j) += u.coeff(j) * a.coeff(i);
    }
    return r;
}

/// Inverse of a series whose z^0 coefficient is the constant +-1; throws
/// NotAUnit otherwise. All arithmetic stays over the integers.
inline BiSeries bs_inv_unit(const BiSeries& a) {
    if (a.order() == 0) return a;
    const PolyX& a0 = a.coeff(0);
    if (!a0.is_constant() || (a0.coeff(0) != 1 && a0.coeff(0) != -1))
        throw NotAUnit();
    const Int u = a0.coeff(0);
    BiSeries r(a.order());
    r.coeff(0) = PolyX(u);
    for (int n = 1; n < a.order(); ++n) {
        PolyX acc;
        for (int k = 1; k <= n; ++k) acc += a.coeff(k) * r.coeff(n - k);
        r.coeff(n) = -u * acc;
    }
    return r;
}

/// Exact division by x^k; throws NotDivisible naming the first offending
/// z-order.
inline BiSeries bs_div_x(const BiSeries& a, int k) {
    BiSeries r(a.order());
    for (int n = 0; n < a.order(); ++n) {
        if (!a.coeff(n).divisible_by_xk(k)) throw NotDivisible(n);
        r.coeff(n) = a.coeff(n).div_xk(k);
    }
    return r;
}

/// x -> 0 specialization, as a univariate series in z.
inline USeries bs_eval_x0(const BiSeries& a) {
    USeries r(a.order());
    for (int n = 0; n < a.order(); ++n) r.coeff(n) = a.coeff(n).coeff(0);
    return r;
}

/// Coefficient of x^k of each z-coefficient, as a univariate series in z.
inline USeries bs_coeff_x(const BiSeries& a, int k) {
    USeries r(a.order());
    for (int n = 0; n < a.order(); ++n) r.coeff(n) = a.coeff(n).coeff(k);
    return r;
}

/// Embed a univariate z-series as a BiSeries constant in x.
inline BiSeries bs_from_uni(const USeries& u) {
    BiSeries r(u.order());
    for (int n = 0; n < u.order(); ++n) r.coeff(n) = PolyX(u.coeff(n));
    return r;
}

/// z + z*f(z^3): the digon correspondence, mapping a triangulation series
/// in t to a near-triangulation series in z. The result is univariate in z.
inline USeries cube_lift(const USeries& f, int zorder) {
    USeries r(zorder);
    if (zorder > 1) r.coeff(1) = 1;
    for (int n = 0; n < f.order(); ++n) {
        int m = 3 * n + 1;
        if (m >= zorder) break;
        r.coeff(m) += f.coeff(n);
    }
    return r;
}

/// Inverse direction: given w0 = z + z*f(z^3), recover f. Demands that
/// w0 - z is supported on z-powers congruent to 1 mod 3; throws BadSupport
/// with the offending z-order otherwise.
inline USeries cube_extract(const USeries& w0) {
    if (w0.order() > 0 && w0.coeff(0) != 0) throw BadSupport(0);
    for (int n = 0; n < w0.order(); ++n) {
        Int c = w0.coeff(n) - (n == 1 ? 1 : 0);
        if (c != 0 && n % 3 != 1) throw BadSupport(n);
    }
    int torder = w0.order() >= 1 ? (w0.order() - 1) / 3 : 0;
    USeries r(torder);
    for (int n = 0; n < torder; ++n) {
        int m = 3 * n + 1;
        if (m < w0.order()) r.coeff(n) = w0.coeff(m) - (n == 0 ? 1 : 0);
    }
    return r;
}

}  // namespace trideg

#endif
