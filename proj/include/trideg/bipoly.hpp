#ifndef TRIDEG_BIPOLY_HPP
#define TRIDEG_BIPOLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "trideg/mpoly.hpp"
#include "trideg/upoly.hpp"
#include "trideg/useries.hpp"

namespace trideg {

/// Polynomial in two variables (y, t): yc[i] is the UPoly coefficient of
/// y^i. Houses the algebraic equations Q(y, t) = 0 satisfied by the
/// triangulation series.
class BiPoly {
  public:
    BiPoly() = default;
    explicit BiPoly(std::vector<UPoly> ycoeffs) : yc_(std::move(ycoeffs)) {
        normalize();
    }

    bool is_zero() const { return yc_.empty(); }
    int degree_y() const { return static_cast<int>(yc_.size()) - 1; }
    int degree_t() const;

    const UPoly& coeff_y(int i) const {
        static const UPoly zero;
        if (i < 0 || i >= static_cast<int>(yc_.size())) return zero;
        return yc_[i];
    }
    /// Dominant coefficient D(t): the UPoly attached to the highest y-power.
    const UPoly& lc_y() const { return coeff_y(degree_y()); }

    friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator-(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator*(const Int& s, const BiPoly& a);
    bool operator==(const BiPoly& b) const { return yc_ == b.yc_; }
    bool operator!=(const BiPoly& b) const { return yc_ != b.yc_; }

    BiPoly derivative_y() const;

    Int int_content() const;

    /// Content free, with the y-degree-major leading coefficient positive.
    BiPoly canonical() const;

    /// Equality up to integer content and global sign.
    bool equivalent(const BiPoly& other) const {
        return canonical() == other.canonical();
    }

    /// Content with respect to y: the gcd of the y-coefficients in Z[t].
    UPoly content_y() const;
    BiPoly primitive_part_y() const;

    MPoly to_mpoly() const;  // y -> var 0, t -> var 1
    static BiPoly from_mpoly(const MPoly& p);

    std::string str() const;

  private:
    void normalize() {
        while (!yc_.empty() && yc_.back().is_zero()) yc_.pop_back();
    }
    std::vector<UPoly> yc_;
};

struct ResidualReport {
    bool ok;
    int first_bad_order;  // -1 when ok
};

/// Substitute the series for y and test vanishing modulo t^order.
ResidualReport verify_algebraic(const BiPoly& q, const USeries& s);

/// Same, but throws ResidualNonzero on failure.
void require_algebraic(const BiPoly& q, const USeries& s);

UPoly resultant_y(const BiPoly& a, const BiPoly& b);

/// Res(q, dq/dy) / lc, with the sign (-1)^(d(d-1)/2).
UPoly discriminant_y(const BiPoly& q);

/// R(t) = D(t) * disc(t), integer content removed. Its positive roots are
/// the candidate dominant singularities.
UPoly singular_candidates(const BiPoly& q);

/// GCD in Z[t][y] via a primitive remainder sequence.
BiPoly gcd_y(const BiPoly& a, const BiPoly& b);

/// Unique power-series solution of q(y, t) = 0 with y(0) = 0, by Newton
/// iteration with precision doubling. Requires [t^0] dq/dy(0, t) = +-1 and
/// q(0, t) = O(t).
USeries us_solve_algebraic(const BiPoly& q, int order);

/// Apply the digon substitution y -> z + z*y' to a polynomial in (y, z),
/// strip the z-monomial factor, and require support on z-powers divisible
/// by 3; returns the equation in (y', t) with t = z^3. Throws BadSupport.
BiPoly digon_substitute(const BiPoly& q_in_z);

}  // namespace trideg

#endif
