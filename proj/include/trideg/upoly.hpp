#ifndef TRIDEG_UPOLY_HPP
#define TRIDEG_UPOLY_HPP

#include <cassert>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "trideg/numeric.hpp"

namespace trideg {

/// Univariate polynomial in t with integer coefficients (dense, trailing
/// zeros stripped).
class UPoly {
  public:
    UPoly() = default;
    explicit UPoly(Int constant) {
        if (constant != 0) c_.push_back(std::move(constant));
    }
    UPoly(std::initializer_list<Int> coeffs) : c_(coeffs) { normalize(); }
    explicit UPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) {
        normalize();
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    const Int& coeff(int k) const {
        static const Int zero = 0;
        if (k < 0 || k >= static_cast<int>(c_.size())) return zero;
        return c_[k];
    }
    const std::vector<Int>& coeffs() const { return c_; }
    const Int& lc() const {
        static const Int zero = 0;
        return c_.empty() ? zero : c_.back();
    }

    friend UPoly operator+(const UPoly& a, const UPoly& b);
    friend UPoly operator-(const UPoly& a, const UPoly& b);
    friend UPoly operator-(const UPoly& a);
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const Int& s, const UPoly& a);
    UPoly& operator+=(const UPoly& b) { return *this = *this + b; }
    UPoly& operator-=(const UPoly& b) { return *this = *this - b; }
    bool operator==(const UPoly& b) const { return c_ == b.c_; }
    bool operator!=(const UPoly& b) const { return c_ != b.c_; }

    UPoly shifted(int k) const;  // multiply by t^k

    UPoly derivative() const;

    /// Integer content (gcd of coefficients), nonnegative; 0 for the zero
    /// polynomial.
    Int content() const;

    /// Divide by the content and make the leading coefficient positive.
    UPoly normalized() const;

    /// Exact quotient; asserts divisibility.
    UPoly div_exact(const UPoly& d) const;

    bool divides(const UPoly& other) const;

    /// Sign of p(a/b) for b > 0, via homogeneous evaluation (no rationals).
    int sign_at(const Rat& x) const;

    /// Exact rational evaluation.
    Rat eval(const Rat& x) const;

    double eval_double(double x) const;

    std::string str() const;

  private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Int> c_;
};

/// GCD via the primitive polynomial remainder sequence; result normalized
/// (content 1, positive leading coefficient).
UPoly gcd(const UPoly& a, const UPoly& b);

}  // namespace trideg

#endif
