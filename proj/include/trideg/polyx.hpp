#ifndef TRIDEG_POLYX_HPP
#define TRIDEG_POLYX_HPP

#include <cassert>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "trideg/errors.hpp"
#include "trideg/numeric.hpp"

namespace trideg {

/// Dense univariate polynomial in the catalytic variable x, integer
/// coefficients, trailing zeros stripped. The zero polynomial stores no
/// coefficients.
class PolyX {
  public:
    PolyX() = default;
    explicit PolyX(Int constant) {
        if (constant != 0) c_.push_back(std::move(constant));
    }
    PolyX(std::initializer_list<Int> coeffs) : c_(coeffs) { normalize(); }
    explicit PolyX(std::vector<Int> coeffs) : c_(std::move(coeffs)) {
        normalize();
    }

    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial is -1 by convention
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    const Int& coeff(int k) const {
        static const Int zero = 0;
        if (k < 0 || k >= static_cast<int>(c_.size())) return zero;
        return c_[k];
    }

    const std::vector<Int>& coeffs() const { return c_; }

    bool is_constant() const { return c_.size() <= 1; }

    friend PolyX operator+(const PolyX& a, const PolyX& b) {
        std::vector<Int> r(std::max(a.c_.size(), b.c_.size()));
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
        return PolyX(std::move(r));
    }
    friend PolyX operator-(const PolyX& a, const PolyX& b) {
        std::vector<Int> r(std::max(a.c_.size(), b.c_.size()));
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
        return PolyX(std::move(r));
    }
    friend PolyX operator-(const PolyX& a) {
        std::vector<Int> r(a.c_.size());
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] = -a.c_[i];
        PolyX p;
        p.c_ = std::move(r);
        return p;
    }
    friend PolyX operator*(const PolyX& a, const PolyX& b) {
        if (a.is_zero() || b.is_zero()) return PolyX();
        std::vector<Int> r(a.c_.size() + b.c_.size() - 1);
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        PolyX p;
        p.c_ = std::move(r);  // product of nonzero polys has nonzero lead
        return p;
    }
    friend PolyX operator*(const Int& s, const PolyX& a) {
        if (s == 0) return PolyX();
        std::vector<Int> r(a.c_.size());
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] = s * a.c_[i];
        PolyX p;
        p.c_ = std::move(r);
        return p;
    }

    PolyX& operator+=(const PolyX& b) { return *this = *this + b; }
    PolyX& operator-=(const PolyX& b) { return *this = *this - b; }

    bool operator==(const PolyX& b) const { return c_ == b.c_; }
    bool operator!=(const PolyX& b) const { return c_ != b.c_; }

    /// Multiply by x^k.
    PolyX shifted(int k) const {
        if (is_zero()) return PolyX();
        std::vector<Int> r(c_.size() + k);
        for (size_t i = 0; i < c_.size(); ++i) r[i + k] = c_[i];
        PolyX p;
        p.c_ = std::move(r);
        return p;
    }

    bool divisible_by_xk(int k) const {
        if (is_zero()) return true;
        if (static_cast<int>(c_.size()) < k) return false;
        for (int i = 0; i < k; ++i)
            if (c_[i] != 0) return false;
        return true;
    }

    /// Exact quotient by x^k; caller must have checked divisibility.
    PolyX div_xk(int k) const {
        assert(divisible_by_xk(k));
        if (is_zero()) return PolyX();
        PolyX p;
        p.c_.assign(c_.begin() + k, c_.end());
        return p;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string s;
        for (int i = degree(); i >= 0; --i) {
            if (c_[i] == 0) continue;
            if (!s.empty()) s += (c_[i] > 0 ? " + " : " - ");
            else if (c_[i] < 0) s += "-";
            Int a = abs(c_[i]);
            if (a != 1 || i == 0) s += a.get_str();
            if (i >= 1) s += (a != 1 ? "*x" : "x");
            if (i >= 2) s += "^" + std::to_string(i);
        }
        return s;
    }

  private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Int> c_;
};

}  // namespace trideg

#endif
