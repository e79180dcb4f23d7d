#ifndef TRIDEG_USERIES_HPP
#define TRIDEG_USERIES_HPP

#include <algorithm>
#include <cassert>
#include <utility>
#include <vector>

#include "trideg/errors.hpp"
#include "trideg/numeric.hpp"

namespace trideg {

/// Truncated power series in one variable with integer coefficients.
/// coeff(n) is the coefficient of t^n; terms of order >= order() are unknown.
class USeries {
  public:
    USeries() = default;
    explicit USeries(int order) : c_(order) { assert(order >= 0); }
    USeries(int order, std::vector<Int> coeffs) : c_(std::move(coeffs)) {
        c_.resize(order);
    }

    int order() const { return static_cast<int>(c_.size()); }

    const Int& coeff(int n) const {
        assert(n >= 0 && n < order());
        return c_[n];
    }
    Int& coeff(int n) {
        assert(n >= 0 && n < order());
        return c_[n];
    }
    const std::vector<Int>& coeffs() const { return c_; }

    bool is_zero() const {
        return std::all_of(c_.begin(), c_.end(),
                           [](const Int& a) { return a == 0; });
    }

    USeries truncated(int m) const {
        USeries r(std::min(m, order()));
        for (int i = 0; i < r.order(); ++i) r.c_[i] = c_[i];
        return r;
    }

    friend USeries operator+(const USeries& a, const USeries& b) {
        USeries r(std::min(a.order(), b.order()));
        for (int i = 0; i < r.order(); ++i) r.c_[i] = a.c_[i] + b.c_[i];
        return r;
    }
    friend USeries operator-(const USeries& a, const USeries& b) {
        USeries r(std::min(a.order(), b.order()));
        for (int i = 0; i < r.order(); ++i) r.c_[i] = a.c_[i] - b.c_[i];
        return r;
    }
    friend USeries operator-(const USeries& a) {
        USeries r(a.order());
        for (int i = 0; i < r.order(); ++i) r.c_[i] = -a.c_[i];
        return r;
    }
    friend USeries operator*(const USeries& a, const USeries& b) {
        USeries r(std::min(a.order(), b.order()));
        for (int i = 0; i < std::min(a.order(), r.order()); ++i) {
            if (a.c_[i] == 0) continue;
            for (int j = 0; i + j < r.order() && j < b.order(); ++j)
                r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        return r;
    }
    friend USeries operator*(const Int& s, const USeries& a) {
        USeries r(a.order());
        for (int i = 0; i < r.order(); ++i) r.c_[i] = s * a.c_[i];
        return r;
    }

    bool operator==(const USeries& b) const { return c_ == b.c_; }

    /// Multiply by t^k (truncation order unchanged).
    USeries shifted_t(int k) const {
        USeries r(order());
        for (int i = 0; i + k < order(); ++i) r.c_[i + k] = c_[i];
        return r;
    }

    /// Inverse of a series whose constant term is +1 or -1; exact over the
    /// integers. Throws NotAUnit otherwise.
    USeries inverse() const {
        if (order() == 0) return *this;
        if (c_[0] != 1 && c_[0] != -1) throw NotAUnit();
        const Int u = c_[0];  // u == 1/u
        USeries r(order());
        r.c_[0] = u;
        for (int n = 1; n < order(); ++n) {
            Int acc = 0;
            for (int k = 1; k <= n; ++k) acc += c_[k] * r.c_[n - k];
            r.c_[n] = -u * acc;
        }
        return r;
    }

  private:
    std::vector<Int> c_;
};

/// Build a USeries from a dense coefficient list, truncated/padded to order.
inline USeries useries_from(std::vector<long> v, int order) {
    USeries r(order);
    for (int i = 0; i < order && i < static_cast<int>(v.size()); ++i)
        r.coeff(i) = v[i];
    return r;
}

}  // namespace trideg

#endif
