#include "trideg/asymptotics.hpp"

#include <cmath>
#include <vector>

#include "trideg/errors.hpp"

namespace trideg {

namespace {

/// Indices [first, order) of the tail run of nonzero coefficients.
int tail_start(const USeries& f) {
    int start = f.order();
    for (int n = f.order() - 1; n >= 0 && f.coeff(n) != 0; --n) start = n;
    return start;
}

/// One weighted Richardson level: removes the leading n^(-j) term of a
/// sequence s_n = s + O(n^-j) with an expansion in integer powers of 1/n.
/// values[i] corresponds to n = n0 + i.
std::vector<double> richardson_level(const std::vector<double>& v, int n0,
                                     int j) {
    std::vector<double> r(v.size() - 1);
    for (size_t i = 1; i < v.size(); ++i) {
        double n = n0 + static_cast<double>(i);
        double wn = std::pow(n, j), wp = std::pow(n - 1, j);
        r[i - 1] = (wn * v[i] - wp * v[i - 1]) / (wn - wp);
    }
    return r;
}

double extrapolate(std::vector<double> v, int n0, int levels) {
    for (int j = 1; j <= levels && v.size() > 1; ++j) {
        v = richardson_level(v, n0, j);
        ++n0;
    }
    return v.back();
}

double log_coeff(const Int& c) {
    // log of a big integer without overflowing double.
    signed long exp2;
    double d = mpz_get_d_2exp(&exp2, c.get_mpz_t());
    return std::log(std::abs(d)) + static_cast<double>(exp2) * std::log(2.0);
}

}  // namespace

double ratio_extrapolation(const USeries& f) {
    int start = tail_start(f);
    int len = f.order() - start;
    if (len < 16) throw InsufficientOrder();
    std::vector<double> ratios(len - 1);
    for (int i = 0; i + 1 < len; ++i) {
        Rat r(f.coeff(start + i + 1), f.coeff(start + i));
        r.canonicalize();
        ratios[i] = r.get_d();
    }
    return extrapolate(std::move(ratios), start + 1, 4);
}

AsymptoticFit fit_growth(const USeries& f, double rho) {
    int start = tail_start(f);
    int len = f.order() - start;
    if (len < 32) throw InsufficientOrder();
    const int top = f.order() - 1;

    AsymptoticFit fit{};
    fit.terms_used = len;
    fit.inv_rho = ratio_extrapolation(f);

    // u_n = log(f_n rho^n) ~ log(lambda) + exponent*log(n) + b/n; fit the
    // top half of the range by least squares. The 1/n column absorbs the
    // first correction term, which otherwise biases the exponent.
    const double logrho = std::log(rho);
    int lo = start + len / 2;
    double m00 = 0, m01 = 0, m02 = 0, m11 = 0, m12 = 0, m22 = 0;
    double b0 = 0, b1 = 0, b2 = 0;
    for (int n = lo; n <= top; ++n) {
        double x1 = std::log(static_cast<double>(n));
        double x2 = 1.0 / n;
        double y = log_coeff(f.coeff(n)) + n * logrho;
        m00 += 1;
        m01 += x1;
        m02 += x2;
        m11 += x1 * x1;
        m12 += x1 * x2;
        m22 += x2 * x2;
        b0 += y;
        b1 += x1 * y;
        b2 += x2 * y;
    }
    // Solve the 3x3 normal equations by Cramer's rule.
    double det = m00 * (m11 * m22 - m12 * m12) -
                 m01 * (m01 * m22 - m12 * m02) +
                 m02 * (m01 * m12 - m11 * m02);
    double det1 = m00 * (b1 * m22 - b2 * m12) -
                  m01 * (b0 * m22 - b2 * m02) +
                  m02 * (b0 * m12 - b1 * m02);
    fit.exponent = det1 / det;

    // lambda_n = f_n rho^n n^(-exponent) -> lambda(1 + O(1/n)). Compare the
    // top two Richardson depths for the stability estimate.
    std::vector<double> lam(top - lo + 1);
    for (int n = lo; n <= top; ++n) {
        double logl = log_coeff(f.coeff(n)) + n * logrho -
                      fit.exponent * std::log(static_cast<double>(n));
        lam[n - lo] = std::exp(logl);
    }
    std::vector<double> depth1 = richardson_level(lam, lo, 1);
    std::vector<double> depth2 = richardson_level(depth1, lo + 1, 2);
    fit.lambda = depth2.back();
    fit.lambda_drift = std::abs(depth2.back() - depth1.back()) /
                       std::max(std::abs(depth2.back()), 1e-300);
    return fit;
}

double tail_ratio_deviation(const USeries& a, const USeries& b, double limit) {
    int n = std::min(a.order(), b.order()) - 1;
    while (n >= 0 && b.coeff(n) == 0) --n;
    if (n < 0) throw InsufficientOrder();
    Rat r(a.coeff(n), b.coeff(n));
    r.canonicalize();
    return std::abs(r.get_d() - limit);
}

}  // namespace trideg
