#ifndef TRIDEG_ASYMPTOTICS_HPP
#define TRIDEG_ASYMPTOTICS_HPP

#include "trideg/useries.hpp"

namespace trideg {

/// Numerical fit of f_n ~ lambda * n^exponent * (1/rho)^n from the
/// coefficients of a series.
struct AsymptoticFit {
    double inv_rho;       // Richardson-extrapolated limit of f_{n+1}/f_n
    double exponent;      // least-squares slope of log(f_n rho^n) vs log n
    double lambda;        // f_n rho^n n^(-exponent), extrapolated
    double lambda_drift;  // relative change of lambda over the last window
    int terms_used;
};

/// Estimate 1/rho from successive coefficient ratios, accelerated by
/// weighted Richardson extrapolation. Throws InsufficientOrder when fewer
/// than 16 consecutive nonzero coefficients are available.
double ratio_extrapolation(const USeries& f);

/// Full fit against a known radius of convergence rho (from a certified
/// polynomial root). Throws InsufficientOrder when fewer than 32
/// consecutive nonzero coefficients are available.
AsymptoticFit fit_growth(const USeries& f, double rho);

/// Check that a_n / b_n approaches `limit`: returns the deviation at the
/// top order. Throws InsufficientOrder when the top coefficient of b is 0.
double tail_ratio_deviation(const USeries& a, const USeries& b, double limit);

}  // namespace trideg

#endif
