#ifndef TRIDEG_TRISYSTEM_HPP
#define TRIDEG_TRISYSTEM_HPP

#include "trideg/bipoly.hpp"
#include "trideg/equations.hpp"
#include "trideg/mpoly.hpp"
#include "trideg/solver.hpp"

namespace trideg {

/// Quadratic-method system for a family with one catalytic variable:
/// P = 0 along W = W(x,z), and the kernel/tangency conditions P1 = dP/dW,
/// P3 = dP/dX that pin down the branch point x = X(z).
struct TriSystem {
    FamilyTag tag;
    MPoly p;   // P(W, W0, X, Z)
    MPoly p1;  // dP/dW
    MPoly p3;  // dP/dX

    static TriSystem make(FamilyTag tag);
};

/// Solve P1(W(x,z), W(0,z), x, z) = 0 for the series x = X(z) by Newton
/// iteration, then verify that P and P3 also vanish along x = X(z) to the
/// truncation order. Throws ResidualNonzero when they do not.
USeries kernel_root(const TriSystem& sys, const SolvedFamily& f);

/// Substitute x = xs into a bivariate series.
USeries bs_eval_series(const BiSeries& w, const USeries& xs);

/// Eliminate W and X from the system {P = 0, P1 = 0, P3 = 0}:
///   R1 = Res_W(P, P1), R2 = Res_W(P3, P1)     (monomial content stripped)
///   E  = Res_X(R1, R2)                        (monomial content stripped)
/// then take the primitive part with respect to W0 and keep the factor
/// annihilated by the series w0 (certified to w0's truncation order).
/// Returns the eliminant as a canonical BiPoly in (y = W0, z as t-slot).
/// Throws NoAnnihilatingFactor when no factor vanishes on the series.
BiPoly eliminate_quadratic(const TriSystem& sys, const USeries& w0);

}  // namespace trideg

#endif
