#ifndef TRIDEG_SOLVER_HPP
#define TRIDEG_SOLVER_HPP

#include <string>

#include "trideg/biseries.hpp"

namespace trideg {

enum class FamilyTag { S, T, U, V };

const char* family_name(FamilyTag tag);

/// A solved catalytic equation: the bivariate series W(x,z) together with
/// its x->0 specialization and its [x] coefficient, all to the same
/// z-truncation order.
struct SolvedFamily {
    FamilyTag tag;
    BiSeries series;  // W(x,z)
    USeries w0;       // W(0,z)
    USeries w1;       // [x] W(x,z)
    int order;
};

/// Order-by-order forward sweep; every right-hand-side term of the defining
/// equation carries a factor z, so one pass computes the unique solution.
/// order must be >= 2. A NotDivisible escaping these would mean the
/// decomposition identities are wrong and is left fatal.
SolvedFamily solve_family(FamilyTag tag, int order);

inline SolvedFamily solve_S(int order) { return solve_family(FamilyTag::S, order); }
inline SolvedFamily solve_T(int order) { return solve_family(FamilyTag::T, order); }
inline SolvedFamily solve_U(int order) { return solve_family(FamilyTag::U, order); }
inline SolvedFamily solve_V(int order) { return solve_family(FamilyTag::V, order); }

/// Plug the solved series back into its defining equation; returns the
/// residual (must be the zero series). Independent of the sweep order in
/// which the solution was produced.
BiSeries equation_residual(const SolvedFamily& f);

/// Re-derives every intermediate series of the root-vertex decomposition
/// from the solved series alone and checks the two closing identities
/// exactly. Throws IdentityViolation naming the first failure when
/// hard_fail is set; otherwise returns false.
bool identity_suite(const SolvedFamily& f, int order, bool hard_fail = true);

/// Coefficientwise a <= b at every (n, d) up to the common order.
bool dominated_by(const BiSeries& a, const BiSeries& b);

/// All coefficients nonnegative.
bool nonnegative(const BiSeries& a);

}  // namespace trideg

#endif
