#ifndef TRIDEG_LAGRANGE_HPP
#define TRIDEG_LAGRANGE_HPP

#include "trideg/census.hpp"
#include "trideg/useries.hpp"

namespace trideg {

enum class TreeTag { X, Y };

/// Unique power-series solution (vanishing at 0) of the tree equation:
///   X = 2t (1 + X)^3,
///   Y = t (1 + Y) (1 + 4Y + 2Y^2).
/// Both have integer, nonnegative coefficients.
USeries solve_tree_series(TreeTag tag, int order);

/// Closed form of a census series in the tree series:
///   F  = X (1 - X) / 2,
///   G  = t Y (1 + Y) (1 - Y - Y^2),
///   G* = t^2 (1 + Y) (1 - Y - Y^2) (1 + 3Y + 6Y^2 + 2Y^3).
/// Defined for F, G, Gstar. The halving in F must be exact; throws
/// NonIntegral otherwise.
USeries parametrized_series(CensusTag tag, int order);

/// Verify that `expected` matches the parametrized form up to the common
/// truncation. Throws Mismatch at the first differing order when hard_fail
/// is set; otherwise returns false.
bool check_parametrization(CensusTag tag, const USeries& expected,
                           bool hard_fail = true);

}  // namespace trideg

#endif
