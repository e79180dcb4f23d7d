#ifndef TRIDEG_CENSUS_HPP
#define TRIDEG_CENSUS_HPP

#include <string>

#include "trideg/solver.hpp"
#include "trideg/useries.hpp"

namespace trideg {

enum class CensusTag { F, G, H, K, Gstar, Hstar };

const char* census_name(CensusTag tag);

/// Univariate triangulation series: the coefficient of t^n counts maps
/// with 3n edges. source_order_z records the z-truncation it came from
/// (0 when the series was produced directly in t).
struct CensusSeries {
    CensusTag tag;
    USeries series;
    int order;
    int source_order_z;
};

/// Read F, G, H or K off the digon specialization W(0,z) = z + z L(z^3).
/// Throws BadSupport when W(0) - z has a coefficient off 1 mod 3.
CensusSeries extract(CensusTag tag, const SolvedFamily& solved);

class BiPoly;

/// Solve the published algebraic equation for the series directly in t
/// (Newton iteration); source_order_z is 0. Intended for the long series
/// needed by asymptotic fits; the low-order terms must always be
/// cross-checked against extract() from the map decomposition.
CensusSeries from_equation(CensusTag tag, const BiPoly& equation, int order);

/// G*(t) = (1 - 2t) G(t).
CensusSeries derive_gstar(const CensusSeries& g);

/// H*(t) = (1 - 5t + 5t^2 - 3t^3)/(1 - t) * H(t).
CensusSeries derive_hstar(const CensusSeries& h);

/// Recompute H* through the three-term degree-splitting chain and confirm
/// it agrees with derive_hstar. The relation is series-independent algebra,
/// so it must hold for arbitrary input series.
bool hstar_derivation_check(const USeries& h, bool hard_fail = true);

bool dominated_by(const USeries& a, const USeries& b);
bool nonnegative(const USeries& a);

}  // namespace trideg

#endif
