#include "trideg/census.hpp"

#include "trideg/bipoly.hpp"
#include "trideg/biseries.hpp"

namespace trideg {

const char* census_name(CensusTag tag) {
    switch (tag) {
        case CensusTag::F: return "F";
        case CensusTag::G: return "G";
        case CensusTag::H: return "H";
        case CensusTag::K: return "K";
        case CensusTag::Gstar: return "Gstar";
        case CensusTag::Hstar: return "Hstar";
    }
    return "?";
}

CensusSeries extract(CensusTag tag, const SolvedFamily& solved) {
    CensusSeries c;
    c.tag = tag;
    c.series = cube_extract(solved.w0);
    c.order = c.series.order();
    c.source_order_z = solved.order;
    return c;
}

CensusSeries from_equation(CensusTag tag, const BiPoly& equation, int order) {
    CensusSeries c;
    c.tag = tag;
    c.series = us_solve_algebraic(equation, order);
    require_algebraic(equation, c.series);
    c.order = order;
    c.source_order_z = 0;
    return c;
}

CensusSeries derive_gstar(const CensusSeries& g) {
    CensusSeries r;
    r.tag = CensusTag::Gstar;
    r.series = g.series * useries_from({1, -2}, g.order);
    r.order = r.series.order();
    r.source_order_z = g.source_order_z;
    return r;
}

CensusSeries derive_hstar(const CensusSeries& h) {
    CensusSeries r;
    r.tag = CensusTag::Hstar;
    USeries inv1mt = useries_from({1, -1}, h.order).inverse();
    r.series = h.series * useries_from({1, -5, 5, -3}, h.order) * inv1mt;
    r.order = r.series.order();
    r.source_order_z = h.source_order_z;
    return r;
}

bool hstar_derivation_check(const USeries& h, bool hard_fail) {
    const int n = h.order();
    USeries inv1mt = useries_from({1, -1}, n).inverse();

    // H_{>=2,>=2,>=3} = H/(1-t)
    USeries hge2ge2ge3 = h * inv1mt;
    // H_{>=3,>=3,>=4} = (1-2t)H, H_{3,3,>=4} = t^2 H,
    // H_{3,>=4,>=4} = t(1-2t+2t^2)/(1-t) H
    USeries hge3ge3ge4 = h * useries_from({1, -2}, n);
    USeries h33ge4 = h.shifted_t(2);
    USeries h3ge4ge4 = h * useries_from({0, 1, -2, 2}, n) * inv1mt;

    // intermediate step: H_{3,>=4,>=4} = t H_{>=3,>=3,>=4} + t^2 H_{>=2,>=2,>=3}
    USeries alt = hge3ge3ge4.shifted_t(1) + hge2ge2ge3.shifted_t(2);
    if (!(alt == h3ge4ge4)) {
        if (hard_fail) throw IdentityViolation("H_{3,>=4,>=4} chain", 0);
        return false;
    }

    USeries chain = hge3ge3ge4 - h33ge4 - Int(2) * h3ge4ge4;
    USeries closed = h * useries_from({1, -5, 5, -3}, n) * inv1mt;
    if (!(chain == closed)) {
        if (hard_fail) throw IdentityViolation("H* three-term chain", 0);
        return false;
    }
    return true;
}

bool dominated_by(const USeries& a, const USeries& b) {
    int n = std::min(a.order(), b.order());
    for (int i = 0; i < n; ++i)
        if (a.coeff(i) > b.coeff(i)) return false;
    return true;
}

bool nonnegative(const USeries& a) {
    for (int i = 0; i < a.order(); ++i)
        if (a.coeff(i) < 0) return false;
    return true;
}

}  // namespace trideg
