#include "trideg/trisystem.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <vector>

#include "trideg/errors.hpp"

namespace trideg {

TriSystem TriSystem::make(FamilyTag tag) {
    MPoly p = catalytic_polynomial(tag);
    return TriSystem{tag, p, p.derivative(0), p.derivative(2)};
}

USeries bs_eval_series(const BiSeries& w, const USeries& xs) {
    const int order = std::min(w.order(), xs.order());
    USeries acc(order);
    for (int n = 0; n < order; ++n) {
        const PolyX& pn = w.coeff(n);
        USeries val(order);
        for (int k = pn.degree(); k >= 0; --k) {
            val = val * xs;
            if (pn.coeff(k) != 0) val.coeff(0) += pn.coeff(k);
        }
        acc = acc + val.shifted_t(n);
    }
    return acc;
}

namespace {

BiSeries bs_derivative_x(const BiSeries& w) {
    BiSeries r(w.order());
    for (int n = 0; n < w.order(); ++n) {
        const PolyX& pn = w.coeff(n);
        std::vector<Int> d(std::max(pn.degree(), 0));
        for (int k = 1; k <= pn.degree(); ++k) d[k - 1] = Int(k) * pn.coeff(k);
        r.coeff(n) = PolyX(std::move(d));
    }
    return r;
}

/// Evaluate an MPoly at series values for (W, W0, X); Z is the series z.
USeries mp_eval(const MPoly& p, const USeries& wv, const USeries& w0,
                const USeries& xs, int order) {
    std::array<std::vector<USeries>, 4> pows;
    std::array<const USeries*, 4> base = {&wv, &w0, &xs, nullptr};
    USeries zser(order);
    if (order > 1) zser.coeff(1) = 1;
    base[3] = &zser;
    for (int v = 0; v < 4; ++v) {
        USeries one(order);
        if (order > 0) one.coeff(0) = 1;
        pows[v].push_back(one);
    }
    USeries acc(order);
    for (auto& [e, c] : p.terms()) {
        USeries term(order);
        if (order > 0) term.coeff(0) = c;
        for (int v = 0; v < 4; ++v) {
            while (static_cast<int>(pows[v].size()) <= e[v])
                pows[v].push_back(pows[v].back() * *base[v]);
            if (e[v] > 0) term = term * pows[v][e[v]];
        }
        acc = acc + term;
    }
    return acc;
}

int first_nonzero(const USeries& s) {
    for (int n = 0; n < s.order(); ++n)
        if (s.coeff(n) != 0) return n;
    return -1;
}

}  // namespace

USeries kernel_root(const TriSystem& sys, const SolvedFamily& f) {
    const int order = f.order;
    const MPoly p11 = sys.p1.derivative(0);
    const MPoly p13 = sys.p1.derivative(2);
    const BiSeries wx = bs_derivative_x(f.series);

    USeries xs(order);
    if (order > 1) xs.coeff(1) = 1;  // X(z) = z + O(z^2)
    int rounds = 2;
    for (int m = 1; m < order; m *= 2) ++rounds;
    for (int r = 0; r < rounds; ++r) {
        USeries wv = bs_eval_series(f.series, xs);
        USeries wxv = bs_eval_series(wx, xs);
        USeries phi = mp_eval(sys.p1, wv, f.w0, xs, order);
        USeries dphi = mp_eval(p11, wv, f.w0, xs, order) * wxv +
                       mp_eval(p13, wv, f.w0, xs, order);
        xs = xs - phi * dphi.inverse();
    }

    USeries wv = bs_eval_series(f.series, xs);
    for (const MPoly* q : {&sys.p1, &sys.p, &sys.p3}) {
        int bad = first_nonzero(mp_eval(*q, wv, f.w0, xs, order));
        if (bad >= 0) throw ResidualNonzero(bad);
    }
    return xs;
}

namespace {

/// Read an MPoly depending only on W0 and Z into a BiPoly (y = W0, t = Z).
BiPoly bipoly_w0z(const MPoly& p) {
    assert(!p.depends_on(0) && !p.depends_on(2));
    std::vector<UPoly> r(static_cast<size_t>(std::max(p.degree(1), 0)) + 1);
    for (auto& [e, c] : p.terms()) {
        std::vector<Int> mono(e[3] + 1);
        mono[e[3]] = c;
        r[e[1]] += UPoly(std::move(mono));
    }
    return BiPoly(std::move(r));
}

void squarefree_parts(const BiPoly& q, std::vector<BiPoly>& out) {
    BiPoly g = gcd_y(q, q.derivative_y());
    if (g.degree_y() < 1) {
        out.push_back(q.canonical());
        return;
    }
    MPoly quotient = q.to_mpoly().div_exact(g.to_mpoly());
    squarefree_parts(BiPoly::from_mpoly(quotient), out);
    squarefree_parts(g, out);
}

}  // namespace

BiPoly eliminate_quadratic(const TriSystem& sys, const USeries& w0) {
    MPoly r1 = resultant(sys.p, sys.p1, 0).strip_monomials();
    MPoly r2 = resultant(sys.p3, sys.p1, 0).strip_monomials();
    MPoly e = resultant(r1, r2, 2).strip_monomials();
    BiPoly elim = bipoly_w0z(e).primitive_part_y().canonical();

    std::vector<BiPoly> candidates;
    if (verify_algebraic(elim, w0).ok) {
        candidates.push_back(elim);
    } else {
        squarefree_parts(elim, candidates);
        std::erase_if(candidates, [&](const BiPoly& c) {
            return c.degree_y() < 1 || !verify_algebraic(c, w0).ok;
        });
        // Certify the survivors really are factors of the eliminant.
        for (const BiPoly& c : candidates)
            assert(gcd_y(elim, c).degree_y() == c.degree_y());
    }
    if (candidates.empty()) throw NoAnnihilatingFactor();
    // Prefer the factor of lowest y-degree: the minimal certified equation.
    auto best = std::min_element(candidates.begin(), candidates.end(),
                                 [](const BiPoly& a, const BiPoly& b) {
                                     return a.degree_y() < b.degree_y();
                                 });
    return best->canonical();
}

}  // namespace trideg
