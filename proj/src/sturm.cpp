#include "trideg/sturm.hpp"

#include <algorithm>
#include <cassert>

#include "trideg/errors.hpp"

namespace trideg {

namespace {

/// Pseudo-remainder scaled by a positive factor, so that its sign agrees
/// with the sign of the true rational remainder.
UPoly signed_prem(const UPoly& a, const UPoly& b) {
    assert(!b.is_zero());
    int delta = a.degree() - b.degree();
    if (delta < 0) return a;
    std::vector<Int> r(a.coeffs());
    const Int& lb = b.lc();
    for (int i = delta; i >= 0; --i) {
        Int top = r[i + b.degree()];
        for (auto& c : r) c *= lb;
        for (int j = 0; j <= b.degree(); ++j) r[i + j] -= top * b.coeff(j);
    }
    r.resize(b.degree());
    UPoly rem{std::move(r)};
    // The multiplier was lc(b)^(delta + 1); flip when that was negative.
    if (lb < 0 && (delta + 1) % 2 != 0) rem = -rem;
    return rem;
}

/// Divide by the content, preserving the sign.
UPoly reduce_keep_sign(const UPoly& p) {
    if (p.is_zero()) return p;
    Int g = p.content();
    std::vector<Int> r(p.coeffs());
    for (auto& c : r) c /= g;
    return UPoly(std::move(r));
}

}  // namespace

SturmSequence::SturmSequence(const UPoly& p) {
    assert(!p.is_zero());
    UPoly sq = p.div_exact(gcd(p, p.derivative())).normalized();
    chain_.push_back(sq);
    if (sq.degree() >= 1) chain_.push_back(reduce_keep_sign(sq.derivative()));
    while (chain_.back().degree() >= 1) {
        UPoly r = signed_prem(chain_[chain_.size() - 2], chain_.back());
        if (r.is_zero()) break;
        chain_.push_back(reduce_keep_sign(-r));
    }
}

int SturmSequence::variations(const Rat& x) const {
    int changes = 0;
    int prev = 0;
    for (const UPoly& f : chain_) {
        int s = f.sign_at(x);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

RootInterval smallest_positive_root(const UPoly& p, const Rat& width) {
    if (p.is_zero()) throw NoPositiveRoot();
    SturmSequence seq(p);
    const UPoly& sq = seq.squarefree();
    if (sq.degree() < 1) throw NoPositiveRoot();

    // Cauchy bound: every root has |x| < 1 + max |c_i| / |lc|.
    Int maxc = 0;
    for (const Int& c : sq.coeffs()) maxc = std::max(maxc, Int(abs(c)));
    Int lead = abs(sq.lc());
    Rat bound = Rat(maxc, lead) + 2;
    bound.canonicalize();

    Rat lo = 0, hi = bound;
    if (seq.count_roots(lo, hi) == 0) throw NoPositiveRoot();
    // Keep the smallest positive root inside (lo, hi].
    for (;;) {
        Rat w = hi - lo;
        w.canonicalize();
        if (w <= width && seq.count_roots(lo, hi) == 1) break;
        Rat mid = (lo + hi) / 2;
        mid.canonicalize();
        if (seq.count_roots(lo, mid) >= 1) hi = mid;
        else lo = mid;
    }
    return RootInterval{lo, hi};
}

}  // namespace trideg
