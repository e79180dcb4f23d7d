#include "trideg/mpoly.hpp"

#include <algorithm>
#include <cassert>

namespace trideg {

void MPoly::insert(const Expo& e, Int c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(e, std::move(c));
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MPoly MPoly::constant(Int c) {
    MPoly p;
    p.insert({0, 0, 0, 0}, std::move(c));
    return p;
}

MPoly MPoly::variable(int v) {
    Expo e{0, 0, 0, 0};
    e[v] = 1;
    return monomial(e, 1);
}

MPoly MPoly::monomial(Expo e, Int c) {
    MPoly p;
    p.insert(e, std::move(c));
    return p;
}

int MPoly::degree(int v) const {
    int d = is_zero() ? -1 : 0;
    for (auto& [e, c] : terms_) d = std::max(d, e[v]);
    return d;
}

MPoly MPoly::coeff_wrt(int v, int k) const {
    MPoly r;
    for (auto& [e, c] : terms_) {
        if (e[v] != k) continue;
        Expo e2 = e;
        e2[v] = 0;
        r.insert(e2, c);
    }
    return r;
}

std::vector<MPoly> MPoly::coeffs_wrt(int v) const {
    std::vector<MPoly> r(std::max(degree(v), 0) + 1);
    for (auto& [e, c] : terms_) {
        Expo e2 = e;
        e2[v] = 0;
        r[e[v]].insert(e2, c);
    }
    return r;
}

MPoly MPoly::assemble(int v, const std::vector<MPoly>& coeffs) {
    MPoly r;
    for (size_t k = 0; k < coeffs.size(); ++k)
        for (auto& [e, c] : coeffs[k].terms_) {
            Expo e2 = e;
            e2[v] += static_cast<int>(k);
            r.insert(e2, c);
        }
    return r;
}

MPoly MPoly::derivative(int v) const {
    MPoly r;
    for (auto& [e, c] : terms_) {
        if (e[v] == 0) continue;
        Expo e2 = e;
        e2[v] -= 1;
        r.insert(e2, Int(e[v]) * c);
    }
    return r;
}

MPoly MPoly::subst(int v, const MPoly& value) const {
    auto cs = coeffs_wrt(v);
    MPoly acc;  // Horner
    for (int k = static_cast<int>(cs.size()) - 1; k >= 0; --k)
        acc = acc * value + cs[k];
    return acc;
}

Int MPoly::int_content() const {
    Int g = 0;
    for (auto& [e, c] : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

MPoly operator+(const MPoly& a, const MPoly& b) {
    MPoly r = a;
    for (auto& [e, c] : b.terms_) r.insert(e, c);
    return r;
}

MPoly operator-(const MPoly& a, const MPoly& b) {
    MPoly r = a;
    for (auto& [e, c] : b.terms_) r.insert(e, -c);
    return r;
}

MPoly operator-(const MPoly& a) {
    MPoly r;
    for (auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
    return r;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly r;
    for (auto& [ea, ca] : a.terms_)
        for (auto& [eb, cb] : b.terms_) {
            MPoly::Expo e;
            for (int i = 0; i < MPoly::kNumVars; ++i) e[i] = ea[i] + eb[i];
            r.insert(e, ca * cb);
        }
    return r;
}

MPoly operator*(const Int& s, const MPoly& a) {
    if (s == 0) return MPoly();
    MPoly r;
    for (auto& [e, c] : a.terms_) r.terms_.emplace(e, s * c);
    return r;
}

MPoly MPoly::pow(int e) const {
    MPoly r = constant(1);
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
}

MPoly MPoly::div_exact(const MPoly& d) const {
    assert(!d.is_zero());
    MPoly rem = *this;
    MPoly q;
    auto lt = d.terms_.rbegin();  // lex-leading term of the divisor
    while (!rem.is_zero()) {
        auto rt = rem.terms_.rbegin();
        Expo e;
        for (int i = 0; i < kNumVars; ++i) {
            e[i] = rt->first[i] - lt->first[i];
            assert(e[i] >= 0 && "not an exact multivariate division");
        }
        assert(rt->second % lt->second == 0 &&
               "not an exact multivariate division");
        MPoly m = monomial(e, rt->second / lt->second);
        q += m;
        rem -= m * d;
    }
    return q;
}

MPoly MPoly::strip_monomials() const {
    if (is_zero()) return MPoly();
    Expo mins = terms_.begin()->first;
    for (auto& [e, c] : terms_)
        for (int i = 0; i < kNumVars; ++i) mins[i] = std::min(mins[i], e[i]);
    Int g = int_content();
    MPoly r;
    for (auto& [e, c] : terms_) {
        Expo e2;
        for (int i = 0; i < kNumVars; ++i) e2[i] = e[i] - mins[i];
        r.terms_.emplace(e2, c / g);
    }
    return r;
}

std::string MPoly::str(const std::array<const char*, kNumVars>& names) const {
    if (is_zero()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        if (!s.empty()) s += (c > 0 ? " + " : " - ");
        else if (c < 0) s += "-";
        Int a = abs(c);
        bool any = false;
        std::string mono;
        for (int i = 0; i < kNumVars; ++i) {
            if (e[i] == 0) continue;
            if (any) mono += "*";
            mono += names[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
            any = true;
        }
        if (a != 1 || !any) {
            s += a.get_str();
            if (any) s += "*";
        }
        s += mono;
    }
    return s;
}

namespace {

// prem(A, B) = rem(lc(B)^(degA - degB + 1) * A, B), computed on dense
// coefficient lists in the eliminated variable.
std::vector<MPoly> prem(std::vector<MPoly> a, const std::vector<MPoly>& b) {
    const int db = static_cast<int>(b.size()) - 1;
    const MPoly& lb = b.back();
    int delta = static_cast<int>(a.size()) - 1 - db;
    for (int i = delta; i >= 0; --i) {
        MPoly top = a[i + db];
        for (auto& c : a) c = c * lb;
        for (int j = 0; j <= db; ++j) a[i + j] -= top * b[j];
    }
    a.resize(db);
    while (!a.empty() && a.back().is_zero()) a.pop_back();
    return a;
}

}  // namespace

MPoly resultant(const MPoly& a, const MPoly& b, int v) {
    if (a.is_zero() || b.is_zero()) return MPoly();
    int da = a.degree(v), db = b.degree(v);
    if (da == 0 && db == 0) return MPoly::constant(1);
    if (da == 0) return a.pow(db);
    if (db == 0) return b.pow(da);

    std::vector<MPoly> A = a.coeffs_wrt(v), B = b.coeffs_wrt(v);
    Int s = 1;
    if (da < db) {
        std::swap(A, B);
        std::swap(da, db);
        if ((da & 1) && (db & 1)) s = -s;
    }
    MPoly g = MPoly::constant(1), h = MPoly::constant(1);
    for (;;) {
        int dA = static_cast<int>(A.size()) - 1;
        int dB = static_cast<int>(B.size()) - 1;
        int delta = dA - dB;
        if ((dA & 1) && (dB & 1)) s = -s;
        std::vector<MPoly> R = prem(A, B);
        A = std::move(B);
        if (R.empty()) return MPoly();  // common factor in v
        MPoly divisor = g * h.pow(delta);
        B.clear();
        for (auto& c : R) B.push_back(c.div_exact(divisor));
        g = A.back();
        h = delta == 0 ? h : g.pow(delta).div_exact(h.pow(delta - 1));
        if (static_cast<int>(B.size()) - 1 > 0) continue;
        int dlast = static_cast<int>(A.size()) - 1;
        MPoly hp = B.back().pow(dlast);
        if (dlast > 1) hp = hp.div_exact(h.pow(dlast - 1));
        return s * hp;
    }
}

}  // namespace trideg
