#include "trideg/upoly.hpp"

#include <algorithm>

namespace trideg {

UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<Int> r(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return UPoly(std::move(r));
}

UPoly operator-(const UPoly& a, const UPoly& b) {
    std::vector<Int> r(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
    return UPoly(std::move(r));
}

UPoly operator-(const UPoly& a) {
    std::vector<Int> r(a.c_.size());
    for (size_t i = 0; i < a.c_.size(); ++i) r[i] = -a.c_[i];
    return UPoly(std::move(r));
}

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    std::vector<Int> r(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(r));
}

UPoly operator*(const Int& s, const UPoly& a) {
    if (s == 0) return UPoly();
    std::vector<Int> r(a.c_.size());
    for (size_t i = 0; i < a.c_.size(); ++i) r[i] = s * a.c_[i];
    return UPoly(std::move(r));
}

UPoly UPoly::shifted(int k) const {
    if (is_zero()) return UPoly();
    std::vector<Int> r(c_.size() + k);
    for (size_t i = 0; i < c_.size(); ++i) r[i + k] = c_[i];
    return UPoly(std::move(r));
}

UPoly UPoly::derivative() const {
    if (c_.size() <= 1) return UPoly();
    std::vector<Int> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = Int(i) * c_[i];
    return UPoly(std::move(r));
}

Int UPoly::content() const {
    Int g = 0;
    for (const Int& c : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

UPoly UPoly::normalized() const {
    if (is_zero()) return UPoly();
    Int g = content();
    if (lc() < 0) g = -g;
    std::vector<Int> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] / g;
    return UPoly(std::move(r));
}

UPoly UPoly::div_exact(const UPoly& d) const {
    assert(!d.is_zero());
    if (is_zero()) return UPoly();
    assert(degree() >= d.degree());
    std::vector<Int> rem = c_;
    std::vector<Int> q(c_.size() - d.c_.size() + 1);
    for (int i = static_cast<int>(q.size()) - 1; i >= 0; --i) {
        Int& top = rem[i + d.degree()];
        assert(top % d.lc() == 0 && "not an exact division");
        q[i] = top / d.lc();
        if (q[i] == 0) continue;
        for (int j = 0; j <= d.degree(); ++j) rem[i + j] -= q[i] * d.c_[j];
    }
    for (const Int& c : rem) assert(c == 0 && "not an exact division");
    (void)rem;
    return UPoly(std::move(q));
}

bool UPoly::divides(const UPoly& other) const {
    if (other.is_zero()) return true;
    if (is_zero() || other.degree() < degree()) return false;
    std::vector<Int> rem = other.c_;
    for (int i = other.degree() - degree(); i >= 0; --i) {
        Int& top = rem[i + degree()];
        if (top % lc() != 0) return false;
        Int q = top / lc();
        if (q == 0) continue;
        for (int j = 0; j <= degree(); ++j) rem[i + j] -= q * c_[j];
    }
    return std::all_of(rem.begin(), rem.end(),
                       [](const Int& c) { return c == 0; });
}

int UPoly::sign_at(const Rat& x) const {
    if (is_zero()) return 0;
    const Int& num = x.get_num();
    const Int& den = x.get_den();
    // sum c_i num^i den^(deg - i)
    Int acc = 0;
    Int np = 1;
    std::vector<Int> numpow(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) {
        numpow[i] = np;
        np *= num;
    }
    Int dp = 1;
    for (int i = degree(); i >= 0; --i) {
        acc += c_[i] * numpow[i] * dp;
        dp *= den;
    }
    return sgn(acc);
}

Rat UPoly::eval(const Rat& x) const {
    Rat acc = 0;
    for (int i = degree(); i >= 0; --i) acc = acc * x + Rat(c_[i]);
    acc.canonicalize();
    return acc;
}

double UPoly::eval_double(double x) const {
    double acc = 0;
    for (int i = degree(); i >= 0; --i) acc = acc * x + c_[i].get_d();
    return acc;
}

std::string UPoly::str() const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
        if (c_[i] == 0) continue;
        if (!s.empty()) s += (c_[i] > 0 ? " + " : " - ");
        else if (c_[i] < 0) s += "-";
        Int a = abs(c_[i]);
        if (a != 1 || i == 0) s += a.get_str();
        if (i >= 1) s += (a != 1 ? "*t" : "t");
        if (i >= 2) s += "^" + std::to_string(i);
    }
    return s;
}

namespace {

// Pseudo-remainder: rem(lc(b)^(deg a - deg b + 1) * a, b).
UPoly prem(UPoly a, const UPoly& b) {
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
    return UPoly(std::move(r));
}

}  // namespace

UPoly gcd(const UPoly& a, const UPoly& b) {
    if (a.is_zero()) return b.normalized();
    if (b.is_zero()) return a.normalized();
    UPoly f = a.normalized(), g = b.normalized();
    if (f.degree() < g.degree()) std::swap(f, g);
    while (!g.is_zero()) {
        UPoly r = prem(f, g);
        f = g;
        g = r.is_zero() ? UPoly() : r.normalized();
    }
    return f.normalized();
}

}  // namespace trideg
