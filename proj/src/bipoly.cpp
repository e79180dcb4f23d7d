#include "trideg/bipoly.hpp"

#include <algorithm>
#include <cassert>

#include "trideg/errors.hpp"

namespace trideg {

int BiPoly::degree_t() const {
    int d = -1;
    for (const UPoly& c : yc_) d = std::max(d, c.degree());
    return d;
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
    std::vector<UPoly> r(std::max(a.yc_.size(), b.yc_.size()));
    for (size_t i = 0; i < a.yc_.size(); ++i) r[i] += a.yc_[i];
    for (size_t i = 0; i < b.yc_.size(); ++i) r[i] += b.yc_[i];
    return BiPoly(std::move(r));
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) {
    std::vector<UPoly> r(std::max(a.yc_.size(), b.yc_.size()));
    for (size_t i = 0; i < a.yc_.size(); ++i) r[i] += a.yc_[i];
    for (size_t i = 0; i < b.yc_.size(); ++i) r[i] -= b.yc_[i];
    return BiPoly(std::move(r));
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    if (a.is_zero() || b.is_zero()) return BiPoly();
    std::vector<UPoly> r(a.yc_.size() + b.yc_.size() - 1);
    for (size_t i = 0; i < a.yc_.size(); ++i)
        for (size_t j = 0; j < b.yc_.size(); ++j)
            r[i + j] += a.yc_[i] * b.yc_[j];
    return BiPoly(std::move(r));
}

BiPoly operator*(const Int& s, const BiPoly& a) {
    std::vector<UPoly> r(a.yc_.size());
    for (size_t i = 0; i < a.yc_.size(); ++i) r[i] = s * a.yc_[i];
    return BiPoly(std::move(r));
}

BiPoly BiPoly::derivative_y() const {
    if (yc_.size() <= 1) return BiPoly();
    std::vector<UPoly> r(yc_.size() - 1);
    for (size_t i = 1; i < yc_.size(); ++i) r[i - 1] = Int(i) * yc_[i];
    return BiPoly(std::move(r));
}

Int BiPoly::int_content() const {
    Int g = 0;
    for (const UPoly& c : yc_) {
        Int cc = c.content();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), cc.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

BiPoly BiPoly::canonical() const {
    if (is_zero()) return BiPoly();
    Int g = int_content();
    if (yc_.back().lc() < 0) g = -g;
    std::vector<UPoly> r(yc_.size());
    UPoly divisor{g};
    for (size_t i = 0; i < yc_.size(); ++i)
        if (!yc_[i].is_zero()) r[i] = yc_[i].div_exact(divisor);
    return BiPoly(std::move(r));
}

UPoly BiPoly::content_y() const {
    UPoly g;
    for (const UPoly& c : yc_) {
        g = gcd(g, c);
        if (g.degree() == 0 && g.lc() == 1) break;
    }
    return g;
}

BiPoly BiPoly::primitive_part_y() const {
    if (is_zero()) return BiPoly();
    UPoly g = content_y();
    std::vector<UPoly> r(yc_.size());
    for (size_t i = 0; i < yc_.size(); ++i)
        if (!yc_[i].is_zero()) r[i] = yc_[i].div_exact(g);
    return BiPoly(std::move(r));
}

MPoly BiPoly::to_mpoly() const {
    MPoly r;
    for (size_t i = 0; i < yc_.size(); ++i)
        for (int j = 0; j <= yc_[i].degree(); ++j)
            r += MPoly::monomial({static_cast<int>(i), j, 0, 0},
                                 yc_[i].coeff(j));
    return r;
}

BiPoly BiPoly::from_mpoly(const MPoly& p) {
    assert(!p.depends_on(2) && !p.depends_on(3));
    std::vector<UPoly> r(static_cast<size_t>(std::max(p.degree(0), 0)) + 1);
    for (auto& [e, c] : p.terms()) {
        std::vector<Int> mono(e[1] + 1);
        mono[e[1]] = c;
        r[e[0]] += UPoly(std::move(mono));
    }
    return BiPoly(std::move(r));
}

std::string BiPoly::str() const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = degree_y(); i >= 0; --i) {
        if (yc_[i].is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += "(" + yc_[i].str() + ")";
        if (i >= 1) s += "*y";
        if (i >= 2) s += "^" + std::to_string(i);
    }
    return s;
}

namespace {

USeries us_from_upoly(const UPoly& p, int order) {
    USeries r(order);
    for (int i = 0; i <= p.degree() && i < order; ++i) r.coeff(i) = p.coeff(i);
    return r;
}

USeries eval_at(const BiPoly& q, const USeries& y) {
    const int order = y.order();
    USeries acc(order);
    for (int i = q.degree_y(); i >= 0; --i)
        acc = acc * y + us_from_upoly(q.coeff_y(i), order);
    return acc;
}

}  // namespace

ResidualReport verify_algebraic(const BiPoly& q, const USeries& s) {
    USeries r = eval_at(q, s);
    for (int n = 0; n < r.order(); ++n)
        if (r.coeff(n) != 0) return {false, n};
    return {true, -1};
}

void require_algebraic(const BiPoly& q, const USeries& s) {
    ResidualReport rep = verify_algebraic(q, s);
    if (!rep.ok) throw ResidualNonzero(rep.first_bad_order);
}

UPoly resultant_y(const BiPoly& a, const BiPoly& b) {
    MPoly r = resultant(a.to_mpoly(), b.to_mpoly(), 0);
    assert(!r.depends_on(0));
    BiPoly as_bipoly = BiPoly::from_mpoly(r);
    assert(as_bipoly.degree_y() <= 0);
    return as_bipoly.coeff_y(0);
}

UPoly discriminant_y(const BiPoly& q) {
    const int d = q.degree_y();
    assert(d >= 1);
    UPoly res = resultant_y(q, q.derivative_y());
    UPoly disc = res.div_exact(q.lc_y());
    if ((d * (d - 1) / 2) % 2 != 0) disc = -disc;
    return disc;
}

UPoly singular_candidates(const BiPoly& q) {
    return (q.lc_y() * discriminant_y(q)).normalized();
}

namespace {

// prem in y over Z[t] coefficient lists, lowest first.
std::vector<UPoly> prem_y(std::vector<UPoly> a, const std::vector<UPoly>& b) {
    const int db = static_cast<int>(b.size()) - 1;
    const UPoly& lb = b.back();
    int delta = static_cast<int>(a.size()) - 1 - db;
    for (int i = delta; i >= 0; --i) {
        UPoly top = a[i + db];
        for (auto& c : a) c = c * lb;
        for (int j = 0; j <= db; ++j) a[i + j] -= top * b[j];
    }
    a.resize(db);
    while (!a.empty() && a.back().is_zero()) a.pop_back();
    return a;
}

std::vector<UPoly> coeff_list(const BiPoly& p) {
    std::vector<UPoly> r(p.degree_y() + 1);
    for (int i = 0; i <= p.degree_y(); ++i) r[i] = p.coeff_y(i);
    return r;
}

}  // namespace

BiPoly gcd_y(const BiPoly& a, const BiPoly& b) {
    if (a.is_zero()) return b.canonical();
    if (b.is_zero()) return a.canonical();
    UPoly cont = gcd(a.content_y(), b.content_y());
    BiPoly f = a.primitive_part_y();
    BiPoly g = b.primitive_part_y();
    if (f.degree_y() < g.degree_y()) std::swap(f, g);
    // Primitive remainder sequence in y.
    while (!g.is_zero() && g.degree_y() >= 1) {
        std::vector<UPoly> r = prem_y(coeff_list(f), coeff_list(g));
        f = std::move(g);
        g = BiPoly(std::move(r)).primitive_part_y();
    }
    if (!g.is_zero()) f = BiPoly({cont});  // coprime in y
    else {
        std::vector<UPoly> scaled = coeff_list(f);
        for (auto& c : scaled) c = c * cont;
        f = BiPoly(std::move(scaled));
    }
    return f.canonical();
}

USeries us_solve_algebraic(const BiPoly& q, int order) {
    assert(order >= 1);
    if (q.coeff_y(0).coeff(0) != 0) throw NoSeriesRoot();
    const BiPoly dq = q.derivative_y();
    USeries y(1);  // y(0) = 0
    int prec = 1;
    while (prec < order) {
        prec = std::min(2 * prec, order);
        USeries yw(prec, y.coeffs());
        USeries correction = eval_at(q, yw) * eval_at(dq, yw).inverse();
        y = yw - correction;
    }
    return y;
}

BiPoly digon_substitute(const BiPoly& q_in_z) {
    const int d = q_in_z.degree_y();
    if (q_in_z.is_zero()) return BiPoly();
    // q(z + z*y', z) = sum_i c_i(z) z^i (1 + y')^i:
    // new coefficient of y'^j is sum_{i >= j} C(i, j) c_i(z) z^i.
    std::vector<std::vector<Int>> binom(d + 1);
    for (int i = 0; i <= d; ++i) {
        binom[i].assign(i + 1, 1);
        for (int j = 1; j < i; ++j)
            binom[i][j] = binom[i - 1][j - 1] + binom[i - 1][j];
    }
    std::vector<UPoly> out(d + 1);
    for (int i = 0; i <= d; ++i) {
        UPoly shifted = q_in_z.coeff_y(i).shifted(i);
        for (int j = 0; j <= i; ++j) out[j] += binom[i][j] * shifted;
    }
    BiPoly sub{std::move(out)};
    // Strip the common z-power, then require support on multiples of 3.
    int low = -1;
    for (int i = 0; i <= sub.degree_y(); ++i) {
        const UPoly& c = sub.coeff_y(i);
        for (int j = 0; j <= c.degree(); ++j)
            if (c.coeff(j) != 0 && (low < 0 || j < low)) low = j;
    }
    assert(low >= 0);
    std::vector<UPoly> mapped(sub.degree_y() + 1);
    for (int i = 0; i <= sub.degree_y(); ++i) {
        const UPoly& c = sub.coeff_y(i);
        std::vector<Int> tc;
        for (int j = low; j <= c.degree(); ++j) {
            if (c.coeff(j) == 0) continue;
            if ((j - low) % 3 != 0) throw BadSupport(j);
            int k = (j - low) / 3;
            if (static_cast<int>(tc.size()) <= k) tc.resize(k + 1);
            tc[k] = c.coeff(j);
        }
        mapped[i] = UPoly(std::move(tc));
    }
    return BiPoly(std::move(mapped));
}

}  // namespace trideg
