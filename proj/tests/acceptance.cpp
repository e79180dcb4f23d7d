// Acceptance suite: one pass/fail line per criterion, each with its own
// runtime budget. Usage: acceptance <path-to-appendix-data>.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "trideg/appendix.hpp"
#include "trideg/asymptotics.hpp"
#include "trideg/census.hpp"
#include "trideg/equations.hpp"
#include "trideg/lagrange.hpp"
#include "trideg/sturm.hpp"
#include "trideg/trisystem.hpp"

using namespace trideg;

namespace {

struct Criterion {
    int number;
    std::string title;
    double budget_seconds;
    std::function<bool(std::string&)> body;
};

bool prefix_equals(const USeries& s, int from, std::vector<long> expect,
                   std::string& note) {
    for (size_t i = 0; i < expect.size(); ++i) {
        int n = from + static_cast<int>(i);
        if (n >= s.order() || s.coeff(n) != expect[i]) {
            note = "coefficient mismatch at order " + std::to_string(n);
            return false;
        }
    }
    return true;
}

const Rat kWidth12(Int(1), Int("1000000000000000"));  // 10^-15

}  // namespace

int main(int argc, char** argv) {
    const std::string data =
        argc > 1 ? argv[1] : "data/appendix_polynomials.txt";
    AppendixData app = AppendixData::load(data);

    std::vector<Criterion> criteria;

    criteria.push_back({1, "G* expansion t^2..t^9", 1.0, [](std::string& note) {
        CensusSeries g = extract(CensusTag::G, solve_T(3 * 10 + 1));
        return prefix_equals(derive_gstar(g).series, 2,
                             {1, 3, 19, 128, 909, 6737, 51683, 407802}, note);
    }});

    criteria.push_back({2, "H* expansion t^4..t^11", 1.0, [](std::string& note) {
        CensusSeries h = extract(CensusTag::H, solve_U(3 * 12 + 1));
        return prefix_equals(derive_hstar(h).series, 4,
                             {1, 3, 12, 59, 325, 1875, 11029, 65607}, note);
    }});

    criteria.push_back({3, "K expansion t^10..t^17 at z-order 54", 10.0,
                        [](std::string& note) {
        CensusSeries k = extract(CensusTag::K, solve_V(55));
        return prefix_equals(k.series, 10,
                             {1, 8, 45, 209, 890, 3600, 14115, 54306}, note);
    }});

    criteria.push_back({4, "algebraic residuals of F, G, H, K mod t^40", 60.0,
                        [&app](std::string& note) {
        const int z = 3 * 41 + 1;
        struct Row {
            const char* name;
            USeries s;
            BiPoly eq;
        };
        std::vector<Row> rows;
        rows.push_back({"F", extract(CensusTag::F, solve_S(z)).series, eq_F()});
        rows.push_back({"G", extract(CensusTag::G, solve_T(z)).series, eq_G()});
        rows.push_back({"H", extract(CensusTag::H, solve_U(z)).series, eq_H()});
        rows.push_back({"K", extract(CensusTag::K, solve_V(z)).series,
                        app.k_equation()});
        for (const Row& r : rows) {
            if (r.s.order() < 40) {
                note = std::string(r.name) + " series too short";
                return false;
            }
            ResidualReport rep = verify_algebraic(r.eq, r.s);
            if (!rep.ok) {
                note = std::string(r.name) + " residual nonzero at t^" +
                       std::to_string(rep.first_bad_order);
                return false;
            }
        }
        return true;
    }});

    criteria.push_back({5, "elimination golden tests (S, T, U systems)", 300.0,
                        [](std::string& note) {
        const int z = 40;
        SolvedFamily s = solve_S(z), t = solve_T(z), u = solve_U(z);
        BiPoly es = eliminate_quadratic(TriSystem::make(FamilyTag::S), s.w0);
        if (!es.equivalent(eq_S0())) { note = "S eliminant"; return false; }
        BiPoly et = eliminate_quadratic(TriSystem::make(FamilyTag::T), t.w0);
        if (!et.equivalent(eq_T0())) { note = "T eliminant"; return false; }
        if (!digon_substitute(et).equivalent(eq_G())) {
            note = "T eliminant after digon substitution";
            return false;
        }
        BiPoly eu = eliminate_quadratic(TriSystem::make(FamilyTag::U), u.w0);
        if (!digon_substitute(eu).equivalent(eq_H())) {
            note = "U eliminant after digon substitution";
            return false;
        }
        return true;
    }});

    criteria.push_back({6, "dominant singularities certified to 1e-12", 60.0,
                        [&app](std::string& note) {
        UPoly rf = singular_candidates(eq_F());
        RootInterval ivf = smallest_positive_root(rf, kWidth12);
        if (rf.eval(Rat(2, 27)) != 0 || ivf.lo >= Rat(2, 27) ||
            Rat(2, 27) > ivf.hi) {
            note = "1/rho_F is not exactly 13.5";
            return false;
        }
        RootInterval ivg =
            smallest_positive_root(singular_candidates(eq_G()), kWidth12);
        if (std::abs(ivg.midpoint() - (3.0 * std::sqrt(3.0) - 5.0) / 2.0) >=
            1e-12) {
            note = "rho_G off (3*sqrt(3)-5)/2";
            return false;
        }
        RootInterval ivh =
            smallest_positive_root(singular_candidates(eq_H()), kWidth12);
        RootInterval ivh_pub = smallest_positive_root(app.r_h(), kWidth12);
        if (std::abs(ivh.midpoint() - ivh_pub.midpoint()) >= 1e-12 ||
            std::abs(1.0 / ivh.midpoint() - 7.03) >= 0.005) {
            note = "rho_H off the appendix polynomial";
            return false;
        }
        RootInterval ivk = smallest_positive_root(
            singular_candidates(app.k_equation()), kWidth12);
        RootInterval ivk_pub = smallest_positive_root(app.r_k(), kWidth12);
        if (std::abs(ivk.midpoint() - ivk_pub.midpoint()) >= 1e-12 ||
            std::abs(1.0 / ivk.midpoint() - 4.06) >= 0.005) {
            note = "rho_K off the appendix polynomial";
            return false;
        }
        return true;
    }});

    criteria.push_back({7, "property suites (chains, identities, Lagrange, "
                           "exponents, G*/G limit)", 600.0,
                        [&app](std::string& note) {
        const int z = 3 * 41 + 1;
        SolvedFamily s = solve_S(z), t = solve_T(z), u = solve_U(z),
                     v = solve_V(z);
        if (!dominated_by(v.series, u.series) ||
            !dominated_by(u.series, t.series) ||
            !dominated_by(t.series, s.series) || !nonnegative(s.series)) {
            note = "bivariate containment chain";
            return false;
        }
        USeries f = extract(CensusTag::F, s).series;
        USeries g = extract(CensusTag::G, t).series;
        USeries h = extract(CensusTag::H, u).series;
        USeries k = extract(CensusTag::K, v).series;
        if (!dominated_by(k, h) || !dominated_by(h, g) ||
            !dominated_by(g, f) || !nonnegative(f)) {
            note = "census containment chain";
            return false;
        }
        if (!identity_suite(v, z, /*hard_fail=*/false)) {
            note = "minimum-degree-five identity suite";
            return false;
        }
        if (!hstar_derivation_check(h.truncated(40), /*hard_fail=*/false)) {
            note = "H* derivation chain";
            return false;
        }
        if (!check_parametrization(CensusTag::F, f.truncated(31), false) ||
            !check_parametrization(CensusTag::G, g.truncated(31), false)) {
            note = "Lagrangean parametrization of F or G";
            return false;
        }
        CensusSeries gfull{CensusTag::G, g, g.order(), z};
        if (!check_parametrization(CensusTag::Gstar,
                                   derive_gstar(gfull).series.truncated(31),
                                   false)) {
            note = "Lagrangean parametrization of G*";
            return false;
        }
        // Exponent -5/2 per family from >= 100 coefficients.
        struct Fit {
            CensusTag tag;
            BiPoly eq;
            UPoly rpoly;
        };
        std::vector<Fit> fits;
        fits.push_back({CensusTag::F, eq_F(), singular_candidates(eq_F())});
        fits.push_back({CensusTag::G, eq_G(), singular_candidates(eq_G())});
        fits.push_back({CensusTag::H, eq_H(), app.r_h()});
        fits.push_back({CensusTag::K, app.k_equation(), app.r_k()});
        for (const Fit& ft : fits) {
            double rho =
                smallest_positive_root(ft.rpoly, kWidth12).midpoint();
            CensusSeries lng = from_equation(ft.tag, ft.eq, 260);
            AsymptoticFit fit = fit_growth(lng.series, rho);
            if (fit.terms_used < 100 ||
                std::abs(fit.exponent - (-2.5)) >= 0.1) {
                note = std::string(census_name(ft.tag)) +
                       " exponent off -5/2: " + std::to_string(fit.exponent);
                return false;
            }
        }
        // g*_n / g_n -> 6 - 3 sqrt 3 within 1e-2 at order 100.
        CensusSeries glong = from_equation(CensusTag::G, eq_G(), 101);
        CensusSeries gstar = derive_gstar(glong);
        double dev = tail_ratio_deviation(gstar.series, glong.series,
                                          6.0 - 3.0 * std::sqrt(3.0));
        if (dev >= 1e-2) {
            note = "G*/G ratio deviation " + std::to_string(dev);
            return false;
        }
        return true;
    }});

    criteria.push_back({8, "lambda estimates stable (drift < 1%)", 600.0,
                        [&app](std::string& note) {
        struct Fit {
            CensusTag tag;
            BiPoly eq;
            UPoly rpoly;
        };
        std::vector<Fit> fits;
        fits.push_back({CensusTag::F, eq_F(), singular_candidates(eq_F())});
        fits.push_back({CensusTag::G, eq_G(), singular_candidates(eq_G())});
        fits.push_back({CensusTag::H, eq_H(), app.r_h()});
        fits.push_back({CensusTag::K, app.k_equation(), app.r_k()});
        for (const Fit& ft : fits) {
            double rho =
                smallest_positive_root(ft.rpoly, kWidth12).midpoint();
            CensusSeries lng = from_equation(ft.tag, ft.eq, 320);
            AsymptoticFit fit = fit_growth(lng.series, rho);
            std::printf("  lambda_%s = %.6g +- %.2g (drift %.3g%%)\n",
                        census_name(ft.tag), fit.lambda,
                        fit.lambda_drift * std::abs(fit.lambda),
                        100.0 * fit.lambda_drift);
            if (!(fit.lambda > 0) || fit.lambda_drift >= 0.01) {
                note = std::string(census_name(ft.tag)) + " drift " +
                       std::to_string(100.0 * fit.lambda_drift) + "%";
                return false;
            }
        }
        return true;
    }});

    int failures = 0;
    for (const Criterion& c : criteria) {
        std::string note;
        bool ok = false;
        auto start = std::chrono::steady_clock::now();
        try {
            ok = c.body(note);
        } catch (const std::exception& e) {
            note = e.what();
        }
        double elapsed = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - start)
                             .count();
        if (ok && elapsed > c.budget_seconds) {
            ok = false;
            note = "over budget (" + std::to_string(c.budget_seconds) + "s)";
        }
        std::printf("%s criterion %d: %s (%.2fs)%s%s\n",
                    ok ? "PASS" : "FAIL", c.number, c.title.c_str(), elapsed,
                    note.empty() ? "" : " -- ", note.c_str());
        std::fflush(stdout);
        if (!ok) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
