// Command-line driver: compute coefficient tables, verify the algebraic
// cross-checks, isolate singularities and fit asymptotics, and print the
// eliminants derived from the catalytic systems.
//
// Exit codes: 0 success, 1 failed verification, 2 configuration error,
// 3 internal identity violation.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <future>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "trideg/appendix.hpp"
#include "trideg/asymptotics.hpp"
#include "trideg/census.hpp"
#include "trideg/equations.hpp"
#include "trideg/lagrange.hpp"
#include "trideg/sturm.hpp"
#include "trideg/trisystem.hpp"

namespace {

using namespace trideg;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitConfig = 2;
constexpr int kExitInternal = 3;

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Format { Text, Csv, Json };

struct RunConfig {
    std::vector<std::string> families;
    int order = -1;  // t-order (or z-order for S,T,U,V tables)
    Format format = Format::Text;
    int digits = 15;
    int threads = 1;
    std::string data_path;
    bool eliminate = false;
};

const std::vector<std::string> kAllFamilies = {
    "S", "T", "U", "V", "F", "G", "H", "K", "Gstar", "Hstar"};

bool is_z_family(const std::string& f) {
    return f == "S" || f == "T" || f == "U" || f == "V";
}

Format parse_format(const std::string& s) {
    if (s == "text") return Format::Text;
    if (s == "csv") return Format::Csv;
    if (s == "json") return Format::Json;
    throw ConfigError("unknown format '" + s + "' (expected json|csv|text)");
}

void check_family(const std::string& f) {
    for (const auto& k : kAllFamilies)
        if (k == f) return;
    throw ConfigError("unknown family '" + f + "'");
}

// Plain-text config file: `key = value` lines, '#' comments. Flags given on
// the command line take precedence; unknown keys are a configuration error.
void apply_config_file(const std::string& path, RunConfig& cfg,
                       const CLI::App* cmd) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file '" + path + "'");
    auto given = [&](const std::string& flag) {
        auto* opt = cmd->get_option_no_throw(flag);
        return opt != nullptr && opt->count() > 0;
    };
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto notspace = [](unsigned char c) { return !std::isspace(c); };
        auto trim = [&](std::string s) {
            s.erase(s.begin(), std::find_if(s.begin(), s.end(), notspace));
            s.erase(std::find_if(s.rbegin(), s.rend(), notspace).base(),
                    s.end());
            return s;
        };
        if (trim(line).empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(lineno) +
                              ": expected 'key = value'");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key == "family") {
            if (given("--family")) continue;
            cfg.families.clear();
            std::stringstream ss(value);
            std::string item;
            while (std::getline(ss, item, ',')) {
                item = trim(item);
                if (!item.empty()) cfg.families.push_back(item);
            }
        } else if (key == "order") {
            if (!given("--order")) cfg.order = std::stoi(value);
        } else if (key == "format") {
            if (!given("--format")) cfg.format = parse_format(value);
        } else if (key == "digits") {
            if (!given("--digits")) cfg.digits = std::stoi(value);
        } else if (key == "threads") {
            if (!given("--threads")) cfg.threads = std::stoi(value);
        } else if (key == "data") {
            if (!given("--data")) cfg.data_path = value;
        } else {
            throw ConfigError("config line " + std::to_string(lineno) +
                              ": unknown key '" + key + "'");
        }
    }
}

void validate(const RunConfig& cfg) {
    if (cfg.order < 1) throw ConfigError("order must be ≥ 1");
    if (cfg.digits < 6 || cfg.digits > 200)
        throw ConfigError("digits must be in [6, 200]");
    if (cfg.threads < 1) throw ConfigError("threads must be ≥ 1");
    for (const auto& f : cfg.families) check_family(f);
    if (cfg.families.empty()) throw ConfigError("no family selected");
}

AppendixData load_data(const RunConfig& cfg, const char* argv0) {
    if (!cfg.data_path.empty()) return AppendixData::load(cfg.data_path);
    if (const char* env = std::getenv("TRIDEG_DATA"))
        return AppendixData::load(env);
    return AppendixData::locate(argv0);
}

// Run one job per family, optionally in parallel; emission order is the
// request order, so output is byte-identical for any thread count.
std::vector<std::string> run_ordered(
    const std::vector<std::function<std::string()>>& jobs, int threads) {
    std::vector<std::string> out(jobs.size());
    if (threads <= 1) {
        for (size_t i = 0; i < jobs.size(); ++i) out[i] = jobs[i]();
        return out;
    }
    std::vector<std::future<std::string>> fs;
    fs.reserve(jobs.size());
    for (const auto& j : jobs) fs.push_back(std::async(std::launch::async, j));
    for (size_t i = 0; i < fs.size(); ++i) out[i] = fs[i].get();
    return out;
}

// ---------------------------------------------------------------- compute

/// Coefficient table of one family: entries for powers 0..order inclusive.
/// t-families come from the map decomposition (z-order 3(order+1)+1);
/// z-families are the digon series W(0, z) themselves.
USeries family_table(const std::string& fam, int order) {
    if (is_z_family(fam)) {
        FamilyTag tag = fam == "S"   ? FamilyTag::S
                        : fam == "T" ? FamilyTag::T
                        : fam == "U" ? FamilyTag::U
                                     : FamilyTag::V;
        return solve_family(tag, order + 1).w0;
    }
    const int zorder = 3 * (order + 1) + 1;
    if (fam == "F") return extract(CensusTag::F, solve_S(zorder)).series;
    if (fam == "G") return extract(CensusTag::G, solve_T(zorder)).series;
    if (fam == "H") return extract(CensusTag::H, solve_U(zorder)).series;
    if (fam == "K") return extract(CensusTag::K, solve_V(zorder)).series;
    if (fam == "Gstar")
        return derive_gstar(extract(CensusTag::G, solve_T(zorder))).series;
    return derive_hstar(extract(CensusTag::H, solve_U(zorder))).series;
}

std::string emit_table(const std::string& fam, const USeries& s, int order,
                       Format format, bool last) {
    std::ostringstream os;
    switch (format) {
        case Format::Json:
            // Stable schema: {"family","order","coefficients":[decimal
            // strings]}, powers 0..order inclusive.
            os << "  {\n    \"family\": \"" << fam << "\",\n"
               << "    \"order\": " << order << ",\n"
               << "    \"coefficients\": [";
            for (int n = 0; n <= order; ++n)
                os << (n ? ", " : "") << '"' << s.coeff(n).get_str() << '"';
            os << "]\n  }" << (last ? "" : ",") << "\n";
            break;
        case Format::Csv:
            os << fam << "," << order;
            for (int n = 0; n <= order; ++n) os << "," << s.coeff(n).get_str();
            os << "\n";
            break;
        case Format::Text:
            os << "# family=" << fam << " order=" << order << "\n";
            for (int n = 0; n <= order; ++n)
                os << n << " " << s.coeff(n).get_str() << "\n";
            break;
    }
    return os.str();
}

int cmd_compute(const RunConfig& cfg) {
    std::vector<std::function<std::string()>> jobs;
    for (size_t i = 0; i < cfg.families.size(); ++i) {
        const std::string fam = cfg.families[i];
        const bool last = i + 1 == cfg.families.size();
        jobs.push_back([fam, last, &cfg] {
            return emit_table(fam, family_table(fam, cfg.order), cfg.order,
                              cfg.format, last);
        });
    }
    auto parts = run_ordered(jobs, cfg.threads);
    if (cfg.format == Format::Json) std::cout << "[\n";
    for (const auto& p : parts) std::cout << p;
    if (cfg.format == Format::Json) std::cout << "]\n";
    return 0;
}

// ----------------------------------------------------------------- verify

struct CheckResult {
    std::string name;
    std::string family;
    bool pass;
    int first_bad_order;  // -1 when pass
    std::string detail;
};

USeries upoly_series(const UPoly& p, int order) {
    USeries r(order);
    for (int k = 0; k <= p.degree() && k < order; ++k) r.coeff(k) = p.coeff(k);
    return r;
}

USeries bipoly_residual(const BiPoly& q, const USeries& s) {
    USeries acc(s.order());
    for (int i = q.degree_y(); i >= 0; --i)
        acc = acc * s + upoly_series(q.coeff_y(i), s.order());
    return acc;
}

/// When the data-file equation fails on the computed series, try to name
/// the coefficient polynomial P_i responsible. A single corrupted term
/// delta * t^j in P_i leaves the residual equal to delta * t^j * K^i, so
/// dividing the residual by K^i must give exactly one monomial; the index
/// i for which that happens is unique because K's unit part is not.
std::string diagnose_k_corruption(const BiPoly& q, const USeries& k,
                                  const USeries& residual) {
    int val = 0;
    while (val < k.order() && k.coeff(val) == 0) ++val;
    int rval = 0;
    while (rval < residual.order() && residual.coeff(rval) == 0) ++rval;
    if (val == k.order()) return "";
    // Unit part of K: K = t^val * unit.
    USeries unit(k.order() - val);
    for (int n = 0; n < unit.order(); ++n) unit.coeff(n) = k.coeff(val + n);
    USeries unit_inv = unit.inverse();
    for (int i = 0; i <= q.degree_y(); ++i) {
        if (i * val > rval) break;
        USeries quo(residual.order() - i * val);
        for (int n = 0; n < quo.order(); ++n)
            quo.coeff(n) = residual.coeff(i * val + n);
        for (int p = 0; p < i; ++p) quo = quo * unit_inv;
        int nonzero = 0, j = -1;
        for (int n = 0; n < quo.order(); ++n)
            if (quo.coeff(n) != 0) {
                ++nonzero;
                if (j < 0) j = n;
            }
        if (nonzero == 1)
            return "suspect=P_" + std::to_string(i) +
                   " suspect_t_order=" + std::to_string(j);
    }
    return "";
}

CheckResult residual_check(const std::string& name, const std::string& fam,
                           const BiPoly& q, const USeries& s,
                           bool diagnose = false) {
    ResidualReport rep = verify_algebraic(q, s);
    CheckResult r{name, fam, rep.ok, rep.first_bad_order, ""};
    if (!rep.ok && diagnose)
        r.detail = diagnose_k_corruption(q, s, bipoly_residual(q, s));
    return r;
}

std::vector<CheckResult> verify_family(const std::string& fam,
                                       const RunConfig& cfg,
                                       const AppendixData& app) {
    std::vector<CheckResult> out;
    const int zorder = 3 * (cfg.order + 1) + 1;
    if (is_z_family(fam)) {
        FamilyTag tag = fam == "S"   ? FamilyTag::S
                        : fam == "T" ? FamilyTag::T
                        : fam == "U" ? FamilyTag::U
                                     : FamilyTag::V;
        SolvedFamily f = solve_family(tag, zorder);
        BiSeries res = equation_residual(f);
        int bad = -1;
        for (int n = 0; n < zorder && bad < 0; ++n)
            if (!res.coeff(n).is_zero()) bad = n;
        out.push_back({"equation-residual", fam, bad < 0, bad, ""});
        bool ids = identity_suite(f, zorder, /*hard_fail=*/false);
        out.push_back({"identity-suite", fam, ids, -1, ""});
        if (cfg.eliminate && tag != FamilyTag::V) {
            TriSystem sys = TriSystem::make(tag);
            BiPoly elim = eliminate_quadratic(sys, f.w0);
            if (tag == FamilyTag::S)
                out.push_back({"eliminant-golden", fam,
                               elim.equivalent(eq_S0()), -1, ""});
            if (tag == FamilyTag::T)
                out.push_back({"eliminant-golden", fam,
                               elim.equivalent(eq_T0()), -1, ""});
            BiPoly sub = digon_substitute(elim);
            const BiPoly target = tag == FamilyTag::S   ? eq_F()
                                  : tag == FamilyTag::T ? eq_G()
                                                        : eq_H();
            out.push_back(
                {"eliminant-digon", fam, sub.equivalent(target), -1, ""});
        }
        return out;
    }
    if (fam == "F") {
        USeries f = extract(CensusTag::F, solve_S(zorder)).series;
        out.push_back(residual_check("equation-residual", fam, eq_F(), f));
        out.push_back({"lagrange-parametrization", fam,
                       check_parametrization(CensusTag::F, f, false), -1, ""});
    } else if (fam == "G") {
        USeries g = extract(CensusTag::G, solve_T(zorder)).series;
        out.push_back(residual_check("equation-residual", fam, eq_G(), g));
        out.push_back({"lagrange-parametrization", fam,
                       check_parametrization(CensusTag::G, g, false), -1, ""});
    } else if (fam == "H") {
        USeries h = extract(CensusTag::H, solve_U(zorder)).series;
        out.push_back(residual_check("equation-residual", fam, eq_H(), h));
    } else if (fam == "K") {
        USeries k = extract(CensusTag::K, solve_V(zorder)).series;
        out.push_back(residual_check("equation-residual", fam,
                                     app.k_equation(), k, /*diagnose=*/true));
    } else if (fam == "Gstar") {
        CensusSeries g = extract(CensusTag::G, solve_T(zorder));
        out.push_back({"lagrange-parametrization", fam,
                       check_parametrization(CensusTag::Gstar,
                                             derive_gstar(g).series, false),
                       -1, ""});
    } else {  // Hstar
        USeries h = extract(CensusTag::H, solve_U(zorder)).series;
        out.push_back({"hstar-derivation-chain", fam,
                       hstar_derivation_check(h, false), -1, ""});
    }
    return out;
}

int cmd_verify(const RunConfig& cfg, const AppendixData& app) {
    std::vector<std::function<std::string()>> jobs;
    auto render = [](const std::vector<CheckResult>& rs) {
        std::ostringstream os;
        for (const auto& r : rs) {
            os << "check " << r.name << " family=" << r.family
               << " status=" << (r.pass ? "pass" : "fail");
            if (!r.pass && r.first_bad_order >= 0)
                os << " first_bad_order=" << r.first_bad_order;
            if (!r.detail.empty()) os << " " << r.detail;
            os << "\n";
        }
        return os.str();
    };
    std::vector<std::vector<CheckResult>> results(cfg.families.size());
    for (size_t i = 0; i < cfg.families.size(); ++i) {
        const std::string fam = cfg.families[i];
        jobs.push_back([fam, &cfg, &app, &results, i, &render] {
            results[i] = verify_family(fam, cfg, app);
            return render(results[i]);
        });
    }
    auto parts = run_ordered(jobs, cfg.threads);
    bool all = true;
    for (const auto& rs : results)
        for (const auto& r : rs) all = all && r.pass;
    for (const auto& p : parts) std::cout << p;
    std::cout << "verify " << (all ? "pass" : "FAIL") << "\n";
    return all ? 0 : kExitVerifyFailed;
}

// ------------------------------------------------------------ asymptotics

std::string decimal(const Rat& x, int digits) {
    mpf_class f(x, static_cast<mp_bitcnt_t>(digits) * 4 + 64);
    char buf[512];
    gmp_snprintf(buf, sizeof buf, "%.*Ff", digits, f.get_mpf_t());
    return buf;
}

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

int cmd_asymptotics(const RunConfig& cfg, const AppendixData& app) {
    struct Row {
        std::string fam, rho, inv_rho;
        AsymptoticFit fit;
    };
    const int order = std::max(cfg.order, 120);
    // Width several digits below the printed precision so both rho and its
    // reciprocal are correct in every displayed digit.
    Int denom = 1;
    for (int i = 0; i < cfg.digits + 6; ++i) denom *= 10;
    const Rat width(1, denom);
    std::vector<std::function<std::string()>> jobs;
    std::vector<Row> rows(cfg.families.size());
    for (size_t i = 0; i < cfg.families.size(); ++i) {
        const std::string fam = cfg.families[i];
        if (fam != "F" && fam != "G" && fam != "H" && fam != "K")
            throw ConfigError(
                "asymptotics supports families F, G, H, K (got '" + fam +
                "')");
        jobs.push_back([fam, &cfg, &app, &rows, i, order, width]() {
            // rho from the singularity polynomial: the published equations
            // for F and G, the appendix minimal polynomials for H and K
            // (the full resultants are cross-checked by `verify`).
            UPoly rpoly = fam == "F"   ? singular_candidates(eq_F())
                          : fam == "G" ? singular_candidates(eq_G())
                          : fam == "H" ? app.r_h()
                                       : app.r_k();
            RootInterval iv = smallest_positive_root(rpoly, width);
            Rat mid = (iv.lo + iv.hi) / 2;
            CensusTag tag = fam == "F"   ? CensusTag::F
                            : fam == "G" ? CensusTag::G
                            : fam == "H" ? CensusTag::H
                                         : CensusTag::K;
            const BiPoly& eq = fam == "F"   ? eq_F()
                               : fam == "G" ? eq_G()
                               : fam == "H" ? eq_H()
                                            : app.k_equation();
            CensusSeries s = from_equation(tag, eq, order);
            AsymptoticFit fit = fit_growth(s.series, mid.get_d());
            rows[i] = {fam, decimal(mid, cfg.digits),
                       decimal(Rat(1) / mid, cfg.digits), fit};
            return std::string();
        });
    }
    run_ordered(jobs, cfg.threads);
    std::ostringstream os;
    if (cfg.format == Format::Json) {
        os << "[\n";
        for (size_t i = 0; i < rows.size(); ++i) {
            const Row& r = rows[i];
            os << "  {\"family\": \"" << r.fam << "\", \"rho\": \"" << r.rho
               << "\", \"inv_rho\": \"" << r.inv_rho
               << "\", \"exponent\": " << fmt(r.fit.exponent)
               << ", \"lambda\": " << fmt(r.fit.lambda)
               << ", \"lambda_err\": "
               << fmt(r.fit.lambda_drift * std::abs(r.fit.lambda))
               << ", \"terms\": " << r.fit.terms_used << "}"
               << (i + 1 == rows.size() ? "" : ",") << "\n";
        }
        os << "]\n";
    } else {
        const char* sep = cfg.format == Format::Csv ? "," : "  ";
        os << "family" << sep << "rho" << sep << "inv_rho" << sep << "exponent"
           << sep << "lambda" << sep << "lambda_err" << sep << "terms\n";
        for (const Row& r : rows)
            os << r.fam << sep << r.rho << sep << r.inv_rho << sep
               << fmt(r.fit.exponent) << sep << fmt(r.fit.lambda) << sep
               << fmt(r.fit.lambda_drift * std::abs(r.fit.lambda)) << sep
               << r.fit.terms_used << "\n";
    }
    std::cout << os.str();
    return 0;
}

// -------------------------------------------------------------- eliminate

int cmd_eliminate(const RunConfig& cfg) {
    for (size_t i = 0; i < cfg.families.size(); ++i) {
        const std::string& fam = cfg.families[i];
        if (fam != "S" && fam != "T" && fam != "U")
            throw ConfigError("eliminate supports families S, T, U (got '" +
                              fam + "')");
        FamilyTag tag = fam == "S"   ? FamilyTag::S
                        : fam == "T" ? FamilyTag::T
                                     : FamilyTag::U;
        SolvedFamily f = solve_family(tag, cfg.order + 1);
        TriSystem sys = TriSystem::make(tag);
        BiPoly elim = eliminate_quadratic(sys, f.w0);
        BiPoly sub = digon_substitute(elim);
        if (cfg.format == Format::Json) {
            std::cout << (i == 0 ? "[\n" : "") << "  {\"family\": \"" << fam
                      << "\", \"eliminant\": \"" << elim.str()
                      << "\", \"digon_substituted\": \"" << sub.str() << "\"}"
                      << (i + 1 == cfg.families.size() ? "\n]" : ",") << "\n";
        } else {
            std::cout << "# family=" << fam << "\n"
                      << "eliminant: " << elim.str() << "\n"
                      << "digon-substituted: " << sub.str() << "\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"census of non-separable planar triangulations by minimum "
                 "degree"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string format_str, config_path;
    if (const char* env = std::getenv("TRIDEG_THREADS"))
        cfg.threads = std::atoi(env);

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--family", cfg.families,
                        "family selection (S,T,U,V,F,G,H,K,Gstar,Hstar)");
        cmd->add_option("--order", cfg.order, "truncation order (inclusive)");
        cmd->add_option("--format", format_str, "output format: json|csv|text");
        cmd->add_option("--digits", cfg.digits,
                        "decimal digits for certified constants [6,200]");
        cmd->add_option("--threads", cfg.threads,
                        "worker threads (default $TRIDEG_THREADS or 1)");
        cmd->add_option("--config", config_path,
                        "plain-text config file (key = value)");
        cmd->add_option("--data", cfg.data_path,
                        "path to the appendix polynomial data file");
    };

    CLI::App* compute = app.add_subcommand("compute", "coefficient tables");
    add_common(compute);
    CLI::App* verify = app.add_subcommand("verify", "algebraic cross-checks");
    add_common(verify);
    verify->add_flag("--eliminate", cfg.eliminate,
                     "also derive the eliminants and compare with the "
                     "published equations");
    CLI::App* asym =
        app.add_subcommand("asymptotics", "singularities and growth fits");
    add_common(asym);
    CLI::App* elim =
        app.add_subcommand("eliminate", "print the derived eliminants");
    add_common(elim);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return kExitConfig;
    }

    CLI::App* cmd = app.get_subcommands().front();
    try {
        if (!config_path.empty()) apply_config_file(config_path, cfg, cmd);
        if (!format_str.empty()) cfg.format = parse_format(format_str);
        if (cfg.order < 0) {
            // Per-command defaults; compute requires an explicit order.
            if (cmd == verify) cfg.order = 40;
            if (cmd == asym) cfg.order = 320;
            if (cmd == elim) cfg.order = 60;
        }
        if (cfg.families.empty()) {
            if (cmd == asym)
                cfg.families = {"F", "G", "H", "K"};
            else if (cmd == elim)
                cfg.families = {"S", "T", "U"};
            else
                cfg.families = kAllFamilies;
        }
        validate(cfg);
        if (cmd == compute) return cmd_compute(cfg);
        if (cmd == verify) return cmd_verify(cfg, load_data(cfg, argv[0]));
        if (cmd == asym) return cmd_asymptotics(cfg, load_data(cfg, argv[0]));
        return cmd_eliminate(cfg);
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const IdentityViolation& e) {
        std::cerr << "internal identity violation: " << e.what() << "\n";
        return kExitInternal;
    } catch (const SeriesError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
}
