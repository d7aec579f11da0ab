// Command-line interface: exact multi-indexed polynomial construction by any
// of the three routes, the verification suites as machine-readable JSON, and
// float-sampled tables for plotting.

#include <cstdio>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "miortho/miortho.hpp"
#include "miortho/suites.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace miortho;

std::vector<IndexEntry> parse_index_list(const std::string& text) {
    std::vector<IndexEntry> entries;
    if (text.empty()) return entries;
    std::istringstream is(text);
    std::string item;
    while (std::getline(is, item, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos)
            throw validation_error("index entry must look like TYPE:DEGREE, got '" + item + "'");
        const std::string type = item.substr(0, colon);
        IndexEntry e;
        if (type == "I")
            e.type = SeedType::I;
        else if (type == "II")
            e.type = SeedType::II;
        else
            throw validation_error("index entry type must be I or II, got '" + type + "'");
        try {
            e.v = static_cast<unsigned>(std::stoul(item.substr(colon + 1)));
        } catch (const std::exception&) {
            throw validation_error("index entry degree must be a nonnegative integer: '" + item + "'");
        }
        entries.push_back(e);
    }
    return entries;
}

SystemParams make_params(const std::string& family, const std::string& g, const std::string& h) {
    if (family == "laguerre") return SystemParams::laguerre(parse_rational(g));
    if (family == "jacobi") return SystemParams::jacobi(parse_rational(g), parse_rational(h));
    throw validation_error("family must be laguerre or jacobi");
}

json coeff_strings(const Poly& p) {
    json arr = json::array();
    for (const auto& c : p.coeffs()) arr.push_back(c.str());
    if (p.is_zero()) arr.push_back("0");
    return arr;
}

std::string latex_rational(const Rational& q, bool leading) {
    const Rational mag = q < 0 ? Rational(-q) : q;
    std::string sign = q < 0 ? (leading ? "-" : " - ") : (leading ? "" : " + ");
    if (denominator(mag) == 1) return sign + numerator(mag).str();
    return sign + "\\frac{" + numerator(mag).str() + "}{" + denominator(mag).str() + "}";
}

std::string latex_poly(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool leading = true;
    for (std::size_t k = p.coeffs().size(); k-- > 0;) {
        const Rational& c = p.coeffs()[k];
        if (c.is_zero()) continue;
        const Rational mag = c < 0 ? Rational(-c) : c;
        if (k == 0) {
            out += latex_rational(c, leading);
        } else {
            if (mag == 1)
                out += c < 0 ? (leading ? "-" : " - ") : (leading ? "" : " + ");
            else
                out += latex_rational(c, leading);
            out += k == 1 ? "\\eta" : "\\eta^{" + std::to_string(k) + "}";
        }
        leading = false;
    }
    return out;
}

struct ComputeFlags {
    std::string family, g = "7/3", h = "11/4", index, route = "all", what = "both", format = "json";
    unsigned n = 0;
};

int run_compute(const ComputeFlags& f) {
    const SystemParams params = make_params(f.family, f.g, f.h);
    const IndexSpec index = IndexSpec::make(params, parse_index_list(f.index));
    const CaseKey key = CaseKey::of(params, index, f.n);

    std::vector<Route> routes;
    if (f.route == "w")
        routes = {Route::W};
    else if (f.route == "a")
        routes = {Route::A};
    else if (f.route == "b")
        routes = {Route::B};
    else if (f.route == "all")
        routes = {Route::W, Route::A, Route::B};
    else
        throw validation_error("route must be one of w|a|b|all");
    if (f.what != "xi" && f.what != "p" && f.what != "both")
        throw validation_error("what must be one of xi|p|both");

    std::vector<MiResult> results;
    results.reserve(routes.size());
    for (Route r : routes) results.push_back(run_route(r, params, index, f.n));
    bool equal = true;
    for (const auto& r : results) equal = equal && r.xi == results.front().xi && r.p == results.front().p;

    const bool want_xi = f.what != "p";
    const bool want_p = f.what != "xi";
    if (f.format == "json") {
        json out;
        out["key"] = key.render();
        out["results"] = json::array();
        for (const auto& r : results) {
            json item;
            item["route"] = std::string(1, route_letter(r.route));
            if (want_xi) item["xi"] = coeff_strings(r.xi);
            if (want_p) item["p"] = coeff_strings(r.p);
            out["results"].push_back(std::move(item));
        }
        if (routes.size() > 1) out["equal"] = equal;
        std::cout << out.dump(2) << "\n";
    } else if (f.format == "csv") {
        for (const auto& r : results) {
            auto row = [&](const char* what, const Poly& p) {
                std::cout << route_letter(r.route) << ',' << what;
                for (const auto& c : p.coeffs()) std::cout << ',' << c.str();
                if (p.is_zero()) std::cout << ",0";
                std::cout << "\n";
            };
            if (want_xi) row("xi", r.xi);
            if (want_p) row("p", r.p);
        }
        if (routes.size() > 1) std::cout << "equal," << (equal ? "true" : "false") << "\n";
    } else if (f.format == "latex") {
        for (const auto& r : results) {
            if (want_xi)
                std::cout << "% route " << route_letter(r.route) << "\n\\Xi_{\\mathcal{D}}(\\eta) = "
                          << latex_poly(r.xi) << "\n";
            if (want_p)
                std::cout << "% route " << route_letter(r.route) << "\nP_{\\mathcal{D},n}(\\eta) = "
                          << latex_poly(r.p) << "\n";
        }
    } else {
        throw validation_error("format must be one of json|csv|latex");
    }
    return routes.size() > 1 && !equal ? 3 : 0;
}

struct VerifyFlags {
    std::string suite;
    std::string family = "both";
    std::string g = "7/3", h = "11/4";
    unsigned max_m = 3, max_d = 3;
    int max_n = -1;
    double tol_orthogonality = 1e-8;
    double tol_schrodinger = 1e-6;
    double tol_xwronskian = 1e-8;
    bool timings = false;
};

int run_verify(const VerifyFlags& f) {
    SuiteOptions opt;
    if (f.family == "laguerre" || f.family == "both")
        opt.systems.push_back(SystemParams::laguerre(parse_rational(f.g)));
    if (f.family == "jacobi" || f.family == "both")
        opt.systems.push_back(SystemParams::jacobi(parse_rational(f.g), parse_rational(f.h)));
    if (opt.systems.empty()) throw validation_error("family must be laguerre, jacobi, or both");
    opt.max_m = f.max_m;
    opt.max_d = f.max_d;
    opt.max_n = f.max_n;
    opt.tol_orthogonality = f.tol_orthogonality;
    opt.tol_schrodinger = f.tol_schrodinger;
    opt.tol_xwronskian = f.tol_xwronskian;
    opt.threads = thread_budget();

    const bool has_jacobi = f.family != "laguerre";
    std::vector<SuiteResult> results;
    auto want = [&](const char* name) { return f.suite == name || f.suite == "all"; };
    if (f.suite != "equivalence" && f.suite != "identities" && f.suite != "parity" &&
        f.suite != "orthogonality" && f.suite != "schrodinger" && f.suite != "xwronskian" &&
        f.suite != "all")
        throw validation_error("unknown suite '" + f.suite + "'");
    if (f.suite == "parity" && !has_jacobi)
        throw validation_error("the parity suite is Jacobi-only");

    if (want("equivalence")) results.push_back(suite_equivalence(opt));
    if (want("identities")) results.push_back(suite_identities(opt));
    if (want("parity") && has_jacobi) results.push_back(suite_parity(opt));
    if (want("orthogonality")) results.push_back(suite_orthogonality(opt));
    if (want("schrodinger")) results.push_back(suite_schrodinger(opt));
    if (want("xwronskian")) results.push_back(suite_xwronskian(opt));

    json out;
    out["suite"] = f.suite;
    out["cases"] = json::array();
    unsigned total = 0, failed = 0;
    for (const auto& suite : results) {
        for (const auto& c : suite.cases) {
            json item;
            item["key"] = c.key;
            item["pass"] = c.pass;
            json detail;
            for (const auto& [k, v] : c.detail) detail[k] = v;
            if (f.timings) detail["ms"] = detail::fmt_double(c.ms);
            item["detail"] = std::move(detail);
            out["cases"].push_back(std::move(item));
            ++total;
            if (!c.pass) ++failed;
        }
    }
    out["summary"] = json{{"total", total}, {"failed", failed}};
    std::cout << out.dump(2) << "\n";
    return failed == 0 ? 0 : 1;
}

struct TableFlags {
    std::string family, g = "7/3", h = "11/4", index, grid, quantity;
    unsigned n = 0;
};

int run_table(const TableFlags& f) {
    const SystemParams params = make_params(f.family, f.g, f.h);
    const IndexSpec index = IndexSpec::make(params, parse_index_list(f.index));

    double start = 0, stop = 0;
    long count = 0;
    {
        std::istringstream is(f.grid);
        char c1 = 0, c2 = 0;
        if (!(is >> start >> c1 >> stop >> c2 >> count) || c1 != ':' || c2 != ':' || count < 0)
            throw validation_error("grid must be START:STOP:COUNT");
    }
    const bool x_space = f.quantity == "potential" || f.quantity == "wavefunction";
    if (!x_space && f.quantity != "xi" && f.quantity != "p")
        throw validation_error("quantity must be one of xi|p|potential|wavefunction");

    const WaveContext ctx = WaveContext::make(params, index, f.n);
    auto value_at = [&](double x) {
        if (f.quantity == "xi") return ctx.xi.eval_double(x);
        if (f.quantity == "p") return ctx.p.eval_double(x);
        if (f.quantity == "potential") return deformed_potential(ctx, x);
        return wavefunction(ctx, x);
    };
    if (x_space) {
        const double hi = params.family == Family::Laguerre ? std::numeric_limits<double>::infinity()
                                                            : M_PI / 2;
        for (long i = 0; i < count; ++i) {
            const double x = count == 1 ? start : start + (stop - start) * i / (count - 1);
            if (!(x > 0.0 && x < hi)) throw validation_error("grid outside the physical domain");
        }
    }

    std::printf("x_or_eta,value\n");
    for (long i = 0; i < count; ++i) {
        const double x = count == 1 ? start : start + (stop - start) * i / (count - 1);
        std::printf("%.17g,%.17g\n", x, value_at(x));
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact multi-indexed Laguerre/Jacobi polynomial engine with verification suites"};
    app.require_subcommand(1);
    // --h is a domain flag, so help lives on --help alone
    app.set_help_flag("--help", "print usage");

    ComputeFlags cf;
    CLI::App* compute = app.add_subcommand("compute", "Build Xi_D and P_{D,n} exactly");
    compute->set_help_flag("--help", "print usage");
    compute->add_option("--family", cf.family, "laguerre|jacobi")->required();
    compute->add_option("--g", cf.g, "parameter g as a rational, e.g. 7/3");
    compute->add_option("--h", cf.h, "parameter h (Jacobi only)");
    compute->add_option("--index", cf.index, "ordered seed list, e.g. I:1,II:2");
    compute->add_option("--n", cf.n, "eigenpolynomial degree index");
    compute->add_option("--route", cf.route, "w|a|b|all");
    compute->add_option("--what", cf.what, "xi|p|both");
    compute->add_option("--format", cf.format, "json|csv|latex");

    VerifyFlags vf;
    CLI::App* verify = app.add_subcommand("verify", "Run a verification suite, JSON report on stdout");
    verify->set_help_flag("--help", "print usage");
    verify->add_option("--suite", vf.suite,
                       "equivalence|identities|parity|orthogonality|schrodinger|xwronskian|all")
        ->required();
    verify->add_option("--family", vf.family, "laguerre|jacobi|both");
    verify->add_option("--g", vf.g, "parameter g");
    verify->add_option("--h", vf.h, "parameter h (Jacobi)");
    verify->add_option("--max-m", vf.max_m, "largest index-set size");
    verify->add_option("--max-d", vf.max_d, "largest seed degree");
    verify->add_option("--max-n", vf.max_n, "largest eigen index (-1 = suite default)");
    verify->add_option("--tol-orthogonality", vf.tol_orthogonality, "orthogonality tolerance");
    verify->add_option("--tol-schrodinger", vf.tol_schrodinger, "residual tolerance");
    verify->add_option("--tol-xwronskian", vf.tol_xwronskian, "x-Wronskian tolerance");
    verify->add_flag("--timings", vf.timings, "include per-case timings (breaks byte determinism)");

    TableFlags tf;
    CLI::App* table = app.add_subcommand("table", "Sample a quantity over a grid as CSV");
    table->set_help_flag("--help", "print usage");
    table->add_option("--family", tf.family, "laguerre|jacobi")->required();
    table->add_option("--g", tf.g, "parameter g");
    table->add_option("--h", tf.h, "parameter h (Jacobi)");
    table->add_option("--index", tf.index, "ordered seed list");
    table->add_option("--n", tf.n, "eigenpolynomial degree index");
    table->add_option("--grid", tf.grid, "START:STOP:COUNT")->required();
    table->add_option("--quantity", tf.quantity, "xi|p|potential|wavefunction")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*compute) return run_compute(cf);
        if (*verify) return run_verify(vf);
        if (*table) return run_table(tf);
    } catch (const validation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "internal exactness failure: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
