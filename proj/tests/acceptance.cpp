// Acceptance suite: one pass/fail line per criterion, nonzero exit if any
// gating criterion fails. Tolerances are pinned here, not configurable.

#include <chrono>
#include <cstdio>
#include <string>

#include "miortho/miortho.hpp"
#include "miortho/suites.hpp"

using namespace miortho;

namespace {

int failures = 0;

void report(int num, bool pass, bool advisory, const std::string& text) {
    std::printf("%s criterion %d%s: %s\n", pass ? "PASS" : "FAIL", num,
                advisory ? " (advisory)" : "", text.c_str());
    std::fflush(stdout);
    if (!pass && !advisory) ++failures;
}

std::string first_failure(const SuiteResult& res) {
    for (const auto& c : res.cases)
        if (!c.pass) return " first failure: " + c.key;
    return "";
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

} // namespace

int main() {
    const SystemParams lag = SystemParams::laguerre(Rational(7, 3));
    const SystemParams jac = SystemParams::jacobi(Rational(7, 3), Rational(11, 4));

    SuiteOptions opt;
    opt.systems = {lag, jac};
    opt.threads = thread_budget();

    EquivalenceReport eq_l, eq_j;

    // 1. Cross-route exactness, bit-identical rational polynomials, single
    //    thread, under two minutes.
    {
        const auto t0 = std::chrono::steady_clock::now();
        eq_l = run_equivalence(lag, 3, 3, 4, 1);
        eq_j = run_equivalence(jac, 3, 3, 4, 1);
        const double secs = seconds_since(t0);
        const bool counts_ok = eq_l.cases.size() == 785 && eq_j.cases.size() == 430;
        const bool pass = eq_l.failed == 0 && eq_j.failed == 0 && counts_ok && secs < 120.0;
        char buf[256];
        std::snprintf(buf, sizeof buf,
                      "cross-route exactness W=A=B, L %zu cases + J %zu cases, zero tolerance, "
                      "%.1f s single-threaded",
                      eq_l.cases.size(), eq_j.cases.size(), secs);
        report(1, pass, false, buf);
    }

    // 2. Classical identity suite, exact, n <= 10, 20 rational draws each.
    {
        SuiteResult res = suite_identities(opt);
        report(2, res.all_passed(), false,
               "Laguerre/Jacobi contiguous identities and classical parity, " +
                   std::to_string(res.cases.size()) + " draws, exact" + first_failure(res));
    }

    // 3. Higher-derivative closed forms equal repeated differentiation for
    //    j <= 5, v <= 3, all four family/type cases (parameters wide enough
    //    to admit degree 3 in every type).
    {
        bool pass = true;
        std::string failure;
        const SystemParams wide_l = SystemParams::laguerre(Rational(19, 4));
        const SystemParams wide_j = SystemParams::jacobi(Rational(19, 4), Rational(23, 5));
        unsigned checked = 0;
        for (const auto& params : {wide_l, wide_j, lag, jac}) {
            for (SeedType t : {SeedType::I, SeedType::II}) {
                BigInt limit(3);
                if (auto bound = max_seed_degree(params, t); bound && *bound < limit) limit = *bound;
                for (BigInt v = 0; v <= limit; ++v) {
                    const unsigned uv = static_cast<unsigned>(v.convert_to<unsigned long>());
                    for (unsigned j = 1; j <= 5; ++j) {
                        ++checked;
                        if (mu_derivative_formal(params, uv, t, j) !=
                            mu_derivative_closed(params, uv, t, j)) {
                            pass = false;
                            if (failure.empty())
                                failure = " first failure: " + CaseKey::of(params, IndexSpec::empty(), 0).render() +
                                          " v=" + std::to_string(uv) + " j=" + std::to_string(j);
                        }
                    }
                }
            }
        }
        report(3, pass, false,
               "mu_v closed-form derivatives equal formal differentiation, " +
                   std::to_string(checked) + " cases, exact" + failure);
    }

    // 4. Parity relations on the J grid plus the mirror-symmetric block.
    {
        SuiteResult res = suite_parity(opt);
        report(4, res.all_passed(), false,
               "multi-indexed Jacobi parity and mirror-symmetric sign, " +
                   std::to_string(res.cases.size()) + " cases, exact" + first_failure(res));
    }

    // 5. M = 0 reduction to the classical polynomials, n <= 6, every route.
    {
        bool pass = true;
        for (const auto& params : {lag, jac}) {
            for (unsigned n = 0; n <= 6; ++n) {
                const Poly classical = eigen_data(params, n).p;
                for (Route route : {Route::W, Route::A, Route::B}) {
                    MiResult r = run_route(route, params, IndexSpec::empty(), n);
                    pass = pass && r.xi == Poly::one() && r.p == classical;
                }
            }
        }
        report(5, pass, false, "empty index set gives Xi = 1 and the classical P_n, n <= 6, exact");
    }

    // 6. Orthogonality of the deformed families on six index sets per family.
    {
        const auto t0 = std::chrono::steady_clock::now();
        SuiteOptions c6 = opt;
        c6.max_n = 5;
        c6.tol_orthogonality = 1e-8;
        SuiteResult res = suite_orthogonality(c6);
        const double secs = seconds_since(t0);
        double worst = 0.0;
        for (const auto& c : res.cases) worst = std::max(worst, std::stod(c.detail.at("normalized_cross")));
        char buf[256];
        std::snprintf(buf, sizeof buf,
                      "normalized cross inner products < 1e-8 and positive norms, %zu pairs, "
                      "worst %.2e, %.1f s",
                      res.cases.size(), worst, secs);
        report(6, res.all_passed() && secs < 60.0, false, buf + first_failure(res));
    }

    // 7. Iso-spectrality: Schrodinger residual < 1e-6 at the unchanged E_n,
    //    5-point stencil at h = 1e-3, and ~16x decay when h halves.
    {
        SuiteOptions c7 = opt;
        c7.max_n = 3;
        c7.tol_schrodinger = 1e-6;
        c7.stencil_h = 1e-3;
        SuiteResult res = suite_schrodinger(c7);
        double worst = 0.0;
        for (const auto& c : res.cases) worst = std::max(worst, std::stod(c.detail.at("residual")));
        char buf[256];
        std::snprintf(buf, sizeof buf,
                      "Schrodinger residual < 1e-6 at 10 interior points with 4th-order stencil decay, "
                      "%zu cases, worst %.2e",
                      res.cases.size(), worst);
        report(7, res.all_passed(), false, buf + first_failure(res));
    }

    // 8. x-space Wronskian normalization constants, 3 interior points per case.
    {
        SuiteOptions c8 = opt;
        c8.tol_xwronskian = 1e-8;
        SuiteResult res = suite_xwronskian(c8);
        double worst = 0.0;
        for (const auto& c : res.cases) worst = std::max(worst, std::stod(c.detail.at("max_rel_error")));
        char buf[256];
        std::snprintf(buf, sizeof buf,
                      "float x-space Wronskians match prefactor times Xi_D and P_{D,n} "
                      "to < 1e-8, %zu cases, worst %.2e",
                      res.cases.size(), worst);
        report(8, res.all_passed(), false, buf + first_failure(res));
    }

    // 9. Advisory, non-gating: Xi_D has no roots in the physical domain on
    //    any criterion-1 case; anomalies are logged with their case keys.
    {
        unsigned anomalies = 0;
        for (const auto* rep : {&eq_l, &eq_j}) {
            for (const auto& oc : rep->cases) {
                if (oc.xi_domain_roots != 0) {
                    ++anomalies;
                    std::printf("  anomaly: %s has %u root(s) of Xi_D in the physical domain\n",
                                oc.key.render().c_str(), oc.xi_domain_roots);
                }
            }
        }
        report(9, anomalies == 0, true,
               "Sturm count of Xi_D roots in the physical domain is zero on all criterion-1 cases (" +
                   std::to_string(anomalies) + " anomalies)");
    }

    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
