#include <cmath>

#include "catch2/catch_amalgamated.hpp"

#include "miortho/numeric.hpp"
#include "miortho/suites.hpp"

using namespace miortho;

namespace {

double fd_second_derivative(const WaveContext& ctx, double x, double h) {
    const auto g = [&](double t) { return log_wronskian_abs(ctx, t); };
    return (-g(x - 2 * h) + 16 * g(x - h) - 30 * g(x) + 16 * g(x + h) - g(x + 2 * h)) / (12 * h * h);
}

} // namespace

TEST_CASE("weight density") {
    // M = 0: density reduces to the classical weight; at eta = 1 the eta
    // power drops out entirely for the L family
    const SystemParams lag = SystemParams::laguerre(Rational(3, 2));
    const WaveContext l0 = WaveContext::make(lag, IndexSpec::empty(), 0);
    CHECK_THAT(weight_density(l0, 1.0), Catch::Matchers::WithinRel(std::exp(-1.0), 1e-14));

    const SystemParams jac = SystemParams::jacobi(Rational(3, 2), Rational(5, 2));
    const WaveContext j0 = WaveContext::make(jac, IndexSpec::empty(), 0);
    CHECK_THAT(weight_density(j0, 0.3), Catch::Matchers::WithinRel(0.35 * 0.65 * 0.65, 1e-14));

    // deformed: L, D={(1,I)}, g=5/2, eta=1 -> e^{-1} * 1^2 / (1+3)^2
    const SystemParams lag52 = SystemParams::laguerre(Rational(5, 2));
    const WaveContext dl = WaveContext::make(lag52, IndexSpec::make(lag52, {{1, SeedType::I}}), 0);
    CHECK_THAT(weight_density(dl, 1.0), Catch::Matchers::WithinRel(std::exp(-1.0) / 16.0, 1e-14));

    CHECK_THROWS_AS(weight_density(dl, -0.5), validation_error);
    CHECK_THROWS_AS(weight_density(j0, 1.5), validation_error);
}

TEST_CASE("orthogonality") {
    // classical Laguerre, analytic value 0
    const SystemParams lag = SystemParams::laguerre(Rational(7, 3));
    const WaveContext a = WaveContext::make(lag, IndexSpec::empty(), 0);
    const WaveContext b = WaveContext::make(lag, IndexSpec::empty(), 1);
    OrthoResult r = orthogonality_check(a, b);
    CHECK(r.quad_ok);
    CHECK(r.normalized < 1e-10);
    CHECK(r.norm_n > 0);
    CHECK(r.norm_m > 0);

    // deformed case from the grid
    const IndexSpec index = IndexSpec::make(lag, {{1, SeedType::I}});
    const WaveContext c = WaveContext::make(lag, index, 0);
    const WaveContext d = WaveContext::make(lag, index, 2);
    OrthoResult r2 = orthogonality_check(c, d);
    CHECK(r2.quad_ok);
    CHECK(r2.normalized < 1e-8);

    // Jacobi with every seed Type I pushes the (1+eta)/2 exponent to its
    // lowest admissible value; the endpoint substitution has to hold up
    const SystemParams jac = SystemParams::jacobi(Rational(7, 3), Rational(11, 4));
    const IndexSpec heavy =
        IndexSpec::make(jac, {{0, SeedType::I}, {1, SeedType::I}, {2, SeedType::I}});
    const WaveContext e = WaveContext::make(jac, heavy, 1);
    const WaveContext f = WaveContext::make(jac, heavy, 4);
    OrthoResult r3 = orthogonality_check(e, f);
    CHECK(r3.quad_ok);
    CHECK(r3.normalized < 1e-8);

    CHECK_THROWS_AS(orthogonality_check(a, c), validation_error);
}

TEST_CASE("deformed potential") {
    // M = 0, L, g=5/2 at x=1: x^2 + g(g-1)/x^2 - 2g - 1 = 1 + 3.75 - 6
    const SystemParams lag = SystemParams::laguerre(Rational(5, 2));
    const WaveContext l0 = WaveContext::make(lag, IndexSpec::empty(), 0);
    CHECK_THAT(deformed_potential(l0, 1.0), Catch::Matchers::WithinAbs(-1.25, 1e-12));

    // M = 0, J at x = pi/4: 2g(g-1) + 2h(h-1) - (g+h)^2
    const SystemParams jac = SystemParams::jacobi(Rational(3, 2), Rational(5, 2));
    const WaveContext j0 = WaveContext::make(jac, IndexSpec::empty(), 0);
    CHECK_THAT(deformed_potential(j0, M_PI / 4),
               Catch::Matchers::WithinAbs(2.0 * 0.75 + 2.0 * 3.75 - 16.0, 1e-10));

    CHECK_THROWS_AS(deformed_potential(l0, -1.0), validation_error);
}

TEST_CASE("deformed potential matches finite differences of log W") {
    struct Case {
        SystemParams params;
        std::vector<IndexEntry> entries;
    };
    const SystemParams lag = SystemParams::laguerre(Rational(5, 2));
    const SystemParams jac = SystemParams::jacobi(Rational(7, 3), Rational(11, 4));
    const std::vector<Case> cases = {
        {lag, {{1, SeedType::I}}},
        {lag, {{1, SeedType::I}, {1, SeedType::II}}},
        {jac, {{1, SeedType::I}, {1, SeedType::II}}},
        {jac, {{0, SeedType::I}, {1, SeedType::I}}},
    };
    for (const auto& c : cases) {
        const WaveContext ctx = WaveContext::make(c.params, IndexSpec::make(c.params, c.entries), 0);
        // central-band samples: the FD oracle's own truncation error grows
        // like the sixth derivative of log W, which blows up at the endpoints
        const double lo = c.params.family == Family::Laguerre ? 0.7 : 0.3 * (M_PI / 2);
        const double hi = c.params.family == Family::Laguerre ? 2.0 : 0.75 * (M_PI / 2);
        for (int i = 0; i < 5; ++i) {
            const double x = lo + (hi - lo) * i / 4;
            const double analytic = deformed_potential(ctx, x);
            const double via_fd = base_potential(c.params, x) - 2.0 * fd_second_derivative(ctx, x, 3e-3);
            CHECK(std::abs(analytic - via_fd) / std::max(1.0, std::abs(via_fd)) < 1e-7);
        }
    }
}

TEST_CASE("Schrodinger residuals") {
    // classical ground state
    const SystemParams lag52 = SystemParams::laguerre(Rational(5, 2));
    const WaveContext classical = WaveContext::make(lag52, IndexSpec::empty(), 0);
    const auto xs = default_sample_points(Family::Laguerre, 10);
    CHECK(schrodinger_residual(classical, xs, 1e-3) < 1e-6);

    // deformed L with E_0 = 0 unchanged
    const WaveContext dl = WaveContext::make(lag52, IndexSpec::make(lag52, {{1, SeedType::I}}), 0);
    CHECK(schrodinger_residual(dl, xs, 1e-3) < 1e-6);

    // deformed J at E_1 = 4 n (n+g+h) = 20
    const SystemParams jac = SystemParams::jacobi(Rational(3, 2), Rational(5, 2));
    const WaveContext dj = WaveContext::make(jac, IndexSpec::make(jac, {{0, SeedType::I}}), 1);
    CHECK(dj.energy == Rational(20));
    const auto xsj = default_sample_points(Family::Jacobi, 10);
    CHECK(schrodinger_residual(dj, xsj, 1e-3) < 1e-6);

    // 4th-order stencil: halving h divides the truncation error by ~16
    const double coarse = schrodinger_residual(dj, xsj, 0.02);
    const double fine = schrodinger_residual(dj, xsj, 0.01);
    CHECK(coarse / fine > 8.0);
    CHECK(coarse / fine < 32.0);

    // a stencil reaching outside the domain is rejected, not evaluated
    CHECK_THROWS_AS(schrodinger_residual(dj, xsj, 0.2), validation_error);
    const std::vector<double> near_zero{0.05};
    CHECK_THROWS_AS(schrodinger_residual(classical, near_zero, 0.04), validation_error);
}

TEST_CASE("x-space Wronskian constants") {
    // M = 0: the single-function Wronskian is the eigenfunction itself
    const SystemParams lag = SystemParams::laguerre(Rational(7, 3));
    const WaveContext m0 = WaveContext::make(lag, IndexSpec::empty(), 2);
    XWronskianCheck c0 = validate_x_wronskian(m0, 0.9);
    CHECK(c0.err_xi == 0.0);
    CHECK(c0.err_p < 1e-12);

    const WaveContext dl = WaveContext::make(lag, IndexSpec::make(lag, {{1, SeedType::I}}), 0);
    XWronskianCheck c1 = validate_x_wronskian(dl, 0.7);
    CHECK(c1.err_xi < 1e-9);
    CHECK(c1.err_p < 1e-9);

    // mixed-type J case exercises the half-integer M' exponents
    const SystemParams jac = SystemParams::jacobi(Rational(11, 3), Rational(11, 4));
    const WaveContext dj =
        WaveContext::make(jac, IndexSpec::make(jac, {{1, SeedType::I}, {2, SeedType::II}}), 1);
    XWronskianCheck c2 = validate_x_wronskian(dj, 0.5);
    CHECK(c2.err_xi < 1e-8);
    CHECK(c2.err_p < 1e-8);

    const SystemParams jac2 = SystemParams::jacobi(Rational(7, 3), Rational(11, 4));
    const WaveContext dj2 =
        WaveContext::make(jac2, IndexSpec::make(jac2, {{0, SeedType::I}, {1, SeedType::I}, {1, SeedType::II}}), 2);
    XWronskianCheck c3 = validate_x_wronskian(dj2, 1.1);
    CHECK(c3.err_xi < 1e-8);
    CHECK(c3.err_p < 1e-8);
}

TEST_CASE("representative sets give six admissible deformations per family") {
    CHECK(representative_index_sets(SystemParams::laguerre(Rational(7, 3))).size() == 6);
    CHECK(representative_index_sets(SystemParams::jacobi(Rational(7, 3), Rational(11, 4))).size() == 6);
}
