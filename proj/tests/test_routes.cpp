#include <algorithm>
#include <random>

#include "catch2/catch_amalgamated.hpp"

#include "miortho/equivalence.hpp"
#include "miortho/routes.hpp"

using namespace miortho;

namespace {

const Poly eta = Poly::monomial(1);

MiResult all_routes_equal(const SystemParams& params, const IndexSpec& index, unsigned n) {
    MiResult w = route_w(params, index, n);
    MiResult a = route_a(params, index, n);
    MiResult b = route_b(params, index, n);
    REQUIRE(w.xi == a.xi);
    REQUIRE(a.xi == b.xi);
    REQUIRE(w.p == a.p);
    REQUIRE(a.p == b.p);
    return a;
}

} // namespace

TEST_CASE("empty index set reduces to the classical polynomials") {
    for (const auto& params : {SystemParams::laguerre(Rational(7, 3)),
                               SystemParams::jacobi(Rational(7, 3), Rational(11, 4))}) {
        for (unsigned n = 0; n <= 6; ++n) {
            MiResult r = all_routes_equal(params, IndexSpec::empty(), n);
            CHECK(r.xi == Poly::one());
            CHECK(r.p == eigen_data(params, n).p);
        }
    }
}

TEST_CASE("single Type I Laguerre seed, hand-computed") {
    const SystemParams params = SystemParams::laguerre(Rational(5, 2));
    const IndexSpec index = IndexSpec::make(params, {{1, SeedType::I}});

    MiResult r = all_routes_equal(params, index, 0);
    CHECK(r.xi == eta + Poly(Rational(3)));       // L_1^{(g-1/2)}(-eta) at g=5/2
    CHECK(r.p == -(eta + Poly(Rational(4))));     // 2x2 Wronskian by hand

    // generic parameter: Xi = eta + g + 1/2 and P_{D,0} = -(eta + g + 3/2)
    const SystemParams gen = SystemParams::laguerre(Rational(7, 5));
    const IndexSpec index2 = IndexSpec::make(gen, {{1, SeedType::I}});
    MiResult r2 = all_routes_equal(gen, index2, 0);
    CHECK(r2.xi == eta + Poly(gen.g + Rational(1, 2)));
    CHECK(r2.p == -(eta + Poly(gen.g + Rational(3, 2))));
}

TEST_CASE("single Type II Laguerre seed, hand-computed") {
    const SystemParams params = SystemParams::laguerre(Rational(7, 3));
    const IndexSpec index = IndexSpec::make(params, {{1, SeedType::II}});
    MiResult r = all_routes_equal(params, index, 0);
    CHECK(r.xi == laguerre(1, Rational(1, 2) - params.g));
    // det [[X_1, 1], [X_2, 0]] = -X_2 = (g-3/2) L_1^{(-1/2-g)}
    CHECK(r.p == (params.g - Rational(3, 2)) * laguerre(1, -Rational(1, 2) - params.g));
}

TEST_CASE("spec equivalence cases") {
    const SystemParams lag = SystemParams::laguerre(Rational(7, 3));
    all_routes_equal(lag, IndexSpec::make(lag, {{2, SeedType::I}, {1, SeedType::II}}), 3);

    const SystemParams jac = SystemParams::jacobi(Rational(7, 3), Rational(11, 4));
    all_routes_equal(jac, IndexSpec::make(jac, {{1, SeedType::I}, {1, SeedType::II}, {2, SeedType::I}}), 2);
}

TEST_CASE("cross-route equality on a reduced grid") {
    for (const auto& params : {SystemParams::laguerre(Rational(7, 3)),
                               SystemParams::jacobi(Rational(7, 3), Rational(11, 4))}) {
        EquivalenceReport rep = run_equivalence(params, 2, 2, 2);
        CHECK(rep.failed == 0);
        for (const auto& oc : rep.cases) {
            CHECK(!oc.degree_gap_anomaly); // deg P - deg Xi = n, recorded per case
            CHECK(oc.xi_domain_roots == 0);
        }
    }
}

TEST_CASE("column order antisymmetry") {
    const SystemParams params = SystemParams::jacobi(Rational(7, 3), Rational(11, 4));
    const std::vector<IndexEntry> base = {{0, SeedType::I}, {1, SeedType::II}, {2, SeedType::I}};
    const IndexSpec index = IndexSpec::make(params, base);

    for (Route route : {Route::W, Route::A, Route::B}) {
        MiResult r0 = run_route(route, params, index, 2);

        std::vector<IndexEntry> swapped = base;
        std::swap(swapped[0], swapped[2]);
        MiResult r1 = run_route(route, params, IndexSpec::make(params, swapped), 2);
        CHECK(r1.xi == -r0.xi);
        CHECK(r1.p == -r0.p);

        std::vector<IndexEntry> cycled = {base[1], base[2], base[0]}; // even permutation
        MiResult r2 = run_route(route, params, IndexSpec::make(params, cycled), 2);
        CHECK(r2.xi == r0.xi);
        CHECK(r2.p == r0.p);
    }
}

TEST_CASE("half-integer g boundary cases") {
    // g - 1/2 integral makes the Type II range rule bite exactly
    const SystemParams params = SystemParams::laguerre(Rational(5, 2));
    const IndexSpec index = IndexSpec::make(params, {{0, SeedType::II}, {1, SeedType::II}});
    all_routes_equal(params, index, 2);
    CHECK_THROWS_AS(IndexSpec::make(params, {{2, SeedType::II}}), out_of_range_index);

    const SystemParams jac = SystemParams::jacobi(Rational(5, 2), Rational(7, 2));
    all_routes_equal(jac, IndexSpec::make(jac, {{2, SeedType::I}, {1, SeedType::II}}), 1);
}

TEST_CASE("cross-route equality at random admissible parameters") {
    std::mt19937 rng(1701);
    std::uniform_int_distribution<int> num(1, 40);
    std::uniform_int_distribution<int> den(2, 9);
    auto draw_param = [&] {
        // > 1/2 and generically non-half-integer
        return Rational(1, 2) + Rational(num(rng), den(rng));
    };
    for (int rep = 0; rep < 5; ++rep) {
        const SystemParams lag = SystemParams::laguerre(draw_param());
        const SystemParams jac = SystemParams::jacobi(draw_param(), draw_param());
        for (const auto& params : {lag, jac}) {
            CHECK(run_equivalence(params, 2, 2, 2).failed == 0);
        }
    }
}

TEST_CASE("enumeration covers the expected grid") {
    const SystemParams lag = SystemParams::laguerre(Rational(7, 3));
    // seeds: I degrees 0..3 plus II degrees 0..1 -> 6; ordered distinct picks
    // of sizes 0..3: 1 + 6 + 30 + 120
    CHECK(enumerate_index_sets(lag, 3, 3).size() == 157);

    const SystemParams jac = SystemParams::jacobi(Rational(7, 3), Rational(11, 4));
    // seeds: I 0..2, II 0..1 -> 5; 1 + 5 + 20 + 60
    CHECK(enumerate_index_sets(jac, 3, 3).size() == 86);
}
