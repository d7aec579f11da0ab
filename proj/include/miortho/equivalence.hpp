#pragma once

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <optional>
#include <vector>

#include "miortho/case_key.hpp"
#include "miortho/parallel.hpp"
#include "miortho/routes.hpp"
#include "miortho/sturm.hpp"

namespace miortho {

/// Every admissible seed with degree <= max_d, Type I first, degrees
/// ascending. Deterministic, so every report orders cases the same way.
inline std::vector<IndexEntry> valid_seeds(const SystemParams& params, unsigned max_d) {
    std::vector<IndexEntry> out;
    for (SeedType t : {SeedType::I, SeedType::II}) {
        BigInt limit(max_d);
        if (auto bound = max_seed_degree(params, t); bound && *bound < limit) limit = *bound;
        for (BigInt v = 0; v <= limit; ++v)
            out.push_back(IndexEntry{static_cast<unsigned>(v.convert_to<unsigned long>()), t});
    }
    return out;
}

/// All ordered index sets with distinct entries, sizes 0..max_m, degrees
/// <= max_d. Order: by size, then lexicographically over seed positions.
inline std::vector<IndexSpec> enumerate_index_sets(const SystemParams& params, unsigned max_m,
                                                   unsigned max_d) {
    const std::vector<IndexEntry> seeds = valid_seeds(params, max_d);
    std::vector<IndexSpec> out;
    std::vector<IndexEntry> current;
    std::vector<bool> used(seeds.size(), false);

    auto extend = [&](auto&& self, unsigned remaining) -> void {
        out.push_back(IndexSpec::make(params, current));
        if (remaining == 0) return;
        for (std::size_t i = 0; i < seeds.size(); ++i) {
            if (used[i]) continue;
            used[i] = true;
            current.push_back(seeds[i]);
            self(self, remaining - 1);
            current.pop_back();
            used[i] = false;
        }
    };
    extend(extend, max_m);

    std::stable_sort(out.begin(), out.end(), [](const IndexSpec& a, const IndexSpec& b) {
        return a.size() < b.size();
    });
    return out;
}

struct EquivalenceOutcome {
    CaseKey key;
    bool equal = false;
    std::size_t deg_xi = 0;
    std::size_t deg_p = 0;
    bool degree_gap_anomaly = false; // deg P - deg Xi != n (recorded, not asserted)
    unsigned xi_domain_roots = 0;    // advisory Sturm count on the physical domain
    double ms = 0.0;
};

struct EquivalenceReport {
    std::vector<EquivalenceOutcome> cases;
    unsigned failed = 0;
    unsigned anomalies = 0;
};

// Advisory nodelessness: roots of Xi_D inside (0,inf) for L, (-1,1) for J.
inline unsigned xi_domain_root_count(const SystemParams& params, const Poly& xi) {
    if (params.family == Family::Laguerre)
        return sturm_root_count(xi, Rational(0), std::nullopt);
    return sturm_root_count(xi, Rational(-1), Rational(1));
}

/// Runs routes W, A, B over the full case grid and demands bit-identical
/// polynomials for Xi_D and P_{D,n}. This is the executable form of the
/// claim that the three defining expressions agree.
inline EquivalenceReport run_equivalence(const SystemParams& params, unsigned max_m, unsigned max_d,
                                         unsigned max_n, unsigned threads = 1) {
    const std::vector<IndexSpec> sets = enumerate_index_sets(params, max_m, max_d);
    std::vector<std::vector<EquivalenceOutcome>> slots(sets.size());

    parallel_for(sets.size(), threads, [&](std::size_t si) {
        const IndexSpec& index = sets[si];
        auto& rows = slots[si];
        rows.reserve(max_n + 1);
        for (unsigned n = 0; n <= max_n; ++n) {
            const auto started = std::chrono::steady_clock::now();
            MiResult w = route_w(params, index, n);
            MiResult a = route_a(params, index, n);
            MiResult b = route_b(params, index, n);

            EquivalenceOutcome oc;
            oc.key = CaseKey::of(params, index, n);
            oc.equal = w.xi == a.xi && a.xi == b.xi && w.p == a.p && a.p == b.p;
            oc.deg_xi = a.xi.degree().value_or(0);
            oc.deg_p = a.p.degree().value_or(0);
            oc.degree_gap_anomaly = oc.deg_p != oc.deg_xi + n;
            oc.xi_domain_roots = xi_domain_root_count(params, a.xi);
            oc.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                              started)
                        .count();
            rows.push_back(std::move(oc));
        }
    });

    EquivalenceReport report;
    for (auto& rows : slots) {
        for (auto& oc : rows) {
            if (!oc.equal) ++report.failed;
            if (oc.degree_gap_anomaly || oc.xi_domain_roots != 0) ++report.anomalies;
            report.cases.push_back(std::move(oc));
        }
    }
    return report;
}

} // namespace miortho
