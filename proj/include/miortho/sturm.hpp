#pragma once

#include <optional>
#include <vector>

#include "miortho/errors.hpp"
#include "miortho/poly.hpp"

namespace miortho {

namespace detail {

inline int sign_of(const Rational& q) {
    if (q.is_zero()) return 0;
    return q > 0 ? 1 : -1;
}

// Sign of p at a finite point, or at +/- infinity when the endpoint is absent.
inline int sturm_sign(const Poly& p, const std::optional<Rational>& at, bool lower) {
    if (p.is_zero()) return 0;
    if (at) return sign_of(p.eval(*at));
    int lead = sign_of(p.leading());
    if (lower && (*p.degree() % 2 == 1)) lead = -lead; // -infinity flips odd degrees
    return lead;
}

inline unsigned sign_changes(const std::vector<int>& signs) {
    unsigned changes = 0;
    int prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

} // namespace detail

/// Exact count of distinct real roots of p in the open interval (lo, hi),
/// with absent endpoints meaning -infinity / +infinity. Multiple roots count
/// once; roots at a finite endpoint are excluded.
inline unsigned sturm_root_count(const Poly& p,
                                 const std::optional<Rational>& lo = std::nullopt,
                                 const std::optional<Rational>& hi = std::nullopt) {
    if (p.is_zero()) throw validation_error("sturm_root_count of the zero polynomial");
    if (lo && hi && *lo >= *hi) return 0;

    Poly q = p;
    // Divide out roots sitting exactly on a finite endpoint; they are not in
    // the open interval and Sturm's theorem needs nonvanishing endpoints.
    for (const auto& endpoint : {lo, hi}) {
        if (!endpoint) continue;
        Poly linear(std::vector<Rational>{-*endpoint, Rational(1)});
        while (!q.is_zero() && q.eval(*endpoint).is_zero()) q = exact_divide(q, linear);
    }
    if (*q.degree() == 0) return 0;

    // Canonical Sturm chain, each element scaled monic (positive scaling
    // leaves the sign pattern intact and keeps coefficients small).
    auto monic = [](Poly f) {
        Rational lead = f.leading();
        if (lead < 0) lead = -lead;
        return f * (1 / lead);
    };
    std::vector<Poly> chain;
    chain.push_back(monic(q));
    chain.push_back(monic(q.derivative()));
    while (!chain.back().is_zero() && *chain.back().degree() > 0) {
        Poly rem = poly_divmod(chain[chain.size() - 2], chain.back()).second;
        if (rem.is_zero()) break;
        chain.push_back(monic(-rem));
    }

    std::vector<int> at_lo, at_hi;
    at_lo.reserve(chain.size());
    at_hi.reserve(chain.size());
    for (const Poly& f : chain) {
        at_lo.push_back(detail::sturm_sign(f, lo, true));
        at_hi.push_back(detail::sturm_sign(f, hi, false));
    }
    unsigned v_lo = detail::sign_changes(at_lo);
    unsigned v_hi = detail::sign_changes(at_hi);
    return v_lo - v_hi;
}

} // namespace miortho
