#pragma once

#include <cstddef>
#include <vector>

#include "miortho/matrix.hpp"
#include "miortho/seed.hpp"

namespace miortho {

enum class Route { W, A, B };

inline char route_letter(Route r) {
    switch (r) {
    case Route::W: return 'w';
    case Route::A: return 'a';
    default: return 'b';
    }
}

// c_F: 2 for Laguerre, -4 for Jacobi.
inline Rational family_constant(Family f) { return f == Family::Laguerre ? Rational(2) : Rational(-4); }

/// One constructed pair (Xi_D, P_{D,n}) with its provenance. All three routes
/// must produce bit-identical polynomials, normalization included.
struct MiResult {
    Poly xi;
    Poly p;
    Route route = Route::W;
    SystemParams params;
    IndexSpec index = IndexSpec::empty();
    unsigned n = 0;
};

namespace detail {

// Wronskian of quasi-polynomials, factored as
//   (elementary monomial with the exponents below) x det(polynomial parts).
// Works because each column's exponents drop uniformly with the row index,
// so every expansion term carries the same elementary factor.
struct FactoredWronskian {
    int exp_total = 0;   // e^{eta} net coefficient (Laguerre)
    Rational eta_total;  // net eta exponent (Laguerre)
    Rational u_total;    // net (1-eta)/2 exponent (Jacobi)
    Rational w_total;    // net (1+eta)/2 exponent (Jacobi)
    Poly det;
};

inline FactoredWronskian wronskian_factored(Family family, const std::vector<QuasiPoly>& funcs) {
    const std::size_t s = funcs.size();
    PolyMatrix m(s, s);
    FactoredWronskian out;
    for (std::size_t k = 0; k < s; ++k) {
        QuasiPoly cur = funcs[k];
        if (family == Family::Laguerre) {
            out.exp_total += cur.expcoef;
            out.eta_total += cur.pow_eta;
        } else {
            out.u_total += cur.pow_1m;
            out.w_total += cur.pow_1p;
        }
        for (std::size_t j = 0; j < s; ++j) {
            const long drop = static_cast<long>(j);
            const bool uniform =
                family == Family::Laguerre
                    ? cur.pow_eta == funcs[k].pow_eta - drop
                    : cur.pow_1m == funcs[k].pow_1m - drop && cur.pow_1p == funcs[k].pow_1p - drop;
            if (!uniform) throw exponent_mismatch("quasi-polynomial derivative broke the uniform exponent drop");
            m.at(j, k) = cur.p;
            if (j + 1 < s) cur = cur.derivative();
        }
    }
    const Rational row_shift(static_cast<long>(s * (s - 1) / 2));
    if (family == Family::Laguerre) {
        out.eta_total -= row_shift;
    } else {
        out.u_total -= row_shift;
        out.w_total -= row_shift;
    }
    out.det = poly_determinant(m);
    return out;
}

// Net elementary exponents after folding in the target prefactor must be
// nonpositive integers; the determinant then divides exactly by the residual
// monomial. Anything else is a bookkeeping bug.
inline unsigned residual_power(const Rational& total) {
    if (!is_integer(total) || total > 0)
        throw exponent_mismatch("net elementary exponent is not a nonpositive integer: " + total.str());
    return static_cast<unsigned>((-floor_int(total)).convert_to<unsigned long>());
}

inline Poly divide_eta_power(const Poly& p, unsigned e) {
    return e == 0 ? p : exact_divide(p, Poly::monomial(e));
}

inline Poly divide_uw_powers(const Poly& p, unsigned eu, unsigned ew) {
    Poly r = p;
    if (eu) r = exact_divide(r, poly_pow(half_one_minus_eta(), eu));
    if (ew) r = exact_divide(r, poly_pow(half_one_plus_eta(), ew));
    return r;
}

// Reduce a factored Wronskian against the prefactor exponents of (XiD)/(PDn).
inline Poly settle_wronskian(const SystemParams& params, const FactoredWronskian& fw, bool with_eigen,
                             long m1, long m2) {
    const Rational half(1, 2);
    try {
        if (params.family == Family::Laguerre) {
            const Rational pre_eta = (m1 + params.g + (with_eigen ? half : -half)) * m2;
            if (fw.exp_total - m1 != 0)
                throw exponent_mismatch("exponential factor failed to cancel in route W");
            return divide_eta_power(fw.det, residual_power(fw.eta_total + pre_eta));
        }
        const Rational pre_u = (m1 + params.g + (with_eigen ? half : -half)) * m2;
        const Rational pre_w = (m2 + params.h + (with_eigen ? half : -half)) * m1;
        return divide_uw_powers(fw.det, residual_power(fw.u_total + pre_u),
                                residual_power(fw.w_total + pre_w));
    } catch (const non_exact_division&) {
        throw exponent_mismatch("route W determinant is not divisible by the residual monomial");
    }
}

// Column entry X^{(S)}_{v,j} of the first simplified determinant form; j is
// 1-based, S is the matrix dimension.
inline Poly x_entry(const SystemParams& params, const IndexEntry& e, unsigned j, unsigned s) {
    const Rational g = params.g;
    const Rational h = params.h;
    const Rational half(1, 2);
    const long lv = static_cast<long>(e.v);
    const long lj = static_cast<long>(j);
    const unsigned shift = j - 1;
    const int sign = shift % 2 == 0 ? 1 : -1;

    if (params.family == Family::Laguerre) {
        if (e.type == SeedType::I) return laguerre(lv, g + lj - Rational(3, 2)).reflected();
        Rational c = Rational(sign) * pochhammer(g - half - lv, shift);
        return c * Poly::monomial(s - j) * laguerre(lv, Rational(3, 2) - g - lj);
    }
    const Rational two_pow = rational_pow(Rational(2), static_cast<long>(shift));
    if (e.type == SeedType::I) {
        Rational c = Rational(sign) / two_pow * pochhammer(h - half - lv, shift);
        return c * poly_pow(half_one_plus_eta(), s - j) *
               jacobi(lv, g + lj - Rational(3, 2), Rational(3, 2) - h - lj);
    }
    Rational c = pochhammer(g - half - lv, shift) / two_pow;
    return c * poly_pow(half_one_minus_eta(), s - j) *
           jacobi(lv, Rational(3, 2) - g - lj, h + lj - Rational(3, 2));
}

// Final column Z^{(S)}_{n,j}; vanishes once j outruns n+1.
inline Poly z_entry(const SystemParams& params, unsigned n, unsigned j) {
    const Rational half(1, 2);
    const long lj = static_cast<long>(j);
    const long deg = static_cast<long>(n) + 1 - lj;
    const unsigned shift = j - 1;

    if (params.family == Family::Laguerre) {
        Poly p = laguerre(deg, params.g + lj - Rational(3, 2));
        return shift % 2 == 0 ? p : -p;
    }
    Rational c = pochhammer(Rational(n) + params.g + params.h, shift) /
                 rational_pow(Rational(2), static_cast<long>(shift));
    return c * jacobi(deg, params.g + lj - Rational(3, 2), params.h + lj - Rational(3, 2));
}

} // namespace detail

/// Route W: Wronskian of the seed quasi-polynomials (and P_n), with the
/// elementary prefactors tracked exactly and cancelled against the defining
/// prefactor. The net exponent of every non-polynomial factor must come out
/// zero, which is asserted, not assumed.
inline MiResult route_w(const SystemParams& params, const IndexSpec& index, unsigned n) {
    const long m1 = static_cast<long>(index.count_type1());
    const long m2 = static_cast<long>(index.count_type2());

    std::vector<QuasiPoly> funcs;
    funcs.reserve(index.size() + 1);
    for (const auto& e : index.entries()) funcs.push_back(virtual_state(params, e.v, e.type).mu);

    MiResult out;
    out.route = Route::W;
    out.params = params;
    out.index = index;
    out.n = n;
    out.xi = detail::settle_wronskian(params, detail::wronskian_factored(params.family, funcs),
                                      /*with_eigen=*/false, m1, m2);

    EigenData eig = eigen_data(params, n);
    funcs.push_back(params.family == Family::Laguerre
                        ? QuasiPoly::laguerre_form(0, Rational(0), eig.p)
                        : QuasiPoly::jacobi_form(Rational(0), Rational(0), eig.p));
    out.p = detail::settle_wronskian(params, detail::wronskian_factored(params.family, funcs),
                                     /*with_eigen=*/true, m1, m2);
    return out;
}

/// Route A: derivative-free determinant of the shifted-parameter column
/// vectors X (and Z), divided by the monomial prefactor A.
inline MiResult route_a(const SystemParams& params, const IndexSpec& index, unsigned n) {
    const unsigned m = static_cast<unsigned>(index.size());
    const unsigned em2 = static_cast<unsigned>(index.count_type2());
    const unsigned em1 = m - em2;
    for (const auto& e : index.entries()) validate_seed(params, e.v, e.type);

    auto build = [&](unsigned s, bool with_eigen) {
        PolyMatrix mat(s, s);
        for (unsigned j = 1; j <= s; ++j) {
            for (unsigned k = 0; k < m; ++k)
                mat.at(j - 1, k) = detail::x_entry(params, index.entries()[k], j, s);
            if (with_eigen) mat.at(j - 1, s - 1) = detail::z_entry(params, n, j);
        }
        Poly det = poly_determinant(mat);
        if (params.family == Family::Laguerre) return detail::divide_eta_power(det, em2 * (em2 - 1));
        return detail::divide_uw_powers(det, em2 * (em2 - 1), em1 * (em1 - 1));
    };

    MiResult out;
    out.route = Route::A;
    out.params = params;
    out.index = index;
    out.n = n;
    out.xi = m == 0 ? Poly::one() : build(m, false);
    out.p = build(m + 1, true);
    return out;
}

/// Route B: determinant over the seed polynomials and their zeta reductions,
/// with even-order derivatives traded for energy powers; scaled by the exact
/// c_F power and the floor-bracket monomial prefactor.
inline MiResult route_b(const SystemParams& params, const IndexSpec& index, unsigned n) {
    const unsigned m = static_cast<unsigned>(index.size());

    std::vector<VirtualState> seeds;
    seeds.reserve(m);
    for (const auto& e : index.entries()) seeds.push_back(virtual_state(params, e.v, e.type));
    EigenData eig = eigen_data(params, n);

    auto build = [&](bool with_eigen) {
        const unsigned s = with_eigen ? m + 1 : m;
        PolyMatrix mat(s, s);
        for (unsigned r = 1; r <= s; ++r) {
            const unsigned power = (r - 1) / 2; // l - 1
            const bool odd_row = r % 2 == 1;
            for (unsigned k = 0; k < m; ++k) {
                Rational scale = rational_pow(-seeds[k].energy, power);
                mat.at(r - 1, k) = scale * (odd_row ? seeds[k].xi : seeds[k].zeta_tilde);
            }
            if (with_eigen) {
                Rational scale = rational_pow(-eig.energy, power);
                mat.at(r - 1, s - 1) = scale * (odd_row ? eig.p : eig.zeta);
            }
        }
        Poly det = poly_determinant(mat);
        det *= 1 / rational_pow(family_constant(params.family), static_cast<long>(s) * (s - 1) / 2);

        // floor-bracket exponents of the prefactor A
        const long fm = floor_int(index.m_prime()).convert_to<long>();
        const long fmn = floor_int(-index.m_prime()).convert_to<long>();
        const long parity = static_cast<long>(m % 2); // M - 2[M/2]
        const long e_lo = with_eigen ? (fm + 1) * (fm + parity) : fm * (fm + parity);
        const long e_hi = with_eigen ? (fmn + 1) * (fmn + parity) : fm * (fm + parity);
        if (e_lo < 0 || e_hi < 0) throw exponent_mismatch("negative floor-bracket exponent");
        if (params.family == Family::Laguerre)
            return detail::divide_eta_power(det, static_cast<unsigned>(e_lo));
        return detail::divide_uw_powers(det, static_cast<unsigned>(e_lo), static_cast<unsigned>(e_hi));
    };

    MiResult out;
    out.route = Route::B;
    out.params = params;
    out.index = index;
    out.n = n;
    out.xi = build(false);
    out.p = build(true);
    return out;
}

inline MiResult run_route(Route r, const SystemParams& params, const IndexSpec& index, unsigned n) {
    switch (r) {
    case Route::W: return route_w(params, index, n);
    case Route::A: return route_a(params, index, n);
    default: return route_b(params, index, n);
    }
}

} // namespace miortho
