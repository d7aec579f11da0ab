#pragma once

#include <vector>

#include "miortho/classical.hpp"
#include "miortho/poly.hpp"
#include "miortho/system.hpp"

namespace miortho {

/// Elementary prefactor times a polynomial:
///   Laguerre: e^{a eta} eta^b p(eta)
///   Jacobi:   ((1-eta)/2)^c ((1+eta)/2)^d p(eta)
/// Closed under formal d/deta with every power exponent dropping by exactly
/// one per derivative (the polynomial part absorbs whatever remains). That
/// uniform drop is what lets a Wronskian of these factor into one overall
/// monomial times a determinant of plain polynomials.
struct QuasiPoly {
    Family family = Family::Laguerre;
    int expcoef = 0;  // a, Laguerre only
    Rational pow_eta; // b, Laguerre only
    Rational pow_1m;  // c, Jacobi only
    Rational pow_1p;  // d, Jacobi only
    Poly p;

    static QuasiPoly laguerre_form(int a, Rational b, Poly p) {
        return QuasiPoly{Family::Laguerre, a, std::move(b), Rational(0), Rational(0), std::move(p)};
    }
    static QuasiPoly jacobi_form(Rational c, Rational d, Poly p) {
        return QuasiPoly{Family::Jacobi, 0, Rational(0), std::move(c), std::move(d), std::move(p)};
    }

    QuasiPoly derivative() const {
        QuasiPoly out = *this;
        if (family == Family::Laguerre) {
            // e^{a eta} eta^{b-1} (a eta p + b p + eta p')
            Poly eta = Poly::monomial(1);
            out.p = Rational(expcoef) * (eta * p) + pow_eta * p + eta * p.derivative();
            out.pow_eta -= 1;
        } else {
            // u^{c-1} w^{d-1} (-(c/2) w p + (d/2) u p + u w p'),  u=(1-eta)/2, w=(1+eta)/2
            Poly u = half_one_minus_eta();
            Poly w = half_one_plus_eta();
            out.p = (-pow_1m / 2) * (w * p) + (pow_1p / 2) * (u * p) + u * w * p.derivative();
            out.pow_1m -= 1;
            out.pow_1p -= 1;
        }
        return out;
    }

    bool operator==(const QuasiPoly&) const = default;
};

/// Seed data for one virtual state: the polynomial xi_v, the quasi-polynomial
/// mu_v it sits inside, the (negative) energy, and the first-derivative
/// reduction polynomial zeta-tilde.
struct VirtualState {
    unsigned v = 0;
    SeedType type = SeedType::I;
    Poly xi;
    QuasiPoly mu;
    Rational energy;
    Poly zeta_tilde;
};

inline VirtualState virtual_state(const SystemParams& params, unsigned v, SeedType type) {
    validate_seed(params, v, type);
    const Rational g = params.g;
    const Rational h = params.h;
    const Rational half(1, 2);
    const long lv = static_cast<long>(v);
    const Poly eta = Poly::monomial(1);

    VirtualState s;
    s.v = v;
    s.type = type;
    if (params.family == Family::Laguerre) {
        if (type == SeedType::I) {
            s.xi = laguerre(lv, g - half).reflected();
            s.energy = -4 * (g + lv + half);
            s.zeta_tilde = Rational(2) * eta * laguerre(lv, g + half).reflected();
            s.mu = QuasiPoly::laguerre_form(1, Rational(0), s.xi);
        } else {
            s.xi = laguerre(lv, half - g);
            s.energy = -4 * (g - lv - half);
            s.zeta_tilde = Rational(-2) * (g - half - lv) * laguerre(lv, -g - half);
            s.mu = QuasiPoly::laguerre_form(0, half - g, s.xi);
        }
    } else {
        Poly one_minus(std::vector<Rational>{Rational(1), Rational(-1)});
        Poly one_plus(std::vector<Rational>{Rational(1), Rational(1)});
        if (type == SeedType::I) {
            s.xi = jacobi(lv, g - half, half - h);
            s.energy = -4 * (g + lv + half) * (h - lv - half);
            s.zeta_tilde = (h - half - lv) * one_minus * jacobi(lv, g + half, -h - half);
            s.mu = QuasiPoly::jacobi_form(Rational(0), half - h, s.xi);
        } else {
            s.xi = jacobi(lv, half - g, h - half);
            s.energy = -4 * (g - lv - half) * (h + lv + half);
            s.zeta_tilde = -(g - half - lv) * one_plus * jacobi(lv, -g - half, h + half);
            s.mu = QuasiPoly::jacobi_form(half - g, Rational(0), s.xi);
        }
    }
    return s;
}

/// Eigenstate data: the classical polynomial P_n, its energy, and the
/// first-derivative reduction polynomial zeta_n.
struct EigenData {
    Poly p;
    Rational energy;
    Poly zeta;
};

inline EigenData eigen_data(const SystemParams& params, unsigned n) {
    const Rational g = params.g;
    const Rational h = params.h;
    const Rational half(1, 2);
    const long ln = static_cast<long>(n);

    EigenData e;
    if (params.family == Family::Laguerre) {
        e.p = laguerre(ln, g - half);
        e.energy = Rational(4 * ln);
        e.zeta = Rational(-2) * Poly::monomial(1) * laguerre(ln - 1, g + half);
    } else {
        e.p = jacobi(ln, g - half, h - half);
        e.energy = 4 * ln * (ln + g + h);
        Poly one_minus_eta_sq(std::vector<Rational>{Rational(1), Rational(0), Rational(-1)});
        e.zeta = Rational(-1, 2) * (ln + g + h) * one_minus_eta_sq * jacobi(ln - 1, g + half, h + half);
    }
    return e;
}

/// (j-1)-th derivative of mu_v by repeated formal differentiation.
inline QuasiPoly mu_derivative_formal(const SystemParams& params, unsigned v, SeedType type, unsigned j) {
    if (j < 1) throw validation_error("mu_derivative needs j >= 1");
    QuasiPoly q = virtual_state(params, v, type).mu;
    for (unsigned k = 1; k < j; ++k) q = q.derivative();
    return q;
}

/// (j-1)-th derivative of mu_v from the closed-form shift of the seed
/// polynomial's parameters, emitted in the same uniform representation the
/// formal derivative produces (all power exponents lowered j-1 times).
inline QuasiPoly mu_derivative_closed(const SystemParams& params, unsigned v, SeedType type, unsigned j) {
    if (j < 1) throw validation_error("mu_derivative needs j >= 1");
    validate_seed(params, v, type);
    const Rational g = params.g;
    const Rational h = params.h;
    const Rational half(1, 2);
    const long lv = static_cast<long>(v);
    const unsigned shift = j - 1;
    const int sign = shift % 2 == 0 ? 1 : -1;
    const Rational two_pow = rational_pow(Rational(2), static_cast<long>(shift));

    if (params.family == Family::Laguerre) {
        if (type == SeedType::I) {
            Poly p = poly_pow(Poly::monomial(1), shift) *
                     laguerre(lv, g + static_cast<long>(j) - Rational(3, 2)).reflected();
            return QuasiPoly::laguerre_form(1, -Rational(shift), std::move(p));
        }
        Rational c = Rational(sign) * pochhammer(g - half - lv, shift);
        Poly p = c * laguerre(lv, Rational(3, 2) - g - static_cast<long>(j));
        return QuasiPoly::laguerre_form(0, half - g - shift, std::move(p));
    }
    if (type == SeedType::I) {
        Rational c = Rational(sign) / two_pow * pochhammer(h - half - lv, shift);
        Poly p = c * poly_pow(half_one_minus_eta(), shift) *
                 jacobi(lv, g + static_cast<long>(j) - Rational(3, 2), Rational(3, 2) - h - static_cast<long>(j));
        return QuasiPoly::jacobi_form(-Rational(shift), half - h - shift, std::move(p));
    }
    Rational c = pochhammer(g - half - lv, shift) / two_pow;
    Poly p = c * poly_pow(half_one_plus_eta(), shift) *
             jacobi(lv, Rational(3, 2) - g - static_cast<long>(j), h + static_cast<long>(j) - Rational(3, 2));
    return QuasiPoly::jacobi_form(half - g - shift, -Rational(shift), std::move(p));
}

} // namespace miortho
