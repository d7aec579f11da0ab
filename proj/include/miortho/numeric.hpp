#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "miortho/quadrature.hpp"
#include "miortho/routes.hpp"

namespace miortho {

/// Everything the float layer needs for one deformed state: the exact
/// polynomials from the engine plus the shifted parameters of phi-hat_0.
/// All polynomials are computed exactly once; floats only evaluate them.
struct WaveContext {
    SystemParams params;
    IndexSpec index = IndexSpec::empty();
    unsigned n = 0;
    Poly xi;
    Poly p;
    Rational energy;
    Rational g_shifted; // g + M_I - M_II
    Rational h_shifted; // h - M_I + M_II

    static WaveContext make(const SystemParams& params, const IndexSpec& index, unsigned n) {
        MiResult r = route_a(params, index, n);
        WaveContext ctx;
        ctx.params = params;
        ctx.index = index;
        ctx.n = n;
        ctx.xi = std::move(r.xi);
        ctx.p = std::move(r.p);
        ctx.energy = eigen_data(params, n).energy;
        const long shift = static_cast<long>(index.count_type1()) - static_cast<long>(index.count_type2());
        ctx.g_shifted = params.g + shift;
        ctx.h_shifted = params.h - shift;
        return ctx;
    }

    double m_prime() const { return to_double(index.m_prime()); }
};

/// Orthogonality density in eta up to a positive constant:
///   L: e^{-eta} eta^{g^-1/2} / Xi^2        on (0, inf)
///   J: u^{g^-1/2} w^{h^-1/2} / Xi^2        on (-1, 1),  u/w = (1-+eta)/2
inline double weight_density(const WaveContext& ctx, double eta) {
    const double xi = ctx.xi.eval_double(eta);
    if (ctx.params.family == Family::Laguerre) {
        if (!(eta > 0.0)) throw validation_error("weight_density: eta outside (0, inf)");
        return std::exp(-eta) * std::pow(eta, to_double(ctx.g_shifted) - 0.5) / (xi * xi);
    }
    if (!(eta > -1.0 && eta < 1.0)) throw validation_error("weight_density: eta outside (-1, 1)");
    const double u = 0.5 * (1.0 - eta);
    const double w = 0.5 * (1.0 + eta);
    return std::pow(u, to_double(ctx.g_shifted) - 0.5) * std::pow(w, to_double(ctx.h_shifted) - 0.5) /
           (xi * xi);
}

/// Quadrature configuration: composite Gauss-Legendre order, optional fixed
/// truncation radius for the Laguerre tail (0 = pick from the exponents).
struct QuadratureSpec {
    unsigned order = 32;
    double radius = 0.0;
};

struct OrthoResult {
    double normalized = 0.0;  // |<P_n, P_m>| / sqrt(<P_n,P_n><P_m,P_m>)
    double norm_n = 0.0;
    double norm_m = 0.0;
    double tail_estimate = 0.0;
    double quad_error = 0.0; // rule-order comparison, relative to the norm scale
    bool quad_ok = false;    // tail + discretization below 1e-12 of the norm scale
};

/// Normalized cross inner product of P_{D,n} and P_{D,m} under the deformed
/// weight. Quadrature failure is reported separately from non-orthogonality.
inline OrthoResult orthogonality_check(const WaveContext& a, const WaveContext& b,
                                       const QuadratureSpec& spec = {}) {
    if (a.params.family != b.params.family || a.index.entries() != b.index.entries())
        throw validation_error("orthogonality_check: contexts must share the system and index set");
    const double exp_g = to_double(a.g_shifted) - 0.5;
    const double exp_h = to_double(a.h_shifted) - 0.5;

    const GaussLegendre fine(spec.order);
    const GaussLegendre coarse(spec.order > 12 ? spec.order - 12 : spec.order);

    double radius = spec.radius;
    // One full integral of W * pa * pb for a given rule. The Jacobi endpoint
    // neighborhoods are integrated in the substituted variables u = (1-eta)/2
    // and w = (1+eta)/2 so the endpoint powers never suffer cancellation.
    auto inner_product = [&](const Poly& pa, const Poly& pb, const GaussLegendre& rule) {
        auto core = [&](double eta, double u, double w) {
            const double xi = a.xi.eval_double(eta);
            double weight;
            if (a.params.family == Family::Laguerre)
                weight = std::exp(-eta) * std::pow(eta, exp_g);
            else
                weight = std::pow(u, exp_g) * std::pow(w, exp_h);
            return weight / (xi * xi) * pa.eval_double(eta) * pb.eval_double(eta);
        };
        if (a.params.family == Family::Laguerre) {
            return integrate(graded_panels_laguerre(radius, grading_depth(exp_g)), rule,
                             [&](double eta) { return core(eta, 0.0, 0.0); });
        }
        double total = integrate(Panels{{-0.5, 0.0}, {0.0, 0.5}}, rule, [&](double eta) {
            return core(eta, 0.5 * (1.0 - eta), 0.5 * (1.0 + eta));
        });
        total += 2.0 * integrate(graded_panels_endpoint(0.25, grading_depth(exp_g)), rule,
                                 [&](double u) { return core(1.0 - 2.0 * u, u, 1.0 - u); });
        total += 2.0 * integrate(graded_panels_endpoint(0.25, grading_depth(exp_h)), rule,
                                 [&](double w) { return core(2.0 * w - 1.0, 1.0 - w, w); });
        return total;
    };

    if (a.params.family == Family::Laguerre && radius <= 0.0) {
        // fixed point of e^-R R^q = 1e-30: the dropped tail sits far below
        // the norm scale
        const double q =
            std::max(0.0, exp_g + static_cast<double>(a.p.degree().value_or(0) + b.p.degree().value_or(0)));
        radius = 80.0;
        for (int i = 0; i < 40; ++i) radius = 69.1 + q * std::log(radius);
    }

    OrthoResult out;
    const double cross = inner_product(a.p, b.p, fine);
    out.norm_n = inner_product(a.p, a.p, fine);
    out.norm_m = inner_product(b.p, b.p, fine);
    out.normalized = std::abs(cross) / std::sqrt(out.norm_n * out.norm_m);

    const double norm_scale = std::sqrt(out.norm_n * out.norm_m);
    out.quad_error = std::abs(cross - inner_product(a.p, b.p, coarse)) / norm_scale;
    if (a.params.family == Family::Laguerre) {
        const double q =
            std::max(0.0, exp_g + static_cast<double>(a.p.degree().value_or(0) + b.p.degree().value_or(0)));
        out.tail_estimate = 2.0 * std::exp(-radius) * std::pow(radius, q) / norm_scale;
    } else {
        out.tail_estimate = 0.0; // endpoint slivers are inside the panel sets
    }
    out.quad_ok = out.tail_estimate + out.quad_error < 1e-12;
    return out;
}

namespace detail {

// d^2/dx^2 log|Xi(eta(x))| via exact polynomial derivatives of Xi evaluated
// in float, chain rule through eta(x).
inline double log_xi_second_derivative(const WaveContext& ctx, double x) {
    const Poly d1 = ctx.xi.derivative();
    const Poly d2 = d1.derivative();
    double eta, deta, d2eta;
    if (ctx.params.family == Family::Laguerre) {
        eta = x * x;
        deta = 2.0 * x;
        d2eta = 2.0;
    } else {
        eta = std::cos(2.0 * x);
        deta = -2.0 * std::sin(2.0 * x);
        d2eta = -4.0 * std::cos(2.0 * x);
    }
    const double f = ctx.xi.eval_double(eta);
    if (f == 0.0) throw validation_error("deformed potential evaluated at a zero of Xi_D");
    const double r1 = d1.eval_double(eta) / f;
    const double r2 = d2.eval_double(eta) / f;
    return (r2 - r1 * r1) * deta * deta + r1 * d2eta;
}

} // namespace detail

/// Base potential of the undeformed system.
inline double base_potential(const SystemParams& params, double x) {
    const double g = to_double(params.g);
    if (params.family == Family::Laguerre) return x * x + g * (g - 1.0) / (x * x) - 2.0 * g - 1.0;
    const double h = to_double(params.h);
    const double s = std::sin(x), c = std::cos(x);
    return g * (g - 1.0) / (s * s) + h * (h - 1.0) / (c * c) - (g + h) * (g + h);
}

/// Deformed potential U_D(x) = U(x) - 2 (log|W|)'' with log W decomposed into
/// log Xi_D plus elementary terms, all differentiated analytically.
inline double deformed_potential(const WaveContext& ctx, double x) {
    const double g = to_double(ctx.params.g);
    const double mp = ctx.m_prime();
    const double log_xi_dd = detail::log_xi_second_derivative(ctx, x);
    if (ctx.params.family == Family::Laguerre) {
        if (!(x > 0.0)) throw validation_error("deformed_potential: x outside (0, inf)");
        return base_potential(ctx.params, x) - 2.0 * log_xi_dd +
               4.0 * mp * (mp + g - 0.5) / (x * x) - 4.0 * mp;
    }
    if (!(x > 0.0 && x < M_PI / 2)) throw validation_error("deformed_potential: x outside (0, pi/2)");
    const double h = to_double(ctx.params.h);
    const double s = std::sin(x), c = std::cos(x);
    return base_potential(ctx.params, x) - 2.0 * log_xi_dd +
           4.0 * mp * (mp + g - 0.5) / (s * s) + 4.0 * mp * (mp - h + 0.5) / (c * c);
}

/// log |W[phi~_{d_1},...,phi~_{d_M}](x)| assembled from Xi_D and the
/// elementary prefactor of its x-space Wronskian representation. Used as the
/// finite-difference target when cross-checking the analytic log-derivatives.
inline double log_wronskian_abs(const WaveContext& ctx, double x) {
    const std::size_t m = ctx.index.size();
    const double g = to_double(ctx.params.g);
    const double mp = ctx.m_prime();
    const double cf = ctx.params.family == Family::Laguerre ? 2.0 : 4.0;
    double out = 0.5 * static_cast<double>(m * (m - 1)) * std::log(cf);
    if (ctx.params.family == Family::Laguerre) {
        const double eta = x * x;
        out += std::log(std::abs(ctx.xi.eval_double(eta)));
        out += mp * (mp + g - 0.5) * std::log(eta) + mp * eta;
    } else {
        const double h = to_double(ctx.params.h);
        const double eta = std::cos(2.0 * x);
        const double s = std::sin(x), c = std::cos(x);
        out += std::log(std::abs(ctx.xi.eval_double(eta)));
        out += 2.0 * mp * (mp + g - 0.5) * std::log(s) + 2.0 * mp * (mp - h + 0.5) * std::log(c);
    }
    return out;
}

/// Deformed eigenfunction phi_{D,n}(x) = c_F^M phi-hat_0(x) P(eta)/Xi(eta).
inline double wavefunction(const WaveContext& ctx, double x) {
    const double gs = to_double(ctx.g_shifted);
    const double cf = to_double(family_constant(ctx.params.family));
    double phi0, eta;
    if (ctx.params.family == Family::Laguerre) {
        eta = x * x;
        phi0 = std::exp(-0.5 * x * x) * std::pow(x, gs);
    } else {
        eta = std::cos(2.0 * x);
        phi0 = std::pow(std::sin(x), gs) * std::pow(std::cos(x), to_double(ctx.h_shifted));
    }
    const double xi = ctx.xi.eval_double(eta);
    if (xi == 0.0) throw validation_error("wavefunction evaluated at a zero of Xi_D");
    return std::pow(cf, static_cast<double>(ctx.index.size())) * phi0 * ctx.p.eval_double(eta) / xi;
}

/// Fixed sample quantiles, never random: evenly spaced in [0.4, 2.6] for the
/// half line, in (0.08, 0.92) * pi/2 for the Jacobi box.
inline std::vector<double> default_sample_points(Family family, unsigned count) {
    std::vector<double> xs(count);
    const double lo = family == Family::Laguerre ? 0.4 : 0.08 * (M_PI / 2);
    const double hi = family == Family::Laguerre ? 2.6 : 0.92 * (M_PI / 2);
    for (unsigned i = 0; i < count; ++i)
        xs[i] = count == 1 ? lo : lo + (hi - lo) * i / (count - 1);
    return xs;
}

/// Max over samples of |-phi'' + U_D phi - E phi| / ((|E|+1) max|phi|), with
/// phi'' from the 5-point central stencil at step h. The whole stencil must
/// stay inside the physical domain.
inline double schrodinger_residual(const WaveContext& ctx, std::span<const double> xs, double h) {
    const double hi =
        ctx.params.family == Family::Laguerre ? std::numeric_limits<double>::infinity() : M_PI / 2;
    for (double x : xs) {
        if (!(x - 2 * h > 0.0 && x + 2 * h < hi))
            throw validation_error("stencil step too large: sample leaves the physical domain");
    }
    double max_abs_phi = 0.0;
    double max_defect = 0.0;
    const double e = to_double(ctx.energy);
    for (double x : xs) {
        const double fm2 = wavefunction(ctx, x - 2 * h);
        const double fm1 = wavefunction(ctx, x - h);
        const double f0 = wavefunction(ctx, x);
        const double fp1 = wavefunction(ctx, x + h);
        const double fp2 = wavefunction(ctx, x + 2 * h);
        const double second = (-fm2 + 16 * fm1 - 30 * f0 + 16 * fp1 - fp2) / (12 * h * h);
        const double defect = std::abs(-second + (deformed_potential(ctx, x) - e) * f0);
        max_abs_phi = std::max(max_abs_phi, std::abs(f0));
        max_defect = std::max(max_defect, defect);
    }
    return max_defect / ((std::abs(e) + 1.0) * max_abs_phi);
}

namespace detail {

// x-space quasi-function for the Laguerre family: e^{s x^2/2} x^p q(x),
// closed under d/dx with p dropping by one.
struct XFuncL {
    double s = 0.0;
    double p = 0.0;
    std::vector<long double> q;

    XFuncL derived() const {
        XFuncL out;
        out.s = s;
        out.p = p - 1.0;
        out.q.assign(q.size() + 2, 0.0L);
        for (std::size_t k = 0; k < q.size(); ++k) {
            out.q[k + 2] += static_cast<long double>(s) * q[k];
            out.q[k] += (static_cast<long double>(p) + k) * q[k];
        }
        return out;
    }

    long double eval(double x) const {
        long double acc = 0.0L;
        for (std::size_t k = q.size(); k-- > 0;) acc = acc * x + q[k];
        return std::exp(0.5L * s * x * x) * std::pow(static_cast<long double>(x), static_cast<long double>(p)) * acc;
    }
};

// x-space quasi-function for the Jacobi family:
// (sin x)^a (cos x)^b sum T[i][j] sin^i cos^j, closed under d/dx.
struct XFuncJ {
    double a = 0.0;
    double b = 0.0;
    std::vector<std::vector<long double>> t; // t[i][j]

    XFuncJ derived() const {
        XFuncJ out;
        out.a = a - 1.0;
        out.b = b - 1.0;
        const std::size_t rows = t.size();
        const std::size_t cols = rows ? t[0].size() : 0;
        out.t.assign(rows + 2, std::vector<long double>(cols + 2, 0.0L));
        for (std::size_t i = 0; i < rows; ++i) {
            for (std::size_t j = 0; j < cols; ++j) {
                if (t[i][j] == 0.0L) continue;
                out.t[i][j + 2] += (static_cast<long double>(a) + i) * t[i][j];
                out.t[i + 2][j] -= (static_cast<long double>(b) + j) * t[i][j];
            }
        }
        return out;
    }

    long double eval(double x) const {
        const long double s = std::sin(static_cast<long double>(x));
        const long double c = std::cos(static_cast<long double>(x));
        long double acc = 0.0L;
        for (std::size_t i = t.size(); i-- > 0;) {
            long double row = 0.0L;
            for (std::size_t j = t[i].size(); j-- > 0;) row = row * c + t[i][j];
            acc = acc * s + row;
        }
        return std::pow(s, static_cast<long double>(a)) * std::pow(c, static_cast<long double>(b)) * acc;
    }
};

inline std::vector<long double> even_poly_coeffs(const Poly& p) {
    std::vector<long double> q(p.coeffs().size() ? 2 * p.coeffs().size() - 1 : 0, 0.0L);
    for (std::size_t k = 0; k < p.coeffs().size(); ++k)
        q[2 * k] = p.coeffs()[k].convert_to<long double>();
    return q;
}

// T(s,c) = poly(eta) at eta = c^2 - s^2, expanded binomially.
inline std::vector<std::vector<long double>> bivariate_from_eta_poly(const Poly& p) {
    const std::size_t deg = p.coeffs().empty() ? 0 : p.coeffs().size() - 1;
    std::vector<std::vector<long double>> t(2 * deg + 1, std::vector<long double>(2 * deg + 1, 0.0L));
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
        const long double ck = p.coeffs()[k].convert_to<long double>();
        if (ck == 0.0L) continue;
        long double binom = 1.0L;
        for (std::size_t j = 0; j <= k; ++j) { // (c^2 - s^2)^k term: C(k,j) c^{2j} (-s^2)^{k-j}
            const long double sign = (k - j) % 2 ? -1.0L : 1.0L;
            t[2 * (k - j)][2 * j] += ck * sign * binom;
            binom = binom * static_cast<long double>(k - j) / static_cast<long double>(j + 1);
        }
    }
    return t;
}

inline long double det_long_double(std::vector<std::vector<long double>> m) {
    const std::size_t n = m.size();
    long double det = 1.0L;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        for (std::size_t r = k + 1; r < n; ++r)
            if (std::abs(m[r][k]) > std::abs(m[piv][k])) piv = r;
        if (m[piv][k] == 0.0L) return 0.0L;
        if (piv != k) {
            std::swap(m[piv], m[k]);
            det = -det;
        }
        det *= m[k][k];
        for (std::size_t r = k + 1; r < n; ++r) {
            const long double f = m[r][k] / m[k][k];
            for (std::size_t c = k; c < n; ++c) m[r][c] -= f * m[k][c];
        }
    }
    return det;
}

template <class XFunc>
inline long double x_wronskian(std::vector<XFunc> funcs, double x0) {
    const std::size_t s = funcs.size();
    std::vector<std::vector<long double>> m(s, std::vector<long double>(s));
    for (std::size_t k = 0; k < s; ++k) {
        XFunc cur = funcs[k];
        for (std::size_t j = 0; j < s; ++j) {
            m[j][k] = cur.eval(x0);
            if (j + 1 < s) cur = cur.derived();
        }
    }
    return det_long_double(std::move(m));
}

inline long double cf_power(Family family, std::size_t e) {
    long double r = 1.0L;
    const long double cf = family == Family::Laguerre ? 2.0L : -4.0L;
    for (std::size_t k = 0; k < e; ++k) r *= cf;
    return r;
}

} // namespace detail

struct XWronskianCheck {
    double err_xi = 0.0; // M-row Wronskian against the Xi_D normalization
    double err_p = 0.0;  // (M+1)-row Wronskian against the P_{D,n} normalization
};

/// Float validation of the x-space Wronskian normalizations: the Wronskian of
/// the virtual state wavefunctions (and the eigenfunction), computed by
/// analytic derivative recursion, must match c_F powers times the elementary
/// prefactor times Xi_D (resp. P_{D,n}).
inline XWronskianCheck validate_x_wronskian(const WaveContext& ctx, double x0) {
    const std::size_t m = ctx.index.size();
    const double g = to_double(ctx.params.g);
    const double h = to_double(ctx.params.h);
    const double mp = ctx.m_prime();

    XWronskianCheck out;
    auto rel_err = [](long double lhs, long double rhs) {
        const long double scale = std::max(std::abs(rhs), 1e-280L);
        return static_cast<double>(std::abs(lhs - rhs) / scale);
    };

    if (ctx.params.family == Family::Laguerre) {
        const double eta0 = x0 * x0;
        std::vector<detail::XFuncL> funcs;
        funcs.reserve(m + 1);
        for (const auto& e : ctx.index.entries()) {
            const VirtualState vs = virtual_state(ctx.params, e.v, e.type);
            detail::XFuncL f;
            f.s = e.type == SeedType::I ? 1.0 : -1.0;
            f.p = e.type == SeedType::I ? g : 1.0 - g;
            f.q = detail::even_poly_coeffs(vs.xi);
            funcs.push_back(std::move(f));
        }
        const long double lhs_xi = detail::x_wronskian(funcs, x0);
        const long double rhs_xi = detail::cf_power(ctx.params.family, m * (m - 1) / 2) *
                                   static_cast<long double>(ctx.xi.eval_double(eta0)) *
                                   std::pow(static_cast<long double>(eta0), mp * (mp + g - 0.5)) *
                                   std::exp(static_cast<long double>(mp * eta0));
        out.err_xi = m == 0 ? 0.0 : rel_err(lhs_xi, rhs_xi);

        detail::XFuncL fn;
        fn.s = -1.0;
        fn.p = g;
        fn.q = detail::even_poly_coeffs(eigen_data(ctx.params, ctx.n).p);
        funcs.push_back(std::move(fn));
        const long double lhs_p = detail::x_wronskian(funcs, x0);
        const long double rhs_p = detail::cf_power(ctx.params.family, m * (m + 1) / 2) *
                                  static_cast<long double>(ctx.p.eval_double(eta0)) *
                                  std::pow(static_cast<long double>(eta0), (mp + 0.5) * (mp + g)) *
                                  std::exp(static_cast<long double>((mp - 0.5) * eta0));
        out.err_p = rel_err(lhs_p, rhs_p);
        return out;
    }

    const double eta0 = std::cos(2.0 * x0);
    const double u0 = 0.5 * (1.0 - eta0);
    const double w0 = 0.5 * (1.0 + eta0);
    std::vector<detail::XFuncJ> funcs;
    funcs.reserve(m + 1);
    for (const auto& e : ctx.index.entries()) {
        const VirtualState vs = virtual_state(ctx.params, e.v, e.type);
        detail::XFuncJ f;
        f.a = e.type == SeedType::I ? g : 1.0 - g;
        f.b = e.type == SeedType::I ? 1.0 - h : h;
        f.t = detail::bivariate_from_eta_poly(vs.xi);
        funcs.push_back(std::move(f));
    }
    const long double lhs_xi = detail::x_wronskian(funcs, x0);
    const long double rhs_xi = detail::cf_power(ctx.params.family, m * (m - 1) / 2) *
                               static_cast<long double>(ctx.xi.eval_double(eta0)) *
                               std::pow(static_cast<long double>(u0), mp * (mp + g - 0.5)) *
                               std::pow(static_cast<long double>(w0), mp * (mp - h + 0.5));
    out.err_xi = m == 0 ? 0.0 : rel_err(lhs_xi, rhs_xi);

    detail::XFuncJ fn;
    fn.a = g;
    fn.b = h;
    fn.t = detail::bivariate_from_eta_poly(eigen_data(ctx.params, ctx.n).p);
    funcs.push_back(std::move(fn));
    const long double lhs_p = detail::x_wronskian(funcs, x0);
    const long double rhs_p = detail::cf_power(ctx.params.family, m * (m + 1) / 2) *
                              static_cast<long double>(ctx.p.eval_double(eta0)) *
                              std::pow(static_cast<long double>(u0), (mp + 0.5) * (mp + g)) *
                              std::pow(static_cast<long double>(w0), (mp - 0.5) * (mp - h));
    out.err_p = rel_err(lhs_p, rhs_p);
    return out;
}

} // namespace miortho
