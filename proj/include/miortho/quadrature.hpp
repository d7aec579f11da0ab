#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

namespace miortho {

/// Gauss-Legendre rule on [-1, 1], nodes by Newton iteration on the Legendre
/// recurrence. Deterministic for a given order.
struct GaussLegendre {
    std::vector<double> nodes;
    std::vector<double> weights;

    explicit GaussLegendre(unsigned order) : nodes(order), weights(order) {
        for (unsigned i = 1; i <= order; ++i) {
            double x = std::cos(M_PI * (i - 0.25) / (order + 0.5));
            double dp = 0.0;
            for (int iter = 0; iter < 100; ++iter) {
                double p0 = 1.0, p1 = x;
                for (unsigned k = 2; k <= order; ++k) {
                    double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                dp = order * (x * p1 - p0) / (x * x - 1.0);
                double step = p1 / dp;
                x -= step;
                if (std::abs(step) < 1e-16) break;
            }
            nodes[i - 1] = x;
            weights[i - 1] = 2.0 / ((1.0 - x * x) * dp * dp);
        }
    }
};

using Panels = std::vector<std::pair<double, double>>;

/// Panels for (0, R]: dyadic grading toward 0 down to 2^-depth, then
/// geometric growth toward R. The grading absorbs an integrable endpoint
/// singularity; the analytic integrand converges geometrically per panel.
inline Panels graded_panels_laguerre(double radius, unsigned depth) {
    Panels panels;
    double hi = 1.0;
    for (unsigned k = 0; k < depth; ++k) {
        double lo = hi / 2;
        panels.emplace_back(lo, hi);
        hi = lo;
    }
    panels.emplace_back(0.0, hi); // final sliver; its mass is below the tail budget
    std::reverse(panels.begin(), panels.end());
    double lo = 1.0;
    while (lo < radius) {
        double next = std::min(radius, lo * 1.5);
        panels.emplace_back(lo, next);
        lo = next;
    }
    return panels;
}

/// Panels for a variable running over (0, top], dyadically graded toward 0.
/// Used for the endpoint substitutions u = (1-eta)/2 and w = (1+eta)/2, whose
/// small values a double represents exactly where 1 - eta would cancel away.
inline Panels graded_panels_endpoint(double top, unsigned depth) {
    Panels panels;
    double hi = top;
    for (unsigned k = 0; k < depth; ++k) {
        panels.emplace_back(hi / 2, hi);
        hi /= 2;
    }
    panels.emplace_back(0.0, hi); // sliver; its mass is below the tail budget
    std::reverse(panels.begin(), panels.end());
    return panels;
}

/// Dyadic depth so the mass left beyond the innermost panel, which scales as
/// (2^-depth)^(exponent+1), stays below ~1e-18 of the local scale.
inline unsigned grading_depth(double endpoint_exponent) {
    const double excess = endpoint_exponent + 1.0; // > 0 for an integrable endpoint
    if (excess <= 0.0) return 600;
    const double depth = 18.0 / (0.30103 * excess) + 8.0;
    return depth > 600.0 ? 600u : static_cast<unsigned>(depth);
}

/// Composite integral over the given panels with fixed summation order
/// (Kahan-compensated), so identical inputs give identical bits.
template <class F>
inline double integrate(const Panels& panels, const GaussLegendre& rule, F&& f) {
    double sum = 0.0, comp = 0.0;
    for (const auto& [lo, hi] : panels) {
        const double mid = 0.5 * (lo + hi);
        const double half = 0.5 * (hi - lo);
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            const double value = half * rule.weights[i] * f(mid + half * rule.nodes[i]);
            const double y = value - comp;
            const double t = sum + y;
            comp = (t - sum) - y;
            sum = t;
        }
    }
    return sum;
}

} // namespace miortho
