#pragma once

#include <string>
#include <vector>

#include "miortho/poly.hpp"
#include "miortho/rational.hpp"

namespace miortho {

// (1 - eta)/2 and (1 + eta)/2, the natural Jacobi building blocks.
inline Poly half_one_minus_eta() {
    return Poly(std::vector<Rational>{Rational(1, 2), Rational(-1, 2)});
}
inline Poly half_one_plus_eta() {
    return Poly(std::vector<Rational>{Rational(1, 2), Rational(1, 2)});
}

/// Laguerre polynomial L_n^(alpha) from its terminating series,
///   L_n^(alpha)(eta) = 1/n! sum_k (-n)_k/k! (alpha+k+1)_{n-k} eta^k.
/// Negative n gives the zero polynomial.
inline Poly laguerre(long n, const Rational& alpha) {
    if (n < 0) return Poly();
    const unsigned un = static_cast<unsigned>(n);
    Rational factorial_n = pochhammer(Rational(1), un);
    std::vector<Rational> coeffs(un + 1);
    for (unsigned k = 0; k <= un; ++k) {
        Rational term = pochhammer(Rational(-n), k) / pochhammer(Rational(1), k);
        term *= pochhammer(alpha + static_cast<int>(k) + 1, un - k);
        coeffs[k] = term / factorial_n;
    }
    return Poly(std::move(coeffs));
}

/// Jacobi polynomial P_n^(alpha,beta) from its terminating series. The ratio
/// (alpha+1)_n / (alpha+1)_k is carried as (alpha+k+1)_{n-k} so that every
/// rational parameter value is admissible. Negative n gives zero.
inline Poly jacobi(long n, const Rational& alpha, const Rational& beta) {
    if (n < 0) return Poly();
    const unsigned un = static_cast<unsigned>(n);
    Rational factorial_n = pochhammer(Rational(1), un);
    const Poly u = half_one_minus_eta();
    Poly result;
    Poly u_pow = Poly::one();
    for (unsigned k = 0; k <= un; ++k) {
        Rational c = pochhammer(Rational(-n), k) / pochhammer(Rational(1), k);
        c *= pochhammer(alpha + beta + static_cast<int>(n) + 1, k);
        c *= pochhammer(alpha + static_cast<int>(k) + 1, un - k);
        result += u_pow * (c / factorial_n);
        if (k < un) u_pow *= u;
    }
    return result;
}

struct IdentityReport {
    bool passed = true;
    bool degenerate = false; // parameters lowered a Jacobi degree
    std::vector<std::string> failures;

    void check(bool ok, const std::string& label) {
        if (!ok) {
            passed = false;
            failures.push_back(label);
        }
    }
};

/// Exact checks of the three Laguerre identities used by the derivations:
/// the forward shift, the parameter-lowering difference, and the
/// three-parameter contiguous relation.
inline IdentityReport verify_laguerre_identities(unsigned n, const Rational& alpha) {
    IdentityReport rep;
    const long ln = static_cast<long>(n);
    rep.check(laguerre(ln, alpha).derivative() == -laguerre(ln - 1, alpha + 1),
              "d/deta L_n = -L_{n-1}^{(a+1)}");
    rep.check(laguerre(ln, alpha) - laguerre(ln, alpha - 1) == laguerre(ln - 1, alpha),
              "L_n^{(a)} - L_n^{(a-1)} = L_{n-1}^{(a)}");
    rep.check(Poly::monomial(1) * laguerre(ln - 1, alpha + 1) - alpha * laguerre(ln - 1, alpha) ==
                  Rational(-ln) * laguerre(ln, alpha - 1),
              "eta L_{n-1}^{(a+1)} - a L_{n-1}^{(a)} = -n L_n^{(a-1)}");
    return rep;
}

/// Exact checks of the Jacobi forward shift and the two contiguous relations.
inline IdentityReport verify_jacobi_identities(unsigned n, const Rational& alpha, const Rational& beta) {
    IdentityReport rep;
    const long ln = static_cast<long>(n);
    auto deg = jacobi(ln, alpha, beta).degree();
    rep.degenerate = !deg || *deg < n;

    rep.check(jacobi(ln, alpha, beta).derivative() ==
                  (Rational(ln) + alpha + beta + 1) * Rational(1, 2) * jacobi(ln - 1, alpha + 1, beta + 1),
              "d/deta P_n = (n+a+b+1)/2 P_{n-1}^{(a+1,b+1)}");
    rep.check((Rational(ln) + beta) * jacobi(ln, alpha, beta - 1) - beta * jacobi(ln, alpha - 1, beta) ==
                  (Rational(ln) + alpha + beta) * half_one_plus_eta() * jacobi(ln - 1, alpha, beta + 1),
              "(n+b) P_n^{(a,b-1)} - b P_n^{(a-1,b)} = (n+a+b)(1+eta)/2 P_{n-1}^{(a,b+1)}");
    rep.check((Rational(ln) + alpha) * jacobi(ln, alpha - 1, beta) - alpha * jacobi(ln, alpha, beta - 1) ==
                  -(Rational(ln) + alpha + beta) * half_one_minus_eta() * jacobi(ln - 1, alpha + 1, beta),
              "(n+a) P_n^{(a-1,b)} - a P_n^{(a,b-1)} = -(n+a+b)(1-eta)/2 P_{n-1}^{(a+1,b)}");
    return rep;
}

/// Jacobi parity: P_n^(a,b)(-eta) = (-1)^n P_n^(b,a)(eta), exactly.
inline IdentityReport classical_parity(unsigned n, const Rational& alpha, const Rational& beta) {
    IdentityReport rep;
    const long ln = static_cast<long>(n);
    Poly lhs = jacobi(ln, alpha, beta).reflected();
    Poly rhs = jacobi(ln, beta, alpha);
    if (n % 2 == 1) rhs = -rhs;
    rep.check(lhs == rhs, "P_n^{(a,b)}(-eta) = (-1)^n P_n^{(b,a)}(eta)");
    return rep;
}

} // namespace miortho
