#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "miortho/errors.hpp"
#include "miortho/rational.hpp"

namespace miortho {

/// Dense univariate polynomial in eta over Rational, stored with ascending
/// coefficients and kept canonical (no trailing zero coefficient). The zero
/// polynomial has an empty coefficient vector and no degree.
class Poly {
public:
    Poly() = default;

    explicit Poly(Rational constant) {
        if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
    }

    explicit Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Poly zero() { return Poly(); }
    static Poly one() { return Poly(Rational(1)); }

    // c * eta^k
    static Poly monomial(std::size_t k, Rational c = Rational(1)) {
        if (c.is_zero()) return Poly();
        std::vector<Rational> v(k + 1);
        v[k] = std::move(c);
        return Poly(std::move(v));
    }

    bool is_zero() const { return coeffs_.empty(); }

    // degree(zero) is "no value", never a number.
    std::optional<std::size_t> degree() const {
        if (coeffs_.empty()) return std::nullopt;
        return coeffs_.size() - 1;
    }

    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Rational coeff(std::size_t k) const {
        return k < coeffs_.size() ? coeffs_[k] : Rational(0);
    }

    const Rational& leading() const {
        if (coeffs_.empty()) throw validation_error("leading coefficient of the zero polynomial");
        return coeffs_.back();
    }

    Poly& operator+=(const Poly& o) {
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
        trim();
        return *this;
    }

    Poly& operator-=(const Poly& o) {
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
        trim();
        return *this;
    }

    Poly& operator*=(const Rational& c) {
        if (c.is_zero()) {
            coeffs_.clear();
            return *this;
        }
        for (auto& a : coeffs_) a *= c;
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return Poly(std::move(out));
    }

    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly operator-() const {
        Poly r = *this;
        for (auto& a : r.coeffs_) a = -a;
        return r;
    }

    // Formal d/deta.
    Poly derivative() const {
        if (coeffs_.size() <= 1) return Poly();
        std::vector<Rational> out(coeffs_.size() - 1);
        for (std::size_t k = 1; k < coeffs_.size(); ++k) out[k - 1] = coeffs_[k] * static_cast<int>(k);
        return Poly(std::move(out));
    }

    // eta -> -eta: coefficient k picks up (-1)^k.
    Poly reflected() const {
        Poly r = *this;
        for (std::size_t k = 1; k < r.coeffs_.size(); k += 2) r.coeffs_[k] = -r.coeffs_[k];
        return r;
    }

    Rational eval(const Rational& x) const {
        Rational acc = 0;
        for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * x + coeffs_[k];
        return acc;
    }

    double eval_double(double x) const {
        long double acc = 0;
        for (std::size_t k = coeffs_.size(); k-- > 0;)
            acc = acc * x + coeffs_[k].convert_to<long double>();
        return static_cast<double>(acc);
    }

    bool operator==(const Poly&) const = default;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

// Quotient and remainder of p by q over the rationals, p = div * q + rem.
inline std::pair<Poly, Poly> poly_divmod(const Poly& p, const Poly& q) {
    if (q.is_zero()) throw validation_error("polynomial division by zero");
    Poly rem = p;
    Poly quot;
    const std::size_t dq = *q.degree();
    while (!rem.is_zero() && *rem.degree() >= dq) {
        const std::size_t k = *rem.degree() - dq;
        Poly t = Poly::monomial(k, rem.leading() / q.leading());
        quot += t;
        rem -= t * q;
    }
    return {quot, rem};
}

// Exact division: returns r with p = q * r, else throws. A failure here
// signals a transcription bug in a formula, never a data problem.
inline Poly exact_divide(const Poly& p, const Poly& q) {
    auto [quot, rem] = poly_divmod(p, q);
    if (!rem.is_zero()) throw non_exact_division("polynomial division left a nonzero remainder");
    return quot;
}

inline Poly poly_pow(const Poly& base, unsigned e) {
    Poly r = Poly::one();
    for (unsigned k = 0; k < e; ++k) r *= base;
    return r;
}

inline std::string to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
        if (k) out += ", ";
        out += p.coeffs()[k].str();
    }
    return "[" + out + "]";
}

} // namespace miortho
