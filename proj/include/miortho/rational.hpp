#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "miortho/errors.hpp"

namespace miortho {

// Exact rational scalar, always stored in lowest terms with positive
// denominator. This is the coefficient field for everything exact.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

// floor(q), exact over arbitrary-precision integers.
inline BigInt floor_int(const Rational& q) {
    BigInt n = numerator(q);
    BigInt d = denominator(q);
    BigInt t = n / d; // truncates toward zero
    if (n < 0 && t * d != n) --t;
    return t;
}

// Rising factorial (a)_k = a (a+1) ... (a+k-1), with (a)_0 = 1.
inline Rational pochhammer(const Rational& a, unsigned k) {
    Rational r = 1;
    for (unsigned j = 0; j < k; ++j) r *= a + static_cast<int>(j);
    return r;
}

inline Rational rational_pow(const Rational& a, long e) {
    if (e < 0) {
        if (a.is_zero()) throw validation_error("rational_pow: 0 raised to negative power");
        return 1 / rational_pow(a, -e);
    }
    Rational r = 1;
    Rational base = a;
    for (long k = e; k > 0; k >>= 1) {
        if (k & 1) r *= base;
        if (k > 1) base *= base;
    }
    return r;
}

inline Rational parse_rational(const std::string& text) {
    try {
        return Rational(text);
    } catch (const std::exception&) {
        throw validation_error("not a rational number: '" + text + "'");
    }
}

inline std::string to_string(const Rational& q) { return q.str(); }

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

} // namespace miortho
