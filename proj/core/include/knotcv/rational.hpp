#pragma once

#include <gmpxx.h>

#include <string>

#include "knotcv/error.hpp"

namespace knotcv {

// Exact rational scalar. mpq_class does not canonicalize two-argument
// constructions, so every entry point below does.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw_input("rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw_input("rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "3", "-3", "3/4" with arbitrary-precision parts.
inline Rational rational_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            Integer n(s);
            return Rational(n);
        }
        Integer n(s.substr(0, slash));
        Integer d(s.substr(slash + 1));
        return make_rational(n, d);
    } catch (const std::invalid_argument&) {
        throw_input("rational: unparsable value '" + s + "'");
    }
}

inline std::string rational_to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline bool is_canonical(const Rational& r) {
    if (r.get_den() <= 0) return false;
    Integer g;
    mpz_gcd(g.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return g == 1;
}

inline double to_double(const Rational& r) { return r.get_d(); }

}  // namespace knotcv
