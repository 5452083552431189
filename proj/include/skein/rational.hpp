#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "skein/errors.hpp"

namespace skein {

using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

// Truncating conversion; throws if r is not an integer or does not fit.
inline long to_long(const Rational& r) {
    if (!is_integer(r)) throw nonrepresentable_error("expected integer, got " + r.get_str());
    if (!r.get_num().fits_slong_p()) throw nonrepresentable_error("integer overflow: " + r.get_str());
    return r.get_num().get_si();
}

// Parses "p", "p/q" or a decimal like "-1.25".
inline Rational parse_rational(const std::string& s) {
    auto dot = s.find('.');
    if (dot == std::string::npos) {
        Rational r;
        if (r.set_str(s, 10) != 0) throw error("cannot parse rational: " + s);
        r.canonicalize();
        return r;
    }
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    std::string den = "1" + std::string(s.size() - dot - 1, '0');
    Rational r;
    if (r.set_str(digits + "/" + den, 10) != 0) throw error("cannot parse rational: " + s);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline double to_double(const Rational& r) { return r.get_d(); }

// Floor of a rational.
inline long rfloor(const Rational& r) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    if (!q.fits_slong_p()) throw nonrepresentable_error("floor overflow");
    return q.get_si();
}

} // namespace skein
