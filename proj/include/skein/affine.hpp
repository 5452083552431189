#pragma once

#include <map>
#include <optional>
#include <string>

#include "skein/rational.hpp"

namespace skein {

// Affine expression  sum_i  coeff_i * param_i  +  constant  with rational
// coefficients. Weight parameters are measured in chi = alpha/k units
// throughout the library, so the module V_alpha is handled as V(chi) and a
// color shift "alpha + epsilon k" is simply chi + epsilon.
struct Affine {
    std::map<int, Rational> coeffs; // param id -> coefficient, no zero entries
    Rational constant{0};

    Affine() = default;
    /*implicit*/ Affine(const Rational& c) : constant(c) {}
    /*implicit*/ Affine(long c) : constant(c) {}

    static Affine param(int id, const Rational& coeff = 1) {
        Affine a;
        if (coeff != 0) a.coeffs[id] = coeff;
        return a;
    }

    bool is_constant() const { return coeffs.empty(); }

    Affine& operator+=(const Affine& o) {
        for (const auto& [id, c] : o.coeffs) {
            Rational& mine = coeffs[id];
            mine += c;
            if (mine == 0) coeffs.erase(id);
        }
        constant += o.constant;
        return *this;
    }
    Affine& operator-=(const Affine& o) { return *this += o * Rational(-1); }

    Affine operator+(const Affine& o) const { Affine r = *this; r += o; return r; }
    Affine operator-(const Affine& o) const { Affine r = *this; r -= o; return r; }
    Affine operator-() const { return *this * Rational(-1); }

    Affine operator*(const Rational& s) const {
        Affine r;
        if (s != 0) {
            for (const auto& [id, c] : coeffs) r.coeffs[id] = c * s;
            r.constant = constant * s;
        }
        return r;
    }

    bool operator==(const Affine& o) const { return coeffs == o.coeffs && constant == o.constant; }
    bool operator!=(const Affine& o) const { return !(*this == o); }
    bool operator<(const Affine& o) const {
        if (constant != o.constant) return constant < o.constant;
        return coeffs < o.coeffs;
    }

    std::string str() const {
        std::string s;
        for (const auto& [id, c] : coeffs) {
            if (!s.empty()) s += "+";
            s += to_string(c) + "*p" + std::to_string(id);
        }
        if (s.empty() || constant != 0) {
            if (!s.empty()) s += "+";
            s += to_string(constant);
        }
        return s;
    }
};

inline Affine operator*(const Rational& s, const Affine& a) { return a * s; }

// Product of two affine expressions when the result is still affine
// (i.e. at least one factor is constant); otherwise nullopt.
inline std::optional<Affine> affine_product(const Affine& a, const Affine& b) {
    if (a.is_constant()) return b * a.constant;
    if (b.is_constant()) return a * b.constant;
    return std::nullopt;
}

} // namespace skein
