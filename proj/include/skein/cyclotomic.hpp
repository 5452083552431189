#pragma once

#include <complex>
#include <cmath>
#include <memory>
#include <vector>

#include "skein/rational.hpp"

namespace skein {

namespace detail {

using Poly = std::vector<Rational>; // coefficient list, index = degree

inline void poly_trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    poly_trim(r);
    return r;
}

// Quotient of an exact division a / b (asserted remainder zero for our uses
// in the cyclotomic polynomial construction); general remainder division.
inline void poly_divmod(Poly a, const Poly& b, Poly& quot, Poly& rem) {
    quot.assign(a.size(), Rational(0));
    while (a.size() >= b.size() && !a.empty()) {
        Rational c = a.back() / b.back();
        size_t shift = a.size() - b.size();
        quot[shift] = c;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        poly_trim(a);
        if (!a.empty() && a.size() >= b.size() && a.back() == 0) poly_trim(a);
    }
    rem = a;
    poly_trim(quot);
}

// x^n - 1
inline Poly poly_xn_minus_1(long n) {
    Poly p(n + 1, Rational(0));
    p[0] = -1;
    p[n] = 1;
    return p;
}

// The M-th cyclotomic polynomial via Phi_M(x) = prod_{d|M} (x^{M/d}-1)^{mu(d)}.
inline Poly cyclotomic_poly(long M) {
    auto mobius = [](long n) {
        int m = 1;
        for (long p = 2; p * p <= n; ++p) {
            if (n % p == 0) {
                n /= p;
                if (n % p == 0) return 0;
                m = -m;
            }
        }
        if (n > 1) m = -m;
        return m;
    };
    Poly num = {Rational(1)};
    Poly den = {Rational(1)};
    for (long d = 1; d <= M; ++d) {
        if (M % d != 0) continue;
        int mu = mobius(d);
        if (mu == 1) num = poly_mul(num, poly_xn_minus_1(M / d));
        else if (mu == -1) den = poly_mul(den, poly_xn_minus_1(M / d));
    }
    Poly q, r;
    poly_divmod(num, den, q, r);
    return q;
}

} // namespace detail

// Shared immutable data of the field Q(zeta_M), with the reduced power basis
// table x^e mod Phi_M for e = 0..M-1 precomputed.
class CycloCtx {
public:
    explicit CycloCtx(long M) : M_(M), phi_(detail::cyclotomic_poly(M)) {
        deg_ = static_cast<long>(phi_.size()) - 1;
        powers_.resize(M_);
        std::vector<Rational> cur(deg_, Rational(0));
        cur[0] = 1;
        for (long e = 0; e < M_; ++e) {
            powers_[e] = cur;
            // multiply by x modulo Phi
            Rational top = cur[deg_ - 1];
            for (long i = deg_ - 1; i > 0; --i) cur[i] = cur[i - 1];
            cur[0] = 0;
            if (top != 0)
                for (long i = 0; i < deg_; ++i) cur[i] -= top * phi_[i];
        }
    }

    long conductor() const { return M_; }
    long degree() const { return deg_; }
    const detail::Poly& phi() const { return phi_; }
    const std::vector<Rational>& power(long e) const { return powers_[e]; }

private:
    long M_;
    detail::Poly phi_;
    long deg_;
    std::vector<std::vector<Rational>> powers_;
};

// An element of Q(zeta_M), stored on the power basis 1, x, ..., x^(deg-1)
// modulo the M-th cyclotomic polynomial. A default-constructed element is
// the context-free zero; it combines with any context.
class Cyclo {
public:
    Cyclo() = default;
    Cyclo(const CycloCtx* ctx, std::vector<Rational> c) : ctx_(ctx), c_(std::move(c)) {
        normalize();
    }

    static Cyclo from_rational(const CycloCtx* ctx, const Rational& r) {
        std::vector<Rational> c(ctx->degree(), Rational(0));
        c[0] = r;
        return Cyclo(ctx, std::move(c));
    }

    // zeta_M^e for integer e (any sign)
    static Cyclo zeta_pow(const CycloCtx* ctx, long e) {
        long M = ctx->conductor();
        e %= M;
        if (e < 0) e += M;
        return Cyclo(ctx, ctx->power(e));
    }

    // exp(2*pi*i*r); requires r*M integral.
    static Cyclo unit_root_pow(const CycloCtx* ctx, const Rational& r) {
        Rational e = r * ctx->conductor();
        if (!is_integer(e))
            throw nonrepresentable_error("root of unity exp(2i*pi*" + to_string(r) +
                                         ") not in conductor " + std::to_string(ctx->conductor()));
        return zeta_pow(ctx, to_long(e));
    }

    const CycloCtx* ctx() const { return ctx_; }
    bool is_zero() const { return c_.empty(); }

    bool operator==(const Cyclo& o) const {
        if (is_zero() || o.is_zero()) return is_zero() && o.is_zero();
        return c_ == o.c_;
    }
    bool operator!=(const Cyclo& o) const { return !(*this == o); }

    Cyclo operator-() const {
        Cyclo r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }

    Cyclo operator+(const Cyclo& o) const {
        if (is_zero()) return o;
        if (o.is_zero()) return *this;
        check(o);
        std::vector<Rational> c = c_;
        for (size_t i = 0; i < c.size(); ++i) c[i] += o.c_[i];
        return Cyclo(ctx_, std::move(c));
    }
    Cyclo operator-(const Cyclo& o) const { return *this + (-o); }

    Cyclo operator*(const Cyclo& o) const {
        if (is_zero() || o.is_zero()) return Cyclo();
        check(o);
        long d = ctx_->degree();
        std::vector<Rational> raw(2 * d - 1, Rational(0));
        for (long i = 0; i < d; ++i) {
            if (c_[i] == 0) continue;
            for (long j = 0; j < d; ++j) {
                if (o.c_[j] == 0) continue;
                raw[i + j] += c_[i] * o.c_[j];
            }
        }
        return from_raw(ctx_, std::move(raw));
    }

    Cyclo operator*(const Rational& s) const {
        if (is_zero() || s == 0) return Cyclo();
        Cyclo r = *this;
        for (auto& x : r.c_) x *= s;
        return r;
    }

    Cyclo inverse() const {
        if (is_zero()) throw error("division by zero in cyclotomic field");
        // extended Euclid in Q[x]: u*self + v*Phi = gcd = const
        detail::Poly a(c_.begin(), c_.end());
        detail::poly_trim(a);
        detail::Poly b = ctx_->phi();
        detail::Poly u0 = {Rational(1)}, u1 = {};
        while (!b.empty()) {
            detail::Poly q, r;
            detail::poly_divmod(a, b, q, r);
            detail::Poly u2_part = detail::poly_mul(q, u1);
            detail::Poly u2 = u0;
            if (u2.size() < u2_part.size()) u2.resize(u2_part.size(), Rational(0));
            for (size_t i = 0; i < u2_part.size(); ++i) u2[i] -= u2_part[i];
            detail::poly_trim(u2);
            a = b; b = r; u0 = u1; u1 = u2;
        }
        // a is a nonzero constant gcd
        if (a.size() != 1) throw error("cyclotomic inverse: gcd not constant");
        Rational inv_c = 1 / a[0];
        std::vector<Rational> raw(u0.begin(), u0.end());
        for (auto& x : raw) x *= inv_c;
        return from_raw(ctx_, std::move(raw));
    }

    Cyclo operator/(const Cyclo& o) const { return *this * o.inverse(); }

    // Canonical embedding into Q(zeta_M') for a conductor multiple M' of M,
    // sending zeta_M to zeta_M'^(M'/M).
    Cyclo embed_into(const CycloCtx* big) const {
        if (is_zero() || ctx_ == big) return *this;
        long M1 = ctx_->conductor(), M2 = big->conductor();
        if (M2 % M1 != 0)
            throw mode_error("cannot embed conductor " + std::to_string(M1) +
                             " into conductor " + std::to_string(M2));
        long stride = M2 / M1;
        std::vector<Rational> raw(stride * (c_.size() - 1) + 1, Rational(0));
        for (size_t i = 0; i < c_.size(); ++i) raw[stride * i] = c_[i];
        return from_raw(big, std::move(raw));
    }

    std::complex<double> to_complex() const {
        if (is_zero()) return {0.0, 0.0};
        std::complex<double> z = 0, w = std::polar(1.0, 2.0 * M_PI / double(ctx_->conductor()));
        for (long i = static_cast<long>(c_.size()) - 1; i >= 0; --i)
            z = z * w + std::complex<double>(to_double(c_[i]), 0.0);
        return z;
    }

    const std::vector<Rational>& coeffs() const { return c_; }

    std::string str() const {
        if (is_zero()) return "0";
        std::string s;
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            if (!s.empty()) s += " + ";
            s += to_string(c_[i]);
            if (i > 0) s += "*z^" + std::to_string(i);
        }
        return s;
    }

private:
    const CycloCtx* ctx_ = nullptr;
    std::vector<Rational> c_; // empty means zero

    static Cyclo from_raw(const CycloCtx* ctx, std::vector<Rational> raw) {
        long d = ctx->degree();
        const auto& phi = ctx->phi();
        // reduce top-down with x^d = -(phi_0 + phi_1 x + ... + phi_{d-1} x^{d-1})
        for (long i = static_cast<long>(raw.size()) - 1; i >= d; --i) {
            if (raw[i] == 0) continue;
            Rational c = raw[i];
            raw[i] = 0;
            for (long j = 0; j < d; ++j) raw[i - d + j] -= c * phi[j];
        }
        std::vector<Rational> c(d, Rational(0));
        for (long i = 0; i < d && i < static_cast<long>(raw.size()); ++i) c[i] = raw[i];
        Cyclo r;
        r.ctx_ = ctx;
        r.c_ = std::move(c);
        r.normalize();
        return r;
    }

    void normalize() {
        if (!ctx_) { c_.clear(); return; }
        for (const auto& x : c_)
            if (x != 0) return;
        c_.clear();
        ctx_ = nullptr;
    }

    void check(const Cyclo& o) const {
        if (ctx_ && o.ctx_ && ctx_ != o.ctx_)
            throw mode_error("mixing cyclotomic elements from different contexts");
    }
};

inline Cyclo operator*(const Rational& s, const Cyclo& c) { return c * s; }

} // namespace skein
