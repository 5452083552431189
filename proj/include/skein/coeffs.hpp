#pragma once

#include <algorithm>

#include "skein/qarith.hpp"

namespace skein {

// Coefficient layer for the trivalent graph calculus. Colors are chi = alpha/k
// expressions; every coefficient is a Laurent monomial or brace product in the
// per-parameter variables u = A^chi.

// kappa_n(chi) = q^{n(-chi/2 + (n-1)/2)} {chi+N-1, chi+N-1-n}. The exponent
// carries the factor n on the color term; this is forced by the equivariance
// of the cap and vertex morphisms (see docs/conventions.md).
template <class F>
typename F::Elt kappa(const F& f, long n, const Affine& chi) {
    long N = f.root().N;
    if (n < 0 || n >= N) throw inadmissible_error("kappa index outside 0..N-1");
    typename F::Elt pre = f.A_pow(chi * Rational(-n) + Affine(n * (n - 1)));
    return pre * brace_range(f, chi + Affine(N - 1), chi + Affine(N - 1 - n));
}

// w_n(chi) = kappa_n(chi) kappa_{N-1-n}(-chi) q^{-(chi/2)(N-1) - n - 1/2}
template <class F>
typename F::Elt wcoef(const F& f, long n, const Affine& chi) {
    long N = f.root().N;
    if (n < 0 || n >= N) throw inadmissible_error("w index outside 0..N-1");
    typename F::Elt pre = f.A_pow(chi * Rational(-(N - 1)) + Affine(-2 * n - 1));
    return kappa(f, n, chi) * kappa(f, N - 1 - n, -chi) * pre;
}

// Evaluate an affine color combination to a rational, resolving bound
// parameters through the field. In floating mode the value is rounded to the
// nearest half-integer (these combinations are lattice-constrained); a value
// away from the lattice is inadmissible.
template <class F>
Rational rational_value(const F& f, const Affine& z, const char* what) {
    if (z.is_constant()) return z.constant;
    if constexpr (requires { f.tolerance(); }) {
        std::complex<double> v = f.eval_affine(z);
        double twice = 2.0 * v.real();
        long rounded = std::lround(twice);
        if (std::abs(v.imag()) > 1e-6 || std::abs(twice - rounded) > 1e-6)
            throw inadmissible_error(std::string(what) + ": value off the (1/2)Z lattice");
        return rat(rounded, 2);
    } else if constexpr (requires { f.eval_affine(z); }) {
        return f.eval_affine(z);
    } else {
        throw inadmissible_error(std::string(what) + ": non-constant color combination");
    }
}

// The support index m of a triple: the representative in {0..N-1} of
// (chi_a + chi_b - chi_c)/2 + (N-1)/2 modulo the (N/2)-shift invariance of all
// coefficient functions. The raw value must lie in (1/2)Z.
template <class F>
long support_m(const F& f, const Affine& ca, const Affine& cb, const Affine& cc) {
    Affine raw = (ca + cb - cc) * rat(1, 2) + Affine(rat(f.root().N - 1, 2));
    return normalize_m(f.root(), rational_value(f, raw, "support index"));
}

// A signed monomial times a quotient of brace products. Brace arguments are
// canonicalized through {x + N/2} = {x} and {-x} = -{x}, and equal arguments
// cancel between numerator and denominator before evaluation. This keeps the
// coefficient quotients finite at special colors (notably the S_1 carrier
// chi = N-2) where individual kappa factors vanish but the quotient is
// regular.
template <class F>
class BraceProduct {
public:
    explicit BraceProduct(const F& f) : f_(f) {}

    void flip_sign() { negative_ = !negative_; }
    void mul_A_pow(const Affine& z) { apow_ += z; }

    void mul_brace(Affine x, bool denominator = false) {
        bool neg = false;
        if (!x.coeffs.empty()) {
            if (x.coeffs.begin()->second < 0) neg = true;
        } else if (x.constant < 0) {
            neg = true;
        }
        if (neg) { x = -x; negative_ = !negative_; }
        Rational half_n = rat(f_.root().N, 2);
        x.constant -= half_n * rfloor(x.constant / half_n);
        (denominator ? den_ : num_).push_back(std::move(x));
    }

    // {a}{a-1}...{b+1}; length a-b must be an integer in 0..N-1
    void mul_brace_range(const Affine& a, const Affine& b, bool den = false) {
        Affine diff = a - b;
        if (!diff.is_constant() || !is_integer(diff.constant))
            throw inadmissible_error("brace range with non-integer length");
        long len = to_long(diff.constant);
        if (len < 0 || len >= f_.root().N)
            throw inadmissible_error("brace range length outside 0..N-1");
        for (long t = 0; t < len; ++t) mul_brace(a - Affine(t), den);
    }

    void mul_brace_fac(long n, bool den = false) {
        if (n < 0) throw inadmissible_error("negative brace factorial");
        for (long t = 1; t <= n; ++t) mul_brace(Affine(t), den);
    }

    // qbinom(a, b) = {a, b} / {a-b}!
    void mul_qbinom(const Affine& a, const Affine& b, bool den = false) {
        Affine diff = a - b;
        mul_brace_range(a, b, den);
        mul_brace_fac(to_long(diff.constant), !den);
    }

    typename F::Elt evaluate() const {
        std::vector<Affine> num = num_;
        std::vector<Affine> den;
        for (const auto& d : den_) {
            auto it = std::find(num.begin(), num.end(), d);
            if (it != num.end()) num.erase(it);
            else den.push_back(d);
        }
        typename F::Elt dprod = f_.one();
        for (const auto& x : den) {
            typename F::Elt b = brace(f_, x);
            if (f_.is_zero(b))
                throw degenerate_error("pole: vanishing brace in a coefficient denominator");
            dprod = dprod * b;
        }
        typename F::Elt nprod = f_.one();
        for (const auto& x : num) {
            typename F::Elt b = brace(f_, x);
            if (f_.is_zero(b)) return f_.zero();
            nprod = nprod * b;
        }
        typename F::Elt res = f_.A_pow(apow_) * nprod / dprod;
        if (negative_) res = f_.zero() - res;
        return res;
    }

private:
    const F& f_;
    bool negative_ = false;
    Affine apow_;
    std::vector<Affine> num_, den_;
};

namespace detail {

// Shared assembly of one z-summand of the C coefficient (without the kappa
// quotient, which the D/E variants add on top).
template <class F>
void c_term_body(BraceProduct<F>& t, const F& f, long i, long j, long n, const Affine& ca,
                 const Affine& cb, const Affine& cc, long m, long z) {
    long N = f.root().N;
    long w = n - z;
    // (-1)^i q^{(j(cb-j) - i(ca-i))/2}; the sign is forced by equivariance of
    // the vertex morphisms (see docs/conventions.md)
    if (i % 2 == 1) t.flip_sign();
    t.mul_A_pow(cb * Rational(j) + Affine(-j * j) - ca * Rational(i) + Affine(i * i));
    t.mul_qbinom(cc + Affine(N - 1), cc + Affine(N - 1 - n), true);
    t.mul_qbinom(cc + Affine(N - 1), cc + Affine(m), false);
    if (z % 2 == 1) t.flip_sign();
    t.mul_A_pow(cc * Rational(2 * z - n) + Affine(-n * (2 * z - n)));
    // Gaussian binomial (m choose i-z)
    t.mul_brace_range(Affine(m), Affine(i - z), false);
    t.mul_brace_fac(m - i + z, true);
    t.mul_qbinom(ca + Affine(z - i + N - 1), ca + Affine(-i + N - 1), false);
    t.mul_qbinom(cb + Affine(w - j + N - 1), cb + Affine(-j + N - 1), false);
}

} // namespace detail

// C coefficient at a prescribed support index m (exposed for the symbolic
// route where the colors are three independent variables).
template <class F>
typename F::Elt coefC_m(const F& f, long i, long j, long n, const Affine& ca, const Affine& cb,
                        const Affine& cc, long m) {
    long N = f.root().N;
    if (i < 0 || i >= N || j < 0 || j >= N || n < 0 || n >= N)
        throw inadmissible_error("C index outside 0..N-1");
    if (i + j - n != m) return f.zero();
    typename F::Elt sum = f.zero();
    for (long z = 0; z <= n; ++z) {
        if (i - z < 0 || i - z > m) continue;
        BraceProduct<F> t(f);
        detail::c_term_body(t, f, i, j, n, ca, cb, cc, m, z);
        sum = sum + t.evaluate();
    }
    return sum;
}

template <class F>
typename F::Elt coefC(const F& f, long i, long j, long n, const Affine& ca, const Affine& cb,
                      const Affine& cc) {
    return coefC_m(f, i, j, n, ca, cb, cc, support_m(f, ca, cb, cc));
}

namespace detail {

template <class F>
void kappa_factor(BraceProduct<F>& t, const F& f, long n, const Affine& chi, bool den) {
    long N = f.root().N;
    t.mul_A_pow((chi * Rational(-n) + Affine(n * (n - 1))) * Rational(den ? -1 : 1));
    t.mul_brace_range(chi + Affine(N - 1), chi + Affine(N - 1 - n), den);
}

} // namespace detail

// D = kappa_n(cc) / (kappa_i(ca) kappa_j(cb)) * C_{i,j,n}, assembled per
// z-summand so that removable kappa zeros cancel structurally.
template <class F>
typename F::Elt coefD_m(const F& f, long i, long j, long n, const Affine& ca, const Affine& cb,
                        const Affine& cc, long m) {
    long N = f.root().N;
    if (i < 0 || i >= N || j < 0 || j >= N || n < 0 || n >= N)
        throw inadmissible_error("D index outside 0..N-1");
    if (i + j - n != m) return f.zero();
    typename F::Elt sum = f.zero();
    for (long z = 0; z <= n; ++z) {
        if (i - z < 0 || i - z > m) continue;
        BraceProduct<F> t(f);
        detail::kappa_factor(t, f, n, cc, false);
        detail::kappa_factor(t, f, i, ca, true);
        detail::kappa_factor(t, f, j, cb, true);
        detail::c_term_body(t, f, i, j, n, ca, cb, cc, m, z);
        sum = sum + t.evaluate();
    }
    return sum;
}

template <class F>
typename F::Elt coefD(const F& f, long i, long j, long n, const Affine& ca, const Affine& cb,
                      const Affine& cc) {
    return coefD_m(f, i, j, n, ca, cb, cc, support_m(f, ca, cb, cc));
}

// E = kappa_i(ca) kappa_j(cb) / kappa_n(cc) * C_{N-1-j,N-1-i,N-1-n} at the
// reflected colors (-cb, -ca, -cc) and reflected support N-1-m.
template <class F>
typename F::Elt coefE_m(const F& f, long i, long j, long n, const Affine& ca, const Affine& cb,
                        const Affine& cc, long m) {
    long N = f.root().N;
    if (i < 0 || i >= N || j < 0 || j >= N || n < 0 || n >= N)
        throw inadmissible_error("E index outside 0..N-1");
    if (i + j - n != m) return f.zero();
    long i2 = N - 1 - j, j2 = N - 1 - i, n2 = N - 1 - n, m2 = N - 1 - m;
    typename F::Elt sum = f.zero();
    for (long z = 0; z <= n2; ++z) {
        if (i2 - z < 0 || i2 - z > m2) continue;
        BraceProduct<F> t(f);
        detail::kappa_factor(t, f, i, ca, false);
        detail::kappa_factor(t, f, j, cb, false);
        detail::kappa_factor(t, f, n, cc, true);
        detail::c_term_body(t, f, i2, j2, n2, -cb, -ca, -cc, m2, z);
        sum = sum + t.evaluate();
    }
    return sum;
}

template <class F>
typename F::Elt coefE(const F& f, long i, long j, long n, const Affine& ca, const Affine& cb,
                      const Affine& cc) {
    return coefE_m(f, i, j, n, ca, cb, cc, support_m(f, ca, cb, cc));
}

} // namespace skein
