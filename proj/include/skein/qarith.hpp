#pragma once

#include "skein/affine.hpp"
#include "skein/fields.hpp"

namespace skein {

// q-arithmetic primitives. All arguments are affine expressions in the
// chi = alpha/k weight parameters.

// {z} = q^z - q^{-z}
template <class F>
typename F::Elt brace(const F& f, const Affine& z) {
    return f.q_pow(z) - f.q_pow(-z);
}

// [z] = {z} / {1}
template <class F>
typename F::Elt qnum(const F& f, const Affine& z) {
    return brace(f, z) / brace(f, Affine(1));
}

// {n}! = {n}{n-1}...{1};  {0}! = 1.  Zero for n >= N (the factor {N} vanishes).
template <class F>
typename F::Elt brace_fac(const F& f, long n) {
    if (n < 0) throw inadmissible_error("brace factorial of negative length");
    typename F::Elt r = f.one();
    for (long t = 1; t <= n; ++t) r = r * brace(f, Affine(t));
    return r;
}

// {a, b} = {a}{a-1}...{b+1}; requires a - b to be an integer in 0..N-1.
template <class F>
typename F::Elt brace_range(const F& f, const Affine& a, const Affine& b) {
    Affine diff = a - b;
    if (!diff.is_constant() || !is_integer(diff.constant))
        throw inadmissible_error("brace range with non-integer length");
    long len = to_long(diff.constant);
    if (len < 0 || len >= f.root().N)
        throw inadmissible_error("brace range length " + std::to_string(len) +
                                 " outside 0..N-1");
    typename F::Elt r = f.one();
    for (long t = 0; t < len; ++t) r = r * brace(f, a - Affine(t));
    return r;
}

// Binomial {a, b} / {a-b}!  with a - b an integer in 0..N-1.
template <class F>
typename F::Elt qbinom(const F& f, const Affine& a, const Affine& b) {
    Affine diff = a - b;
    if (!diff.is_constant() || !is_integer(diff.constant))
        throw inadmissible_error("qbinom with non-integer column");
    long len = to_long(diff.constant);
    return brace_range(f, a, b) / brace_fac(f, len);
}

// Gaussian binomial at integer arguments with the usual "0 outside the
// triangle" convention (needed inside coefficient sums).
template <class F>
typename F::Elt qbinom_int(const F& f, long m, long j) {
    if (j < 0 || j > m) return f.zero();
    return qbinom(f, Affine(m), Affine(j));
}

// The unique representative in {0, .., N-1} of a support index defined up to
// N/2 shifts (colors shifted by multiples of (N/2)k leave all coefficient
// functions unchanged at the u-points). m0 must lie in (1/2)Z.
inline long normalize_m(const RootData& rd, const Rational& m0) {
    Rational two_m = m0 * 2;
    if (!is_integer(two_m))
        throw inadmissible_error("support index " + to_string(m0) + " not in (1/2)Z");
    long t = to_long(two_m); // m0 = t/2
    long N = rd.N;
    // need m = t/2 + (N/2)*s integer in 0..N-1, i.e. t + N*s even
    long s_parity = (t % 2 + 2) % 2; // s must have this parity (N odd)
    long base = (t + N * s_parity) / 2;
    long m = ((base % N) + N) % N;
    return m;
}

} // namespace skein
