#pragma once

#include <functional>
#include <mutex>
#include <sstream>
#include <unordered_map>

#include "skein/vertex.hpp"

namespace skein {

// 6j-symbols 6S(chi_a, chi_b, chi_c; eps1, eps2). Colors are chi = alpha/k
// values; a shift alpha -> alpha + eps*k is chi -> chi + eps.
//
// The S_1 strand is carried by V(k(N-2)), whose kappa factors vanish; the
// D/E coefficients touching it are only regular as products across the
// factors sharing the strand. All routes below therefore assemble whole
// summands into a single BraceProduct so removable zeros cancel structurally.

inline void check_eps(int e) {
    if (e != 1 && e != -1) throw inadmissible_error("epsilon arguments must be +-1");
}

namespace detail {

// kappa_n(C) / (kappa_i(A) kappa_j(B)) * [z-summand of C_{i,j,n}]
template <class F>
void append_D_term(BraceProduct<F>& t, const F& f, long i, long j, long n, const Affine& A,
                   const Affine& B, const Affine& C, long m, long z) {
    kappa_factor(t, f, n, C, false);
    kappa_factor(t, f, i, A, true);
    kappa_factor(t, f, j, B, true);
    c_term_body(t, f, i, j, n, A, B, C, m, z);
}

// kappa_i(A) kappa_j(B) / kappa_n(C) * [z-summand of the reflected C]
template <class F>
void append_E_term(BraceProduct<F>& t, const F& f, long i, long j, long n, const Affine& A,
                   const Affine& B, const Affine& C, long m, long z) {
    long N = f.root().N;
    kappa_factor(t, f, i, A, false);
    kappa_factor(t, f, j, B, false);
    kappa_factor(t, f, n, C, true);
    c_term_body(t, f, N - 1 - j, N - 1 - i, N - 1 - n, -B, -A, -C, N - 1 - m, z);
}

} // namespace detail

// --- closed two-term formula ------------------------------------------------

// One of the two summands of the closed formula (term = 0 or 1), divided by
// nothing; a summand whose basis indices leave 0..N-1 is identically zero.
template <class F>
typename F::Elt sixj_closed_term(const F& f, const Affine& ca, const Affine& cb,
                                 const Affine& cc, int eps1, int eps2, int term) {
    long N = f.root().N;
    long m = support_m(f, ca, cb, cc);
    long th1 = (eps1 - 1) / 2 + term;
    long th2 = m + (eps2 + 1) / 2 - term;
    if (th1 < 0 || th1 >= N || th2 < 0 || th2 >= N) return f.zero();
    long j2 = N - 2 + term; // S_1 strand index inside V(k(N-2))
    long m1 = normalize_m(f.root(), Rational(m) + rat(eps1 + eps2, 2));
    long m2 = normalize_m(f.root(), rat(2 * N - 3 - eps1, 2));
    long m3 = normalize_m(f.root(), rat(2 * N - 3 + eps2, 2));
    // support lines of the three factors
    if (th1 + th2 - 0 != m1) return f.zero();
    if (0 + j2 - th1 != m2) return f.zero();
    if (j2 + th2 - m != m3) return f.zero();
    typename F::Elt sum = f.zero();
    // z-sum of the middle factor D_{th1,th2,0} is the single term z = 0; the
    // factor D_{0,j2,th1} collapses to z = 0 because its first index is 0.
    long nE = N - 1 - m;       // reflected n-index of the E factor
    long iE = N - 1 - th2;     // reflected i-index of the E factor
    for (long z = 0; z <= nE; ++z) {
        if (iE - z < 0 || iE - z > N - 1 - m3) continue;
        BraceProduct<F> t(f);
        detail::append_D_term(t, f, th1, th2, 0, ca + Affine(eps1), cb + Affine(eps2), cc, m1, 0);
        detail::append_D_term(t, f, 0, j2, th1, ca, Affine(N - 2), ca + Affine(eps1), m2, 0);
        detail::append_E_term(t, f, j2, th2, m, Affine(N - 2), cb + Affine(eps2), cb, m3, z);
        sum = sum + t.evaluate();
    }
    return sum;
}

template <class F>
typename F::Elt sixj_closed(const F& f, const Affine& ca, const Affine& cb, const Affine& cc,
                            int eps1, int eps2) {
    check_eps(eps1);
    check_eps(eps2);
    long m = support_m(f, ca, cb, cc);
    typename F::Elt d0 = coefD(f, 0, m, 0, ca, cb, cc);
    if (f.is_zero(d0))
        throw degenerate_error("vanishing normalizer D_{0,m,0} in the closed 6j formula");
    typename F::Elt s = sixj_closed_term(f, ca, cb, cc, eps1, eps2, 0) +
                        sixj_closed_term(f, ca, cb, cc, eps1, eps2, 1);
    return s / d0;
}

// --- matrix oracle ----------------------------------------------------------

// Independent route: build the composite
//   (id (x) [Y o (iota (x) id)]) o ([(id (x) p) o Y] (x) id) o Y
// as an explicit map V(cc) -> V(ca) (x) V(cb) and solve the overdetermined
// proportionality against the reference vertex. Exact proportionality of the
// full system is the oracle's own certificate.
template <class F>
typename F::Elt sixj_oracle(const F& f, const Affine& ca, const Affine& cb, const Affine& cc,
                            int eps1, int eps2) {
    using Elt = typename F::Elt;
    check_eps(eps1);
    check_eps(eps2);
    long N = f.root().N;
    long m = support_m(f, ca, cb, cc);
    long m1 = normalize_m(f.root(), Rational(m) + rat(eps1 + eps2, 2));
    long m2 = normalize_m(f.root(), rat(2 * N - 3 - eps1, 2));
    long m3 = normalize_m(f.root(), rat(2 * N - 3 + eps2, 2));
    auto y_ref = build_Y_up(f, ca, cb, cc);
    Mat<Elt> phi(N * N, N);
    for (long n = 0; n < N; ++n)
        for (long i = 0; i < N; ++i)
            for (long j = 0; j < N; ++j)
                for (long t = 0; t <= 1; ++t) {
                    long j2 = N - 2 + t;
                    long a = i + j2 - m2;      // support of the left S_1 fusion
                    long b = j - j2 + m3;      // support of the right S_1 fusion
                    if (a < 0 || a >= N || b < 0 || b >= N) continue;
                    if (a + b - n != m1) continue;
                    Elt mid = coefD_m(f, a, b, n, ca + Affine(eps1), cb + Affine(eps2), cc, m1);
                    if (f.is_zero(mid)) continue;
                    // joint sum over the two singular factors sharing the strand
                    Elt pair_sum = f.zero();
                    long nE = N - 1 - m3 + (j2 + b - j) - (N - 1); // = j... reflected n-index
                    (void)nE;
                    long iE = N - 1 - b;
                    long n2E = N - 1 - j;
                    for (long z2 = 0; z2 <= a; ++z2) {
                        if (i - z2 < 0 || i - z2 > m2) continue;
                        for (long z3 = 0; z3 <= n2E; ++z3) {
                            if (iE - z3 < 0 || iE - z3 > N - 1 - m3) continue;
                            BraceProduct<F> bp(f);
                            detail::append_D_term(bp, f, i, j2, a, ca, Affine(N - 2),
                                                  ca + Affine(eps1), m2, z2);
                            detail::append_E_term(bp, f, j2, b, j, Affine(N - 2),
                                                  cb + Affine(eps2), cb, m3, z3);
                            pair_sum = pair_sum + bp.evaluate();
                        }
                    }
                    phi.at(i * N + j, n) = phi.at(i * N + j, n) + mid * pair_sum;
                }
    if (mat_is_zero(f, y_ref.m)) {
        if (mat_is_zero(f, phi)) return f.zero();
        throw degenerate_error("6j oracle: reference vertex vanishes identically");
    }
    return proportionality(f, phi, y_ref.m);
}

// --- symbolic route ----------------------------------------------------------

struct ValuationCertificate {
    long m = 0;
    int eps1 = 0, eps2 = 0;
    bool f1_zero = false, f2_zero = false;
    long v1 = 0, v2 = 0; // valuations in the first variable (when nonzero)
    bool r_nonzero = false;
};

struct SymbolicSixj {
    RatFun r;
    RatFun f1, f2, d0; // R = (f1 + f2) / d0
    ValuationCertificate cert;
};

// The rational fraction R(X1, X2, X3) of the m-class with sign pair
// (eps1, eps2), where X_i is the u-point of color i, together with the
// valuation certificate of its two summands. Evaluating R at the u-points of
// a concrete admissible triple reproduces the closed formula.
inline SymbolicSixj sixj_symbolic(const SymField& f, long m, int eps1, int eps2) {
    check_eps(eps1);
    check_eps(eps2);
    if (f.nvars() != 3) throw mode_error("sixj_symbolic needs a three-variable context");
    long N = f.root().N;
    if (m < 0 || m >= N) throw inadmissible_error("m-class outside 0..N-1");
    Affine c1 = Affine::param(f.var_params()[0]);
    Affine c2 = Affine::param(f.var_params()[1]);
    Affine c3 = Affine::param(f.var_params()[2]);

    auto term = [&](int tt) -> RatFun {
        long th1 = (eps1 - 1) / 2 + tt;
        long th2 = m + (eps2 + 1) / 2 - tt;
        if (th1 < 0 || th1 >= N || th2 < 0 || th2 >= N) return f.zero();
        long j2 = N - 2 + tt;
        long m1 = normalize_m(f.root(), Rational(m) + rat(eps1 + eps2, 2));
        long m2 = normalize_m(f.root(), rat(2 * N - 3 - eps1, 2));
        long m3 = normalize_m(f.root(), rat(2 * N - 3 + eps2, 2));
        if (th1 + th2 != m1 || j2 - th1 != m2 || j2 + th2 - m != m3) return f.zero();
        RatFun sum = f.zero();
        long nE = N - 1 - m, iE = N - 1 - th2;
        for (long z = 0; z <= nE; ++z) {
            if (iE - z < 0 || iE - z > N - 1 - m3) continue;
            BraceProduct<SymField> t(f);
            detail::append_D_term(t, f, th1, th2, 0, c1 + Affine(eps1), c2 + Affine(eps2), c3,
                                  m1, 0);
            detail::append_D_term(t, f, 0, j2, th1, c1, Affine(N - 2), c1 + Affine(eps1), m2, 0);
            detail::append_E_term(t, f, j2, th2, m, Affine(N - 2), c2 + Affine(eps2), c2, m3, z);
            sum = sum + t.evaluate();
        }
        return sum;
    };

    SymbolicSixj out;
    out.cert.m = m;
    out.cert.eps1 = eps1;
    out.cert.eps2 = eps2;
    out.f1 = term(0);
    out.f2 = term(1);
    out.cert.f1_zero = out.f1.is_zero();
    out.cert.f2_zero = out.f2.is_zero();
    if (auto v = out.f1.valuation(0)) out.cert.v1 = *v;
    if (auto v = out.f2.valuation(0)) out.cert.v2 = *v;
    out.d0 = coefD_m(f, 0, m, 0, c1, c2, c3, m);
    out.r = (out.f1 + out.f2) / out.d0;
    out.cert.r_nonzero = !out.r.is_zero();
    return out;
}

// --- memo cache ---------------------------------------------------------------

// Canonical cache key: colors reduced modulo their 2N-periodicity in chi.
template <class F>
std::string sixj_key(const F& f, const Affine& ca, const Affine& cb, const Affine& cc,
                     int eps1, int eps2) {
    auto canon = [&](const Affine& c) -> std::string {
        if constexpr (requires { f.tolerance(); }) {
            std::ostringstream os;
            auto z = f.eval_affine(c);
            os.precision(14);
            os << z.real() << "," << z.imag();
            return os.str();
        } else if constexpr (requires { f.eval_affine(c); }) {
            Rational v = f.eval_affine(c);
            long period = 2 * f.root().N;
            v -= Rational(period) * rfloor(v / period);
            return to_string(v);
        } else {
            return c.str();
        }
    };
    return std::to_string(f.root().N) + "_" + std::to_string(f.root().kprime) + "|" +
           canon(ca) + "|" + canon(cb) + "|" + canon(cc) + "|" + std::to_string(eps1) +
           std::to_string(eps2);
}

// Thread-safe memo cache for 6j values; races on identical keys are benign
// because the values are deterministic.
template <class Elt>
class SixjCache {
public:
    bool lookup(const std::string& key, Elt& out) const {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = map_.find(key);
        if (it == map_.end()) return false;
        out = it->second;
        ++hits_;
        return true;
    }
    void store(const std::string& key, const Elt& value) {
        std::lock_guard<std::mutex> lock(mu_);
        map_[key] = value;
    }
    size_t size() const {
        std::lock_guard<std::mutex> lock(mu_);
        return map_.size();
    }
    size_t hits() const {
        std::lock_guard<std::mutex> lock(mu_);
        return hits_;
    }
    template <class Fn>
    void for_each(Fn&& fn) const {
        std::lock_guard<std::mutex> lock(mu_);
        for (const auto& [k, v] : map_) fn(k, v);
    }

private:
    mutable std::mutex mu_;
    mutable size_t hits_ = 0;
    std::unordered_map<std::string, Elt> map_;
};

// Cached closed-formula evaluation.
template <class F>
typename F::Elt sixj_cached(const F& f, SixjCache<typename F::Elt>& cache, const Affine& ca,
                            const Affine& cb, const Affine& cc, int eps1, int eps2) {
    std::string key = sixj_key(f, ca, cb, cc, eps1, eps2);
    typename F::Elt out;
    if (cache.lookup(key, out)) return out;
    out = sixj_closed(f, ca, cb, cc, eps1, eps2);
    cache.store(key, out);
    return out;
}

} // namespace skein
