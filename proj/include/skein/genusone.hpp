#pragma once

#include <map>

#include "skein/certificates.hpp"

namespace skein {

// Element of the quantum torus X Y = q Y X in normal order (X left of Y):
// terms map (a, b) -> coefficient of X^a Y^b.
template <class F>
struct QTorus {
    using Elt = typename F::Elt;
    std::map<std::pair<long, long>, Elt> terms;

    bool is_zero() const { return terms.empty(); }
};

template <class F>
QTorus<F> qt_monomial(const F& f, long a, long b, typename F::Elt c) {
    QTorus<F> u;
    if (!f.is_zero(c)) u.terms[{a, b}] = c;
    return u;
}

template <class F>
QTorus<F> qt_add(const F& f, const QTorus<F>& u, const QTorus<F>& v) {
    QTorus<F> r = u;
    for (const auto& [e, c] : v.terms) {
        auto it = r.terms.find(e);
        if (it == r.terms.end()) r.terms[e] = c;
        else {
            it->second = it->second + c;
            if (f.is_zero(it->second)) r.terms.erase(it);
        }
    }
    return r;
}

// Normal-ordered product: (X^a1 Y^b1)(X^a2 Y^b2) = q^{-b1 a2} X^{a1+a2} Y^{b1+b2}.
template <class F>
QTorus<F> qt_mul(const F& f, const QTorus<F>& u, const QTorus<F>& v) {
    QTorus<F> r;
    for (const auto& [e1, c1] : u.terms)
        for (const auto& [e2, c2] : v.terms) {
            auto [a1, b1] = e1;
            auto [a2, b2] = e2;
            typename F::Elt c = c1 * c2 * f.q_pow(Affine(-b1 * a2));
            auto key = std::make_pair(a1 + a2, b1 + b2);
            auto it = r.terms.find(key);
            if (it == r.terms.end()) {
                if (!f.is_zero(c)) r.terms[key] = c;
            } else {
                it->second = it->second + c;
                if (f.is_zero(it->second)) r.terms.erase(it);
            }
        }
    return r;
}

// The involutive automorphism Theta(X) = X^{-1}, Theta(Y) = Y^{-1}; on normal
// forms it simply negates the exponents.
template <class F>
QTorus<F> qt_theta(const F& f, const QTorus<F>& u) {
    (void)f;
    QTorus<F> r;
    for (const auto& [e, c] : u.terms) r.terms[{-e.first, -e.second}] = c;
    return r;
}

// Projection onto the Theta = +1 eigenspace.
template <class F>
QTorus<F> qt_theta_plus(const F& f, const QTorus<F>& u) {
    QTorus<F> r = qt_add(f, u, qt_theta(f, u));
    typename F::Elt half = f.from_rational(rat(1, 2));
    for (auto& [e, c] : r.terms) c = c * half;
    return r;
}

template <class F>
bool qt_equal(const F& f, const QTorus<F>& u, const QTorus<F>& v) {
    QTorus<F> d = qt_add(f, u, qt_mul(f, qt_monomial(f, 0, 0, f.zero() - f.one()), v));
    return d.is_zero();
}

// Images of the longitude and meridian classes under the quantum-torus
// identification: [lambda] -> X + X^{-1}, [mu] -> Y + Y^{-1}.
template <class F>
QTorus<F> fgs_lambda(const F& f) {
    return qt_add(f, qt_monomial(f, 1, 0, f.one()), qt_monomial(f, -1, 0, f.one()));
}
template <class F>
QTorus<F> fgs_mu(const F& f) {
    return qt_add(f, qt_monomial(f, 0, 1, f.one()), qt_monomial(f, 0, -1, f.one()));
}

// Image of a noncommutative word in (lambda, mu): the word is a list of
// generator indices (0 = lambda, 1 = mu) multiplied left to right.
template <class F>
QTorus<F> fgs_word(const F& f, const std::vector<int>& word) {
    QTorus<F> r = qt_monomial(f, 0, 0, f.one());
    for (int g : word) r = qt_mul(f, r, g == 0 ? fgs_lambda(f) : fgs_mu(f));
    return r;
}

// The N-dimensional representation r_{x,y}: X -> x U, Y -> y W with
// U e_i = q^i e_i and W e_i = e_{i+1} (indices mod N).
template <class F>
Mat<typename F::Elt> rep_rxy(const F& f, const typename F::Elt& x, const typename F::Elt& y,
                             const QTorus<F>& u) {
    using Elt = typename F::Elt;
    long N = f.root().N;
    if (f.is_zero(x) || f.is_zero(y)) throw inadmissible_error("r_{x,y} needs x, y nonzero");
    Mat<Elt> m(static_cast<int>(N), static_cast<int>(N));
    for (const auto& [e, c] : u.terms) {
        auto [a, b] = e;
        Elt xa = f.one();
        for (long t = 0; t < std::abs(a); ++t) xa = a > 0 ? xa * x : xa / x;
        Elt yb = f.one();
        for (long t = 0; t < std::abs(b); ++t) yb = b > 0 ? yb * y : yb / y;
        for (long i = 0; i < N; ++i) {
            long j = ((i + b) % N + N) % N;
            // (X^a Y^b) e_i = q^{a(i+b)} e_{i+b}
            Elt coeff = c * xa * yb * f.q_pow(Affine(a * (i + b)));
            m.at(static_cast<int>(j), static_cast<int>(i)) =
                m.at(static_cast<int>(j), static_cast<int>(i)) + coeff;
        }
    }
    return m;
}

// Chebyshev polynomial of a quantum-torus element.
template <class F>
QTorus<F> qt_chebyshev(const F& f, const QTorus<F>& x, long n) {
    QTorus<F> t0 = qt_monomial(f, 0, 0, f.one() + f.one());
    if (n == 0) return t0;
    QTorus<F> t1 = x;
    for (long i = 2; i <= n; ++i) {
        QTorus<F> t2 = qt_add(f, qt_mul(f, x, t1),
                              qt_mul(f, qt_monomial(f, 0, 0, f.zero() - f.one()), t0));
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    return t1;
}

// Basis matrix of the theta-eigenspace V^{+-} inside C^N: columns are
// e_i +- e_{-i}.
template <class F>
Mat<typename F::Elt> pm_basis(const F& f, int sign) {
    long N = f.root().N;
    long d = (sign > 0) ? (N + 1) / 2 : (N - 1) / 2;
    Mat<typename F::Elt> b(static_cast<int>(N), static_cast<int>(d));
    int col = 0;
    for (long i = (sign > 0 ? 0 : 1); i <= (N - 1) / 2; ++i, ++col) {
        b.at(static_cast<int>(i), col) = b.at(static_cast<int>(i), col) + f.one();
        long mi = ((N - i) % N);
        typename F::Elt s = sign > 0 ? f.one() : f.zero() - f.one();
        b.at(static_cast<int>(mi), col) = b.at(static_cast<int>(mi), col) + s;
    }
    return b;
}

// Restriction of an operator (which must preserve the subspace) to the
// column span of basis: solves basis * out = op * basis.
template <class F>
Mat<typename F::Elt> restrict_to(const F& f, const Mat<typename F::Elt>& basis,
                                 const Mat<typename F::Elt>& op) {
    using Elt = typename F::Elt;
    int n = basis.rows(), d = basis.cols();
    Mat<Elt> rhs = op * basis;
    // solve the overdetermined system column by column via RREF of [basis | rhs]
    Mat<Elt> work(n, d + rhs.cols());
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < d; ++j) work.at(i, j) = basis.at(i, j);
        for (int j = 0; j < rhs.cols(); ++j) work.at(i, d + j) = rhs.at(i, j);
    }
    double s = 1.0;
    if constexpr (requires { f.tolerance(); }) s = scale_of(f, work);
    int rank = 0;
    std::vector<int> pivot_row(d, -1);
    for (int col = 0; col < d && rank < n; ++col) {
        int piv = -1;
        double best = 0;
        for (int r = rank; r < n; ++r) {
            if (f.is_zero(work.at(r, col), s)) continue;
            double m = pivot_magnitude(f, work.at(r, col));
            if (piv < 0 || m > best) { piv = r; best = m; }
        }
        if (piv < 0) throw degenerate_error("restriction basis is rank deficient");
        if (piv != rank)
            for (int j = 0; j < work.cols(); ++j) std::swap(work.at(piv, j), work.at(rank, j));
        Elt inv = f.one() / work.at(rank, col);
        for (int j = 0; j < work.cols(); ++j) work.at(rank, j) = work.at(rank, j) * inv;
        for (int r = 0; r < n; ++r) {
            if (r == rank) continue;
            Elt c = work.at(r, col);
            if (f.is_zero(c, s)) continue;
            for (int j = 0; j < work.cols(); ++j)
                work.at(r, j) = work.at(r, j) - c * work.at(rank, j);
        }
        pivot_row[col] = rank;
        ++rank;
    }
    // residual rows must vanish (the subspace is preserved)
    for (int r = rank; r < n; ++r)
        for (int j = 0; j < rhs.cols(); ++j)
            if (!f.is_zero(work.at(r, d + j), s))
                throw degenerate_error("operator does not preserve the subspace");
    Mat<Elt> out(d, rhs.cols());
    for (int col = 0; col < d; ++col)
        for (int j = 0; j < rhs.cols(); ++j) out.at(col, j) = work.at(pivot_row[col], d + j);
    return out;
}

struct GenusOneReport {
    bool central_pair = false; // (x^N, y^N) = (+-1, +-1)
    std::string shadow_lambda, shadow_mu;
    long dim_plus = 0, dim_minus = 0;
    bool plus_irreducible = false, minus_irreducible = false;
    long image_span = 0;       // span of words in the lambda/mu images
    long expected_span = 0;
    bool pass = false;
};

// Classification dichotomy at a point (x, y): away from the central points
// the N-dimensional representation is irreducible; at a central pair it
// splits into the two theta-eigenspace constituents, both irreducible, and
// the image algebra has dimension dim End(V^+) + dim End(V^-).
template <class F>
GenusOneReport classify_genus_one(const F& f, const typename F::Elt& x,
                                  const typename F::Elt& y) {
    using Elt = typename F::Elt;
    long N = f.root().N;
    GenusOneReport rep;
    Elt xn = f.one(), yn = f.one();
    for (long t = 0; t < N; ++t) { xn = xn * x; yn = yn * y; }
    Elt one = f.one(), mone = f.zero() - f.one();
    bool xc = f.is_zero(xn - one) || f.is_zero(xn - mone);
    bool yc = f.is_zero(yn - one) || f.is_zero(yn - mone);
    rep.central_pair = xc && yc;
    Mat<Elt> rl = rep_rxy(f, x, y, fgs_lambda(f));
    Mat<Elt> rm = rep_rxy(f, x, y, fgs_mu(f));
    rep.shadow_lambda = f.str(xn + one / xn);
    rep.shadow_mu = f.str(yn + one / yn);
    if (!rep.central_pair) {
        rep.image_span = word_span_dimension(f, {rl, rm});
        rep.expected_span = N * N;
        rep.pass = rep.image_span == rep.expected_span;
        return rep;
    }
    rep.dim_plus = (N + 1) / 2;
    rep.dim_minus = (N - 1) / 2;
    auto bp = pm_basis(f, +1);
    auto bm = pm_basis(f, -1);
    auto rlp = restrict_to(f, bp, rl), rmp = restrict_to(f, bp, rm);
    auto rlm = restrict_to(f, bm, rl), rmm = restrict_to(f, bm, rm);
    rep.plus_irreducible =
        word_span_dimension(f, {rlp, rmp}) == rep.dim_plus * rep.dim_plus;
    rep.minus_irreducible =
        word_span_dimension(f, {rlm, rmm}) == rep.dim_minus * rep.dim_minus;
    rep.image_span = word_span_dimension(f, {rl, rm});
    rep.expected_span = ((N + 1) * (N + 1) + (N - 1) * (N - 1)) / 4;
    rep.pass = rep.plus_irreducible && rep.minus_irreducible &&
               rep.image_span == rep.expected_span;
    return rep;
}

} // namespace skein
