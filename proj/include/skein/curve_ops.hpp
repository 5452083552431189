#pragma once

#include "skein/sixj.hpp"
#include "skein/surface.hpp"

namespace skein {

// The coloring basis of the skein representation space: one basis vector per
// map E(G) -> Z/N, lift index c of the coloring c(e) = omega(e) + c_(e).
// Ordering is lexicographic in the per-edge lift indices.
struct ColoringBasis {
    long N = 3;
    int num_edges = 0;

    long dim() const {
        long d = 1;
        for (int e = 0; e < num_edges; ++e) d *= N;
        return d;
    }
    // index <-> lift vector, lexicographic with edge 0 most significant
    std::vector<long> lifts(long index) const {
        std::vector<long> c(num_edges);
        for (int e = num_edges - 1; e >= 0; --e) {
            c[e] = index % N;
            index /= N;
        }
        return c;
    }
    long index(const std::vector<long>& c) const {
        long idx = 0;
        for (int e = 0; e < num_edges; ++e) idx = idx * N + ((c[e] % N + N) % N);
        return idx;
    }
};

template <class F>
struct CurveOperator {
    std::string curve;
    SpMat<typename F::Elt> m;
};

// Lift value of an edge color: chi(e) = omega(e) + lift.
inline Rational lift_value(const OmegaData& w, int edge, long lift) {
    return w.value[edge] + lift;
}

// Diagonal operator of the pants curve gamma_e: eigenvalue on [G,c] is
// -(x + 1/x) with x = exp(2 i pi c(e) / N); the leading sign is the
// single-component writhe-zero sign of the orientation correspondence.
template <class F>
CurveOperator<F> gamma_operator(const F& f, const SurfacePreset& p, const OmegaData& w,
                                int edge, const ColoringBasis& basis) {
    using Elt = typename F::Elt;
    CurveOperator<F> op;
    op.curve = "gamma_" + p.graph.edges[edge].name;
    op.m = SpMat<Elt>(static_cast<int>(basis.dim()), static_cast<int>(basis.dim()));
    for (long idx = 0; idx < basis.dim(); ++idx) {
        auto c = basis.lifts(idx);
        Rational cv = lift_value(w, edge, c[edge]);
        Elt x = f.unit_root(cv / basis.N);
        Elt lam = f.zero() - (x + f.one() / x);
        op.m.set(static_cast<int>(idx), static_cast<int>(idx), lam);
    }
    return op;
}

// One 6j factor of a beta operator at a turn. The slot signs come from the
// incidence of the two crossed edges and the flank at the turning vertex:
//   6S( -rho(f_next)(c+eta)_{f_next}, -rho(f_prev)(c+eta)_{f_prev},
//       rho(flank) c_flank ; rho(f_next) eta_{f_next}, rho(f_prev) eta_{f_prev} )
template <class F>
typename F::Elt beta_turn_factor(const F& f, SixjCache<typename F::Elt>& cache,
                                 const SurfacePreset& p, const OmegaData& w,
                                 const std::vector<long>& clift, int e_prev, int e_next,
                                 const BetaCurve::Turn& turn, long eta_prev, long eta_next) {
    const TriGraph& g = p.graph;
    int v = turn.vertex;
    int rp = g.incidence(v, e_prev);
    int rn = g.incidence(v, e_next);
    int rf = g.incidence(v, turn.flank_edge);
    if (rp == 0 || rn == 0 || rf == 0)
        throw inadmissible_error("beta turn data does not match the graph incidence");
    Rational cp = lift_value(w, e_prev, clift[e_prev]);
    Rational cn = lift_value(w, e_next, clift[e_next]);
    Rational cf = lift_value(w, turn.flank_edge, clift[turn.flank_edge]);
    Affine A = Affine(Rational(-rn) * (cn + eta_next));
    Affine B = Affine(Rational(-rp) * (cp + eta_prev));
    Affine C = Affine(Rational(rf) * cf);
    return sixj_cached(f, cache, A, B, C, static_cast<int>(rn * eta_next),
                       static_cast<int>(rp * eta_prev));
}

// The operator of a dual curve: [G,c] -> sum over eta in {+-1}^crossed of
//   x_eta [G, c+eta], with
// x_eta = (-1) * prod_t qbinom(c_t+eta_t+N-1, c_t+eta_t)^{-1} * prod_turns 6S(...).
// The global -1 is the single-component sign of the orientation
// correspondence, matching the gamma eigenvalue convention.
template <class F>
CurveOperator<F> beta_operator(const F& f, SixjCache<typename F::Elt>& cache,
                               const SurfacePreset& p, const OmegaData& w,
                               const BetaCurve& beta, const ColoringBasis& basis) {
    using Elt = typename F::Elt;
    CurveOperator<F> op;
    op.curve = beta.name;
    long D = basis.dim();
    op.m = SpMat<Elt>(static_cast<int>(D), static_cast<int>(D));
    size_t L = beta.crossed.size();
    for (long idx = 0; idx < D; ++idx) {
        auto c = basis.lifts(idx);
        // enumerate eta in {+1,-1}^L
        for (long mask = 0; mask < (1L << L); ++mask) {
            std::vector<long> eta(L);
            for (size_t t = 0; t < L; ++t) eta[t] = (mask >> t) & 1 ? 1 : -1;
            Elt coeff = f.zero() - f.one();
            bool dead = false;
            for (size_t t = 0; t < L && !dead; ++t) {
                int e = beta.crossed[t];
                Rational cv = lift_value(w, e, c[e]);
                Elt b = qbinom(f, Affine(cv + eta[t] + basis.N - 1), Affine(cv + eta[t]));
                if (f.is_zero(b)) { dead = true; break; }
                coeff = coeff / b;
            }
            if (dead) continue;
            for (size_t t = 0; t < L; ++t) {
                int e_prev = beta.crossed[t];
                int e_next = beta.crossed[(t + 1) % L];
                long eta_prev = eta[t];
                long eta_next = eta[(t + 1) % L];
                coeff = coeff * beta_turn_factor(f, cache, p, w, c, e_prev, e_next,
                                                 beta.turns[t], eta_prev, eta_next);
            }
            std::vector<long> c2 = c;
            for (size_t t = 0; t < L; ++t)
                c2[beta.crossed[t]] = ((c2[beta.crossed[t]] + eta[t]) % basis.N + basis.N) %
                                      basis.N;
            op.m.add(static_cast<int>(basis.index(c2)), static_cast<int>(idx), coeff);
        }
    }
    return op;
}

// Chebyshev polynomial of the first kind applied to a sparse operator:
// T_0 = 2, T_1 = X, T_{n+2} = X T_{n+1} - T_n.
template <class F>
SpMat<typename F::Elt> chebyshev_of(const F& f, const SpMat<typename F::Elt>& x, long n) {
    using Elt = typename F::Elt;
    int d = x.rows();
    SpMat<Elt> t0 = SpMat<Elt>::identity(d, f.one() + f.one());
    if (n == 0) return t0;
    SpMat<Elt> t1 = x;
    for (long i = 2; i <= n; ++i) {
        SpMat<Elt> t2 = x * t1 - t0;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    return t1;
}

} // namespace skein
