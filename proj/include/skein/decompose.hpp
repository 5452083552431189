#pragma once

#include "skein/morphisms.hpp"

namespace skein {

template <class F>
struct Summand {
    Affine param;                       // chi of the summand V
    std::vector<typename F::Elt> hw;    // highest-weight vector in the tensor basis
    long n = 0;                         // index in H_N: param = chi_a+chi_b+(N-1-2n)
};

// Decomposition V_a (x) V_b = sum over n in H_N of V_{a+b+k(N-1-2n)}, found by
// exact kernel computation of E on each top weight space.
template <class F>
std::vector<Summand<F>> decompose_VV(const F& f, const Affine& chi_a, const Affine& chi_b) {
    using Elt = typename F::Elt;
    long N = f.root().N;
    auto A = build_V(f, chi_a), B = build_V(f, chi_b);
    auto T = tensor(f, A, B);
    std::vector<Summand<F>> out;
    for (long n = 0; n < N; ++n) {
        // weight space i+j = n, image space i+j = n-1
        std::vector<int> dom, img;
        for (long i = 0; i < N; ++i)
            for (long j = 0; j < N; ++j) {
                if (i + j == n) dom.push_back(static_cast<int>(i * N + j));
                if (i + j == n - 1) img.push_back(static_cast<int>(i * N + j));
            }
        Mat<Elt> e(static_cast<int>(img.size()), static_cast<int>(dom.size()));
        for (size_t r = 0; r < img.size(); ++r)
            for (size_t c = 0; c < dom.size(); ++c) e.at(r, c) = T->actE.at(img[r], dom[c]);
        auto ker = kernel_basis(f, e);
        if (ker.size() != 1)
            throw degenerate_error("highest-weight space at n=" + std::to_string(n) +
                                   " has dimension " + std::to_string(ker.size()));
        Summand<F> s;
        s.param = chi_a + chi_b + Affine(N - 1 - 2 * n);
        s.n = n;
        s.hw.assign(T->dim(), f.zero());
        for (size_t c = 0; c < dom.size(); ++c) s.hw[dom[c]] = ker[0][c];
        out.push_back(std::move(s));
    }
    return out;
}

template <class F>
struct ExactSequences {
    // 0 -> S_n -> V_{k(N-1-n)} -> S_{N-n-2} (x) sigma^2 -> 0
    Morphism<F> inc1, proj1;
    // 0 -> V_{k(N-1-n)} -> P_n -> V_{-k(N-1-n)} -> 0
    Morphism<F> inc2, proj2;
};

template <class F>
ExactSequences<F> exact_seq_maps(const F& f, long n) {
    long N = f.root().N;
    if (n < 0 || n > N - 2) throw inadmissible_error("exact sequences need 0 <= n <= N-2");
    auto S = build_S(f, n);
    auto Vp = build_V(f, Affine(N - 1 - n));
    auto Q = tensor(f, build_S(f, N - n - 2), build_sigma(f, 2));
    auto P = build_P(f, n);
    auto Vm = build_V(f, Affine(-(N - 1 - n)));

    ExactSequences<F> seq;
    seq.inc1 = Morphism<F>(S, Vp);
    for (long i = 0; i <= n; ++i) seq.inc1.m.at(i + N - 1 - n, i) = f.one();
    seq.proj1 = Morphism<F>(Vp, Q);
    for (long m = 0; m <= N - 2 - n; ++m) seq.proj1.m.at(m, m) = f.one();

    seq.inc2 = Morphism<F>(Vp, P);
    for (long i = 0; i < N; ++i) seq.inc2.m.at(i, i) = f.one();
    seq.proj2 = Morphism<F>(P, Vm);
    for (long i = 0; i < N; ++i) seq.proj2.m.at(i, N + i) = f.one();
    return seq;
}

} // namespace skein
