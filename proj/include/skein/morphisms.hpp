#pragma once

#include "skein/modules.hpp"

namespace skein {

// A linear map between modules, stored as a dense matrix in the source and
// target bases (columns indexed by the source basis).
template <class F>
struct Morphism {
    using Elt = typename F::Elt;
    ModulePtr<F> src, tgt;
    Mat<Elt> m;

    Morphism() = default;
    Morphism(ModulePtr<F> s, ModulePtr<F> t)
        : src(std::move(s)), tgt(std::move(t)), m(tgt->dim(), src->dim()) {}
    Morphism(ModulePtr<F> s, ModulePtr<F> t, Mat<Elt> mat)
        : src(std::move(s)), tgt(std::move(t)), m(std::move(mat)) {}
};

template <class F>
Morphism<F> identity_morphism(const F& f, ModulePtr<F> a) {
    return Morphism<F>(a, a, Mat<typename F::Elt>::identity(a->dim(), f.one()));
}

// a after b
template <class F>
Morphism<F> compose(const Morphism<F>& a, const Morphism<F>& b) {
    if (a.src->dim() != b.tgt->dim()) throw error("composition dimension mismatch");
    return Morphism<F>(b.src, a.tgt, a.m * b.m);
}

// f (x) g on the tensor modules
template <class F>
Morphism<F> tensor_hom(const F& f, const Morphism<F>& a, const Morphism<F>& b) {
    return Morphism<F>(tensor(f, a.src, b.src), tensor(f, a.tgt, b.tgt), a.m.kron(b.m));
}

// Equivariance of a candidate morphism: commutation with E, F, K as matrices
// plus weight preservation entry by entry.
template <class F>
bool is_equivariant(const F& f, const Morphism<F>& mor) {
    const auto& s = *mor.src;
    const auto& t = *mor.tgt;
    if (!mats_equal(f, mor.m * s.actE, t.actE * mor.m)) return false;
    if (!mats_equal(f, mor.m * s.actF, t.actF * mor.m)) return false;
    if (!mats_equal(f, mor.m * K_matrix(f, s, 1), K_matrix(f, t, 1) * mor.m)) return false;
    for (int i = 0; i < t.dim(); ++i)
        for (int j = 0; j < s.dim(); ++j)
            if (!f.is_zero(mor.m.at(i, j)) && !affine_equal(f, t.weights[i], s.weights[j]))
                return false;
    return true;
}

// The scalar s with mor = s * id on a module; degenerate_error otherwise.
template <class F>
typename F::Elt scalar_of(const F& f, const Morphism<F>& mor) {
    if (mor.src->dim() != mor.tgt->dim()) throw degenerate_error("scalar of non-endomorphism");
    return proportionality(f, mor.m,
                           Mat<typename F::Elt>::identity(mor.src->dim(), f.one()));
}

} // namespace skein
