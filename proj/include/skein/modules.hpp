#pragma once

#include <memory>
#include <string>
#include <vector>

#include "skein/linalg.hpp"
#include "skein/qarith.hpp"

namespace skein {

// Weight comparison in the active field.
template <class F>
bool affine_equal(const F& f, const Affine& a, const Affine& b) {
    if constexpr (requires { f.tolerance(); }) {
        return std::abs(f.eval_affine(a) - f.eval_affine(b)) <= f.tolerance();
    } else if constexpr (requires { f.eval_affine(a); }) {
        return f.eval_affine(a) == f.eval_affine(b);
    } else {
        return a - b == Affine(0);
    }
}

// A finite-dimensional weight module with explicit generator actions. H acts
// through the stored weights; K acts as q^weight.
template <class F>
struct Module {
    using Elt = typename F::Elt;
    enum class Kind { V, S, P, Sigma, Tensor, Dual };

    Kind kind;
    Affine param; // V: chi; S,P: n; Sigma: m
    std::shared_ptr<const Module> left, right;
    std::vector<std::string> labels;
    std::vector<Affine> weights;
    Mat<Elt> actE, actF;

    int dim() const { return static_cast<int>(labels.size()); }

    std::string name() const {
        switch (kind) {
            case Kind::V: return "V(" + param.str() + ")";
            case Kind::S: return "S" + param.str();
            case Kind::P: return "P" + param.str();
            case Kind::Sigma: return "sigma^" + param.str();
            case Kind::Tensor: return left->name() + "(x)" + right->name();
            case Kind::Dual: return left->name() + "*";
        }
        return "?";
    }
};

template <class F>
using ModulePtr = std::shared_ptr<const Module<F>>;

template <class F>
Mat<typename F::Elt> K_matrix(const F& f, const Module<F>& m, long power = 1) {
    Mat<typename F::Elt> k(m.dim(), m.dim());
    for (int i = 0; i < m.dim(); ++i) k.at(i, i) = f.q_pow(m.weights[i] * Rational(power));
    return k;
}

// The typical module V_alpha, handled by chi = alpha/k.
template <class F>
ModulePtr<F> build_V(const F& f, const Affine& chi) {
    long N = f.root().N;
    auto m = std::make_shared<Module<F>>();
    m->kind = Module<F>::Kind::V;
    m->param = chi;
    m->actE = Mat<typename F::Elt>(N, N);
    m->actF = Mat<typename F::Elt>(N, N);
    for (long n = 0; n < N; ++n) {
        m->labels.push_back("v" + std::to_string(n));
        m->weights.push_back(chi + Affine(N - 1 - 2 * n));
        if (n + 1 < N) m->actF.at(n + 1, n) = f.one();
        if (n > 0) m->actE.at(n - 1, n) = qnum(f, Affine(n)) * qnum(f, chi - Affine(n));
    }
    return m;
}

// The simple module S_n, 0 <= n <= N-1.
template <class F>
ModulePtr<F> build_S(const F& f, long n) {
    long N = f.root().N;
    if (n < 0 || n >= N) throw inadmissible_error("S_n requires 0 <= n <= N-1");
    auto m = std::make_shared<Module<F>>();
    m->kind = Module<F>::Kind::S;
    m->param = Affine(n);
    m->actE = Mat<typename F::Elt>(n + 1, n + 1);
    m->actF = Mat<typename F::Elt>(n + 1, n + 1);
    for (long i = 0; i <= n; ++i) {
        m->labels.push_back("e" + std::to_string(i));
        m->weights.push_back(Affine(n - 2 * i));
        if (i + 1 <= n) m->actF.at(i + 1, i) = f.one();
        if (i > 0) m->actE.at(i - 1, i) = qnum(f, Affine(i)) * qnum(f, Affine(n - i + 1));
    }
    return m;
}

// The projective indecomposable P_n, 0 <= n <= N-2. Basis x_0..x_{N-1},
// y_0..y_{N-1}; the y-chain feeds into the x-chain at y_0 and y_{n+1}.
template <class F>
ModulePtr<F> build_P(const F& f, long n) {
    long N = f.root().N;
    if (n < 0 || n > N - 2) throw inadmissible_error("P_n requires 0 <= n <= N-2");
    auto m = std::make_shared<Module<F>>();
    m->kind = Module<F>::Kind::P;
    m->param = Affine(n);
    int d = static_cast<int>(2 * N);
    m->actE = Mat<typename F::Elt>(d, d);
    m->actF = Mat<typename F::Elt>(d, d);
    auto X = [&](long i) { return static_cast<int>(i); };
    auto Y = [&](long i) { return static_cast<int>(N + i); };
    for (long i = 0; i < N; ++i) {
        m->labels.push_back("x" + std::to_string(i));
        m->weights.push_back(Affine(2 * N - 2 - n - 2 * i));
    }
    for (long i = 0; i < N; ++i) {
        m->labels.push_back("y" + std::to_string(i));
        m->weights.push_back(Affine(n - 2 * i));
    }
    for (long i = 0; i + 1 < N; ++i) {
        m->actF.at(X(i + 1), X(i)) = f.one();
        m->actF.at(Y(i + 1), Y(i)) = f.one();
    }
    for (long i = 1; i < N; ++i)
        m->actE.at(X(i - 1), X(i)) = f.zero() - qnum(f, Affine(i)) * qnum(f, Affine(i + 1 + n));
    // E on the y-chain: the S-type coefficient plus the x-chain feed-in
    // x_{N-2-n+i}, present for 0 <= i <= n+1 and forced by [E,F].
    for (long i = 0; i < N; ++i) {
        if (i >= 1) m->actE.at(Y(i - 1), Y(i)) = qnum(f, Affine(i)) * qnum(f, Affine(n + 1 - i));
        if (i <= n + 1) m->actE.at(X(N - 2 - n + i), Y(i)) = f.one();
    }
    return m;
}

// One-dimensional module sigma^m with H-eigenvalue m*N/2.
template <class F>
ModulePtr<F> build_sigma(const F& f, long n) {
    auto m = std::make_shared<Module<F>>();
    m->kind = Module<F>::Kind::Sigma;
    m->param = Affine(n);
    m->labels = {"v"};
    m->weights = {Affine(rat(n * f.root().N, 2))};
    m->actE = Mat<typename F::Elt>(1, 1);
    m->actF = Mat<typename F::Elt>(1, 1);
    return m;
}

// Tensor product with the coproduct actions Delta(E) = 1(x)E + E(x)K and
// Delta(F) = K^{-1}(x)F + F(x)1. Basis ordering (a, b) -> a*dim(B)+b.
template <class F>
ModulePtr<F> tensor(const F& f, ModulePtr<F> a, ModulePtr<F> b) {
    auto m = std::make_shared<Module<F>>();
    m->kind = Module<F>::Kind::Tensor;
    m->left = a;
    m->right = b;
    for (int i = 0; i < a->dim(); ++i)
        for (int j = 0; j < b->dim(); ++j) {
            m->labels.push_back(a->labels[i] + "(x)" + b->labels[j]);
            m->weights.push_back(a->weights[i] + b->weights[j]);
        }
    auto idA = Mat<typename F::Elt>::identity(a->dim(), f.one());
    auto idB = Mat<typename F::Elt>::identity(b->dim(), f.one());
    m->actE = idA.kron(b->actE) + a->actE.kron(K_matrix(f, *b, 1));
    m->actF = K_matrix(f, *a, -1).kron(b->actF) + a->actF.kron(idB);
    return m;
}

// Dual module on the dual basis; actions through the antipode,
// rho*(g) = rho(S(g))^T with S(E) = -E K^{-1}, S(F) = -K F.
template <class F>
ModulePtr<F> dual(const F& f, ModulePtr<F> a) {
    auto m = std::make_shared<Module<F>>();
    m->kind = Module<F>::Kind::Dual;
    m->left = a;
    for (int i = 0; i < a->dim(); ++i) {
        m->labels.push_back(a->labels[i] + "*");
        m->weights.push_back(-a->weights[i]);
    }
    Mat<typename F::Elt> se = (a->actE * K_matrix(f, *a, -1)).scaled(f.zero() - f.one());
    Mat<typename F::Elt> sf = (K_matrix(f, *a, 1) * a->actF).scaled(f.zero() - f.one());
    m->actE = se.transpose();
    m->actF = sf.transpose();
    return m;
}

// Verifies the defining relations as matrix identities on a constructed
// module: KE = q^2 EK, KF = q^-2 FK, [E,F] = (K-K^-1)/(q-q^-1), E^N = F^N = 0
// and the weight grading of E and F.
template <class F>
bool check_relations(const F& f, const Module<F>& m) {
    long N = f.root().N;
    auto K = K_matrix(f, m, 1);
    auto Kinv = K_matrix(f, m, -1);
    if (!mats_equal(f, K * m.actE, (m.actE * K).scaled(f.q_pow(Affine(2))))) return false;
    if (!mats_equal(f, K * m.actF, (m.actF * K).scaled(f.q_pow(Affine(-2))))) return false;
    auto comm = m.actE * m.actF - m.actF * m.actE;
    auto rhs = (K - Kinv).scaled(f.one() / brace(f, Affine(1)));
    if (!mats_equal(f, comm, rhs)) return false;
    Mat<typename F::Elt> En = m.actE, Fn = m.actF;
    for (long t = 1; t < N; ++t) { En = En * m.actE; Fn = Fn * m.actF; }
    if (!mat_is_zero(f, En) || !mat_is_zero(f, Fn)) return false;
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) {
            if (!f.is_zero(m.actE.at(i, j)) &&
                !affine_equal(f, m.weights[i], m.weights[j] + Affine(2)))
                return false;
            if (!f.is_zero(m.actF.at(i, j)) &&
                !affine_equal(f, m.weights[i], m.weights[j] - Affine(2)))
                return false;
        }
    return true;
}

} // namespace skein
