#pragma once

#include <cmath>
#include <complex>

#include <map>
#include <vector>

#include "skein/errors.hpp"

namespace skein {

// Dense matrix over an arbitrary ring element type.
template <class T>
class Mat {
public:
    Mat() = default;
    Mat(int rows, int cols) : r_(rows), c_(cols), d_(static_cast<size_t>(rows) * cols) {}

    static Mat identity(int n, const T& one) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = one;
        return m;
    }

    int rows() const { return r_; }
    int cols() const { return c_; }

    T& at(int i, int j) { return d_[static_cast<size_t>(i) * c_ + j]; }
    const T& at(int i, int j) const { return d_[static_cast<size_t>(i) * c_ + j]; }

    Mat operator+(const Mat& o) const {
        Mat m(r_, c_);
        for (size_t i = 0; i < d_.size(); ++i) m.d_[i] = d_[i] + o.d_[i];
        return m;
    }
    Mat operator-(const Mat& o) const {
        Mat m(r_, c_);
        for (size_t i = 0; i < d_.size(); ++i) m.d_[i] = d_[i] - o.d_[i];
        return m;
    }
    Mat operator*(const Mat& o) const {
        if (c_ != o.r_) throw error("matrix shape mismatch in product");
        Mat m(r_, o.c_);
        for (int i = 0; i < r_; ++i)
            for (int k = 0; k < c_; ++k) {
                const T& a = at(i, k);
                if (a == T{}) continue;
                for (int j = 0; j < o.c_; ++j) {
                    const T& b = o.at(k, j);
                    if (b == T{}) continue;
                    m.at(i, j) = m.at(i, j) + a * b;
                }
            }
        return m;
    }
    Mat scaled(const T& s) const {
        Mat m(r_, c_);
        for (size_t i = 0; i < d_.size(); ++i) m.d_[i] = d_[i] * s;
        return m;
    }
    Mat transpose() const {
        Mat m(c_, r_);
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j) m.at(j, i) = at(i, j);
        return m;
    }

    // Kronecker product with index convention (i1,i2) -> i1*o.rows+i2.
    Mat kron(const Mat& o) const {
        Mat m(r_ * o.r_, c_ * o.c_);
        for (int i1 = 0; i1 < r_; ++i1)
            for (int j1 = 0; j1 < c_; ++j1) {
                const T& a = at(i1, j1);
                if (a == T{}) continue;
                for (int i2 = 0; i2 < o.r_; ++i2)
                    for (int j2 = 0; j2 < o.c_; ++j2)
                        m.at(i1 * o.r_ + i2, j1 * o.c_ + j2) = a * o.at(i2, j2);
            }
        return m;
    }

    std::vector<T> col(int j) const {
        std::vector<T> v(r_);
        for (int i = 0; i < r_; ++i) v[i] = at(i, j);
        return v;
    }

private:
    int r_ = 0, c_ = 0;
    std::vector<T> d_;
};

// Column-sparse matrix; column j holds the image of basis vector j.
template <class T>
class SpMat {
public:
    SpMat() = default;
    SpMat(int rows, int cols) : r_(rows), cols_(cols) {}

    static SpMat identity(int n, const T& one) {
        SpMat m(n, n);
        for (int i = 0; i < n; ++i) m.set(i, i, one);
        return m;
    }
    static SpMat diagonal(const std::vector<T>& d) {
        SpMat m(static_cast<int>(d.size()), static_cast<int>(d.size()));
        for (size_t i = 0; i < d.size(); ++i)
            if (!(d[i] == T{})) m.set(static_cast<int>(i), static_cast<int>(i), d[i]);
        return m;
    }

    int rows() const { return r_; }
    int cols() const { return static_cast<int>(cols_.size()); }
    const std::map<int, T>& column(int j) const { return cols_[j]; }

    void set(int i, int j, const T& v) {
        if (v == T{}) cols_[j].erase(i);
        else cols_[j][i] = v;
    }
    void add(int i, int j, const T& v) {
        auto it = cols_[j].find(i);
        if (it == cols_[j].end()) {
            if (!(v == T{})) cols_[j][i] = v;
        } else {
            it->second = it->second + v;
            if (it->second == T{}) cols_[j].erase(it);
        }
    }
    T get(int i, int j) const {
        auto it = cols_[j].find(i);
        return it == cols_[j].end() ? T{} : it->second;
    }

    size_t nnz() const {
        size_t n = 0;
        for (const auto& c : cols_) n += c.size();
        return n;
    }

    SpMat operator+(const SpMat& o) const {
        SpMat m = *this;
        for (int j = 0; j < o.cols(); ++j)
            for (const auto& [i, v] : o.cols_[j]) m.add(i, j, v);
        return m;
    }
    SpMat operator-(const SpMat& o) const {
        SpMat m = *this;
        for (int j = 0; j < o.cols(); ++j)
            for (const auto& [i, v] : o.cols_[j]) m.add(i, j, T{} - v);
        return m;
    }
    // this * o
    SpMat operator*(const SpMat& o) const {
        if (cols() != o.r_) throw error("sparse shape mismatch in product");
        SpMat m(r_, o.cols());
        for (int j = 0; j < o.cols(); ++j)
            for (const auto& [k, b] : o.cols_[j])
                for (const auto& [i, a] : cols_[k]) m.add(i, j, a * b);
        return m;
    }
    SpMat scaled(const T& s) const {
        SpMat m(r_, cols());
        if (s == T{}) return m;
        for (int j = 0; j < cols(); ++j)
            for (const auto& [i, v] : cols_[j]) m.set(i, j, v * s);
        return m;
    }

    Mat<T> to_dense() const {
        Mat<T> m(r_, cols());
        for (int j = 0; j < cols(); ++j)
            for (const auto& [i, v] : cols_[j]) m.at(i, j) = v;
        return m;
    }

private:
    int r_ = 0;
    std::vector<std::map<int, T>> cols_;
};

// --- field-aware algorithms ---------------------------------------------

// Pivot quality: numeric magnitude in floating mode, 1 for any nonzero exact
// element (exact fields pick the first nonzero pivot).
template <class F>
double pivot_magnitude(const F& f, const typename F::Elt& x) {
    if constexpr (requires { f.tolerance(); }) return std::abs(f.to_complex(x));
    else { (void)f; (void)x; return 1.0; }
}

template <class F>
double scale_of(const F& f, const Mat<typename F::Elt>& m) {
    double s = 1.0;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            double a = std::abs(f.to_complex(m.at(i, j)));
            if (a > s) s = a;
        }
    return s;
}

template <class F>
bool mat_is_zero(const F& f, const Mat<typename F::Elt>& m, double scale = -1) {
    (void)scale;
    double s = 1.0;
    if constexpr (requires { f.tolerance(); }) s = scale < 0 ? scale_of(f, m) : scale;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (!f.is_zero(m.at(i, j), s)) return false;
    return true;
}

template <class F>
bool mats_equal(const F& f, const Mat<typename F::Elt>& a, const Mat<typename F::Elt>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    double s = 1.0;
    if constexpr (requires { f.tolerance(); }) s = std::max(scale_of(f, a), scale_of(f, b));
    Mat<typename F::Elt> d = a - b;
    for (int i = 0; i < d.rows(); ++i)
        for (int j = 0; j < d.cols(); ++j)
            if (!f.is_zero(d.at(i, j), s)) return false;
    return true;
}

// Row echelon rank; destroys its copy of the matrix.
template <class F>
int rank_of(const F& f, Mat<typename F::Elt> m) {
    using Elt = typename F::Elt;
    double s = 1.0;
    if constexpr (requires { f.tolerance(); }) s = scale_of(f, m);
    int rank = 0;
    for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
        int piv = -1;
        double best = 0;
        for (int i = rank; i < m.rows(); ++i) {
            if (f.is_zero(m.at(i, col), s)) continue;
            double a = pivot_magnitude(f, m.at(i, col));
            if (piv < 0 || a > best) { piv = i; best = a; }
        }
        if (piv < 0) continue;
        if (piv != rank)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(rank, j));
        Elt inv = f.one() / m.at(rank, col);
        for (int j = col; j < m.cols(); ++j) m.at(rank, j) = m.at(rank, j) * inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == rank) continue;
            Elt c = m.at(i, col);
            if (f.is_zero(c, s)) continue;
            for (int j = col; j < m.cols(); ++j)
                m.at(i, j) = m.at(i, j) - c * m.at(rank, j);
        }
        ++rank;
    }
    return rank;
}

// Basis of the right kernel of m.
template <class F>
std::vector<std::vector<typename F::Elt>> kernel_basis(const F& f, Mat<typename F::Elt> m) {
    using Elt = typename F::Elt;
    double s = 1.0;
    if constexpr (requires { f.tolerance(); }) s = scale_of(f, m);
    int rows = m.rows(), cols = m.cols();
    std::vector<int> pivot_col;
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int piv = -1;
        double best = 0;
        for (int i = rank; i < rows; ++i) {
            if (f.is_zero(m.at(i, col), s)) continue;
            double a = pivot_magnitude(f, m.at(i, col));
            if (piv < 0 || a > best) { piv = i; best = a; }
        }
        if (piv < 0) continue;
        if (piv != rank)
            for (int j = 0; j < cols; ++j) std::swap(m.at(piv, j), m.at(rank, j));
        Elt inv = f.one() / m.at(rank, col);
        for (int j = col; j < cols; ++j) m.at(rank, j) = m.at(rank, j) * inv;
        for (int i = 0; i < rows; ++i) {
            if (i == rank) continue;
            Elt c = m.at(i, col);
            if (f.is_zero(c, s)) continue;
            for (int j = col; j < cols; ++j)
                m.at(i, j) = m.at(i, j) - c * m.at(rank, j);
        }
        pivot_col.push_back(col);
        ++rank;
    }
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<Elt>> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Elt> v(cols, f.zero());
        v[free] = f.one();
        for (int r = 0; r < rank; ++r) v[pivot_col[r]] = f.zero() - m.at(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Maintains a growing RREF basis of row vectors; insert returns true when the
// vector was independent of the current span.
template <class F>
class IncrementalSpan {
public:
    using Elt = typename F::Elt;
    explicit IncrementalSpan(const F& f, int dim) : f_(f), dim_(dim) {}

    int size() const { return static_cast<int>(rows_.size()); }

    bool insert(std::vector<Elt> v, double scale = 1.0) {
        for (size_t r = 0; r < rows_.size(); ++r) {
            const Elt& c = v[pivots_[r]];
            if (f_.is_zero(c, scale)) continue;
            Elt cc = c;
            for (int j = 0; j < dim_; ++j) v[j] = v[j] - cc * rows_[r][j];
        }
        int p = -1;
        double best = 0;
        for (int j = 0; j < dim_; ++j) {
            if (f_.is_zero(v[j], scale)) continue;
            double a = pivot_magnitude(f_, v[j]);
            if (p < 0 || a > best) { p = j; best = a; }
        }
        if (p < 0) return false;
        Elt inv = f_.one() / v[p];
        for (int j = 0; j < dim_; ++j) v[j] = v[j] * inv;
        for (size_t r = 0; r < rows_.size(); ++r) {
            Elt c = rows_[r][p];
            if (f_.is_zero(c, scale)) continue;
            for (int j = 0; j < dim_; ++j) rows_[r][j] = rows_[r][j] - c * v[j];
        }
        rows_.push_back(std::move(v));
        pivots_.push_back(p);
        return true;
    }

private:
    const F& f_;
    int dim_;
    std::vector<std::vector<Elt>> rows_;
    std::vector<int> pivots_;
};

// Dense inverse by Gauss-Jordan elimination.
template <class F>
Mat<typename F::Elt> inverse_of(const F& f, const Mat<typename F::Elt>& a) {
    using Elt = typename F::Elt;
    if (a.rows() != a.cols()) throw error("inverse of a non-square matrix");
    int n = a.rows();
    double s = 1.0;
    if constexpr (requires { f.tolerance(); }) s = scale_of(f, a);
    Mat<Elt> work(n, 2 * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            work.at(i, j) = a.at(i, j);
            work.at(i, n + j) = (i == j) ? f.one() : f.zero();
        }
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        double best = 0;
        for (int r = col; r < n; ++r) {
            if (f.is_zero(work.at(r, col), s)) continue;
            double m = pivot_magnitude(f, work.at(r, col));
            if (piv < 0 || m > best) { piv = r; best = m; }
        }
        if (piv < 0) throw degenerate_error("singular matrix");
        if (piv != col)
            for (int j = 0; j < 2 * n; ++j) std::swap(work.at(piv, j), work.at(col, j));
        Elt inv = f.one() / work.at(col, col);
        for (int j = 0; j < 2 * n; ++j) work.at(col, j) = work.at(col, j) * inv;
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            Elt c = work.at(r, col);
            if (f.is_zero(c, s)) continue;
            for (int j = 0; j < 2 * n; ++j)
                work.at(r, j) = work.at(r, j) - c * work.at(col, j);
        }
    }
    Mat<Elt> out(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.at(i, j) = work.at(i, n + j);
    return out;
}

// The unique scalar s with a = s*b, for b a nonzero matrix; throws
// degenerate_error when a is not proportional to b.
template <class F>
typename F::Elt proportionality(const F& f, const Mat<typename F::Elt>& a,
                                const Mat<typename F::Elt>& b) {
    double s = 1.0;
    if constexpr (requires { f.tolerance(); }) s = std::max(scale_of(f, a), scale_of(f, b));
    int pi = -1, pj = -1;
    double best = 0;
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) {
            if (f.is_zero(b.at(i, j), s)) continue;
            double m = pivot_magnitude(f, b.at(i, j));
            if (pi < 0 || m > best) { pi = i; pj = j; best = m; }
        }
    if (pi < 0) throw degenerate_error("proportionality against the zero matrix");
    typename F::Elt ratio = a.at(pi, pj) / b.at(pi, pj);
    if (!mats_equal(f, a, b.scaled(ratio)))
        throw degenerate_error("matrices are not proportional");
    return ratio;
}

} // namespace skein
