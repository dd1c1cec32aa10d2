#pragma once

#include <cstddef>
#include <ostream>
#include <utility>
#include <vector>

#include "coverhom/errors.hpp"

namespace coverhom {

/// Dense matrix over an exact field scalar K. K must provide value semantics,
/// field arithmetic, is_zero(), and equality. Everything here is pure; results
/// are unique (canonical RREF conventions) so downstream bases are reproducible.
template <class K>
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols, K(0)) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = K(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    K& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const K& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    Matrix operator-() const {
        Matrix r = *this;
        for (auto& x : r.e_) x = -x;
        return r;
    }

    Matrix& operator+=(const Matrix& o) {
        require_same_shape(o);
        for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        require_same_shape(o);
        for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
        return *this;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw error("Matrix: shape mismatch in product");
        Matrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const K& aik = a(i, k);
                if (aik.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const K& bkj = b(k, j);
                    if (!bkj.is_zero()) r(i, j) += aik * bkj;
                }
            }
        return r;
    }

    friend Matrix operator*(const K& c, Matrix m) {
        for (auto& x : m.e_) x = c * x;
        return m;
    }

    std::vector<K> apply(const std::vector<K>& v) const {
        if (v.size() != cols_) throw error("Matrix: shape mismatch in apply");
        std::vector<K> r(rows_, K(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (!(*this)(i, j).is_zero() && !v[j].is_zero()) r[i] += (*this)(i, j) * v[j];
        return r;
    }

    Matrix transposed() const {
        Matrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    bool is_zero() const {
        for (const auto& x : e_)
            if (!x.is_zero()) return false;
        return true;
    }

    std::vector<K> column(std::size_t j) const {
        std::vector<K> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }
    void set_column(std::size_t j, const std::vector<K>& c) {
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = c[i];
    }

    static Matrix from_columns(const std::vector<std::vector<K>>& cols, std::size_t nrows) {
        Matrix m(nrows, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) m.set_column(j, cols[j]);
        return m;
    }

    struct RrefResult {
        std::size_t rank{};
        Matrix reduced;
        std::vector<std::size_t> pivot_columns;
    };

    /// Unique reduced row-echelon form (leading ones, pivot columns cleared,
    /// pivots chosen top-to-bottom, left-to-right).
    RrefResult rref() const {
        Matrix m = *this;
        std::vector<std::size_t> pivots;
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
            std::size_t sel = r;
            while (sel < rows_ && m(sel, c).is_zero()) ++sel;
            if (sel == rows_) continue;
            if (sel != r)
                for (std::size_t j = 0; j < cols_; ++j) std::swap(m(sel, j), m(r, j));
            const K inv = K(1) / m(r, c);
            for (std::size_t j = c; j < cols_; ++j) m(r, j) = inv * m(r, j);
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == r || m(i, c).is_zero()) continue;
                const K f = m(i, c);
                for (std::size_t j = c; j < cols_; ++j) m(i, j) -= f * m(r, j);
            }
            pivots.push_back(c);
            ++r;
        }
        return {r, std::move(m), std::move(pivots)};
    }

    std::size_t rank() const { return rref().rank; }

    /// Canonical basis of the right null space: one vector per free column in
    /// increasing column order, each with a 1 in its free coordinate.
    std::vector<std::vector<K>> kernel_basis() const {
        auto rr = rref();
        std::vector<bool> is_pivot(cols_, false);
        for (auto p : rr.pivot_columns) is_pivot[p] = true;
        std::vector<std::vector<K>> basis;
        for (std::size_t f = 0; f < cols_; ++f) {
            if (is_pivot[f]) continue;
            std::vector<K> v(cols_, K(0));
            v[f] = K(1);
            for (std::size_t i = 0; i < rr.pivot_columns.size(); ++i)
                v[rr.pivot_columns[i]] = -rr.reduced(i, f);
            basis.push_back(std::move(v));
        }
        return basis;
    }

    /// Solves this * x = b; throws if inconsistent. When the system is
    /// underdetermined, free variables are set to zero (canonical solution).
    std::vector<K> solve(const std::vector<K>& b) const {
        if (b.size() != rows_) throw error("Matrix: shape mismatch in solve");
        Matrix aug(rows_, cols_ + 1);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
            aug(i, cols_) = b[i];
        }
        auto rr = aug.rref();
        std::vector<K> x(cols_, K(0));
        for (std::size_t i = 0; i < rr.pivot_columns.size(); ++i) {
            if (rr.pivot_columns[i] == cols_)
                throw error("Matrix: inconsistent linear system");
            x[rr.pivot_columns[i]] = rr.reduced(i, cols_);
        }
        return x;
    }

    /// Inverse of a square matrix; throws if singular.
    Matrix inverse() const {
        if (rows_ != cols_) throw error("Matrix: inverse of non-square matrix");
        Matrix aug(rows_, 2 * cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
            aug(i, cols_ + i) = K(1);
        }
        auto rr = aug.rref();
        if (rr.rank != rows_) throw error("Matrix: singular matrix");
        for (std::size_t i = 0; i < rows_; ++i)
            if (rr.pivot_columns[i] != i) throw error("Matrix: singular matrix");
        Matrix inv(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) inv(i, j) = rr.reduced(i, cols_ + j);
        return inv;
    }

    friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
        for (std::size_t i = 0; i < m.rows_; ++i) {
            os << (i == 0 ? "[" : " ") << "[";
            for (std::size_t j = 0; j < m.cols_; ++j)
                os << m(i, j) << (j + 1 < m.cols_ ? ", " : "");
            os << "]" << (i + 1 < m.rows_ ? ",\n" : "]");
        }
        return os;
    }

  private:
    void require_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw error("Matrix: shape mismatch");
    }

    std::size_t rows_, cols_;
    std::vector<K> e_;
};

/// Column span of the given vectors in canonical form: RREF of the transpose,
/// read back as vectors (so two spanning sets of the same subspace produce
/// identical bases).
template <class K>
std::vector<std::vector<K>> canonical_span(const std::vector<std::vector<K>>& vecs,
                                           std::size_t dim) {
    if (vecs.empty()) return {};
    Matrix<K> m(vecs.size(), dim);
    for (std::size_t i = 0; i < vecs.size(); ++i)
        for (std::size_t j = 0; j < dim; ++j) m(i, j) = vecs[i][j];
    auto rr = m.rref();
    std::vector<std::vector<K>> basis;
    for (std::size_t i = 0; i < rr.rank; ++i) {
        std::vector<K> v(dim);
        for (std::size_t j = 0; j < dim; ++j) v[j] = rr.reduced(i, j);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Basis of the intersection of two subspaces given by spanning vectors.
template <class K>
std::vector<std::vector<K>> intersect_spans(const std::vector<std::vector<K>>& a,
                                            const std::vector<std::vector<K>>& b,
                                            std::size_t dim) {
    if (a.empty() || b.empty()) return {};
    // Kernel of [A | -B] gives coefficients (x, y) with A x = B y.
    Matrix<K> m(dim, a.size() + b.size());
    for (std::size_t j = 0; j < a.size(); ++j)
        for (std::size_t i = 0; i < dim; ++i) m(i, j) = a[j][i];
    for (std::size_t j = 0; j < b.size(); ++j)
        for (std::size_t i = 0; i < dim; ++i) m(i, a.size() + j) = -b[j][i];
    std::vector<std::vector<K>> result;
    for (const auto& k : m.kernel_basis()) {
        std::vector<K> v(dim, K(0));
        for (std::size_t j = 0; j < a.size(); ++j)
            for (std::size_t i = 0; i < dim; ++i) v[i] += k[j] * a[j][i];
        result.push_back(std::move(v));
    }
    return canonical_span(result, dim);
}

} // namespace coverhom
