#pragma once

#include "stralg/field.hpp"

#include <cassert>
#include <optional>
#include <vector>

namespace stralg {

// Dense row-major matrix over an exact field. Zero-dimensional shapes are
// legal everywhere; they show up constantly as empty vertex spaces.
template <class F>
struct Matrix {
    using Elem = typename F::Elem;

    F f;
    int rows = 0;
    int cols = 0;
    std::vector<Elem> a;

    Matrix() = default;
    Matrix(F field, int r, int c)
        : f(field), rows(r), cols(c), a(static_cast<size_t>(r) * c, field.zero()) {}

    Elem& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const Elem& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    static Matrix identity(F field, int n) {
        Matrix m(field, n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = field.one();
        return m;
    }

    bool is_zero() const {
        for (const auto& x : a)
            if (!f.is_zero(x)) return false;
        return true;
    }

    bool operator==(const Matrix& o) const {
        if (rows != o.rows || cols != o.cols) return false;
        for (size_t i = 0; i < a.size(); ++i)
            if (!f.eq(a[i], o.a[i])) return false;
        return true;
    }
};

template <class F>
Matrix<F> mul(const Matrix<F>& x, const Matrix<F>& y) {
    assert(x.cols == y.rows);
    Matrix<F> r(x.f, x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const auto& v = x.at(i, k);
            if (x.f.is_zero(v)) continue;
            for (int j = 0; j < y.cols; ++j)
                r.at(i, j) = x.f.add(r.at(i, j), x.f.mul(v, y.at(k, j)));
        }
    return r;
}

template <class F>
Matrix<F> add(const Matrix<F>& x, const Matrix<F>& y) {
    assert(x.rows == y.rows && x.cols == y.cols);
    Matrix<F> r = x;
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = x.f.add(r.a[i], y.a[i]);
    return r;
}

template <class F>
Matrix<F> sub(const Matrix<F>& x, const Matrix<F>& y) {
    assert(x.rows == y.rows && x.cols == y.cols);
    Matrix<F> r = x;
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = x.f.sub(r.a[i], y.a[i]);
    return r;
}

template <class F>
Matrix<F> scale(const Matrix<F>& x, const typename F::Elem& c) {
    Matrix<F> r = x;
    for (auto& v : r.a) v = x.f.mul(v, c);
    return r;
}

template <class F>
Matrix<F> transpose(const Matrix<F>& x) {
    Matrix<F> r(x.f, x.cols, x.rows);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < x.cols; ++j) r.at(j, i) = x.at(i, j);
    return r;
}

// Stack y below x.
template <class F>
Matrix<F> vstack(const Matrix<F>& x, const Matrix<F>& y) {
    assert(x.cols == y.cols);
    Matrix<F> r(x.f, x.rows + y.rows, x.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < x.cols; ++j) r.at(i, j) = x.at(i, j);
    for (int i = 0; i < y.rows; ++i)
        for (int j = 0; j < y.cols; ++j) r.at(x.rows + i, j) = y.at(i, j);
    return r;
}

// Place y to the right of x.
template <class F>
Matrix<F> hstack(const Matrix<F>& x, const Matrix<F>& y) {
    assert(x.rows == y.rows);
    Matrix<F> r(x.f, x.rows, x.cols + y.cols);
    for (int i = 0; i < x.rows; ++i) {
        for (int j = 0; j < x.cols; ++j) r.at(i, j) = x.at(i, j);
        for (int j = 0; j < y.cols; ++j) r.at(i, x.cols + j) = y.at(i, j);
    }
    return r;
}

template <class F>
Matrix<F> block_diag(const Matrix<F>& x, const Matrix<F>& y) {
    Matrix<F> r(x.f, x.rows + y.rows, x.cols + y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < x.cols; ++j) r.at(i, j) = x.at(i, j);
    for (int i = 0; i < y.rows; ++i)
        for (int j = 0; j < y.cols; ++j) r.at(x.rows + i, x.cols + j) = y.at(i, j);
    return r;
}

// In-place reduced row echelon form with deterministic first-nonzero
// pivoting. Returns the pivot column of every pivot row, in order.
template <class F>
std::vector<int> rref(Matrix<F>& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int pr = -1;
        for (int i = row; i < m.rows; ++i)
            if (!m.f.is_zero(m.at(i, col))) { pr = i; break; }
        if (pr < 0) continue;
        if (pr != row)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(row, j), m.at(pr, j));
        const auto piv_inv = m.f.inv(m.at(row, col));
        for (int j = col; j < m.cols; ++j) m.at(row, j) = m.f.mul(m.at(row, j), piv_inv);
        for (int i = 0; i < m.rows; ++i) {
            if (i == row) continue;
            const auto c = m.at(i, col);
            if (m.f.is_zero(c)) continue;
            for (int j = col; j < m.cols; ++j)
                m.at(i, j) = m.f.sub(m.at(i, j), m.f.mul(c, m.at(row, j)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class F>
int rank(Matrix<F> m) {
    return static_cast<int>(rref(m).size());
}

template <class F>
struct LinearSolution {
    bool consistent = false;
    Matrix<F> particular; // cols(A) x cols(B)
    Matrix<F> kernel;     // cols(A) x nullity, basis of the null space
};

// Solve A X = B exactly for all columns of B at once; free variables of the
// particular solution are set to zero. The kernel basis is the standard one
// read off the reduced echelon form.
template <class F>
LinearSolution<F> solve(const Matrix<F>& A, const Matrix<F>& B) {
    assert(A.rows == B.rows);
    Matrix<F> aug = hstack(A, B);
    std::vector<int> pivots = rref(aug);

    LinearSolution<F> out;
    out.particular = Matrix<F>(A.f, A.cols, B.cols);
    // A pivot in the augmented block means an inconsistent row.
    for (int c : pivots)
        if (c >= A.cols) return out;
    out.consistent = true;

    std::vector<int> pivot_row_of_col(A.cols, -1);
    for (int r = 0; r < static_cast<int>(pivots.size()); ++r)
        pivot_row_of_col[pivots[r]] = r;

    for (int r = 0; r < static_cast<int>(pivots.size()); ++r)
        for (int j = 0; j < B.cols; ++j)
            out.particular.at(pivots[r], j) = aug.at(r, A.cols + j);

    std::vector<int> free_cols;
    for (int c = 0; c < A.cols; ++c)
        if (pivot_row_of_col[c] < 0) free_cols.push_back(c);

    out.kernel = Matrix<F>(A.f, A.cols, static_cast<int>(free_cols.size()));
    for (int k = 0; k < static_cast<int>(free_cols.size()); ++k) {
        const int fc = free_cols[k];
        out.kernel.at(fc, k) = A.f.one();
        for (int r = 0; r < static_cast<int>(pivots.size()); ++r)
            out.kernel.at(pivots[r], k) = A.f.neg(aug.at(r, fc));
    }
    return out;
}

template <class F>
Matrix<F> kernel_basis(const Matrix<F>& A) {
    Matrix<F> zero(A.f, A.rows, 0);
    return solve(A, zero).kernel;
}

template <class F>
std::optional<Matrix<F>> inverse(const Matrix<F>& A) {
    if (A.rows != A.cols) return std::nullopt;
    auto sol = solve(A, Matrix<F>::identity(A.f, A.rows));
    if (!sol.consistent || sol.kernel.cols != 0) return std::nullopt;
    return sol.particular;
}

template <class F>
struct QuotientBasis {
    Matrix<F> proj;    // (ambient - r) x ambient
    Matrix<F> section; // ambient x (ambient - r)
    int dim = 0;
};

// Quotient of k^ambient by the column span of `span_cols`. proj * section is
// the identity on the quotient and ker(proj) is exactly the span.
template <class F>
QuotientBasis<F> quotient_basis(const Matrix<F>& span_cols) {
    const F f = span_cols.f;
    const int n = span_cols.rows;
    Matrix<F> R = transpose(span_cols);
    std::vector<int> pivots = rref(R);
    const int r = static_cast<int>(pivots.size());

    std::vector<bool> is_pivot(n, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<int> non_pivot;
    for (int c = 0; c < n; ++c)
        if (!is_pivot[c]) non_pivot.push_back(c);

    QuotientBasis<F> out;
    out.dim = n - r;
    out.proj = Matrix<F>(f, out.dim, n);
    out.section = Matrix<F>(f, n, out.dim);

    // proj(v) = (v - sum_i v[p_i] R_i) restricted to non-pivot coordinates.
    for (int k = 0; k < out.dim; ++k) {
        const int c = non_pivot[k];
        out.proj.at(k, c) = f.one();
        for (int i = 0; i < r; ++i)
            out.proj.at(k, pivots[i]) = f.neg(R.at(i, c));
        out.section.at(c, k) = f.one();
    }
    return out;
}

template <class F>
std::vector<typename F::Elem> mat_vec(const Matrix<F>& A,
                                      const std::vector<typename F::Elem>& v) {
    assert(static_cast<int>(v.size()) == A.cols);
    std::vector<typename F::Elem> r(A.rows, A.f.zero());
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j)
            r[i] = A.f.add(r[i], A.f.mul(A.at(i, j), v[j]));
    return r;
}

} // namespace stralg
